"""Shared fixtures and strategies for the test suite."""

import functools
import math

from hypothesis import strategies as st

from typeseq import NumericalSemigroup, enumerate_semigroups, from_generators


@st.composite
def generator_tuples(draw, max_value: int = 24, max_size: int = 4):
    """Coprime generator tuples with small entries."""
    gens = draw(
        st.lists(
            st.integers(min_value=2, max_value=max_value),
            min_size=1,
            max_size=max_size,
        )
    )
    g = math.gcd(*gens) if len(gens) > 1 else gens[0]
    if g != 1:
        # force coprimality with one extra generator
        gens.append(g + 1)
    return tuple(gens)


@st.composite
def small_semigroup_st(draw, max_genus: int = 7):
    """A semigroup drawn from the exhaustive list up to max_genus."""
    pool = semigroups_up_to(max_genus)
    return draw(st.sampled_from(pool))


@functools.lru_cache(maxsize=4)
def semigroups_up_to(max_genus: int) -> tuple[NumericalSemigroup, ...]:
    return tuple(enumerate_semigroups(max_genus=max_genus))


NEGATIVE_A_GENS = (9, 15, 17, 23, 25, 29, 31)


def negative_a_semigroup() -> NumericalSemigroup:
    return from_generators(NEGATIVE_A_GENS)
