"""Core semigroup model: constructors, codec, invariants, predicates."""

import pytest
from hypothesis import given, settings

import oracles
from conftest import generator_tuples, negative_a_semigroup, semigroups_up_to
from typeseq import (
    ConductorNotTight,
    EmptyGenerators,
    EncodingError,
    NotClosed,
    NotCoprime,
    NumericalSemigroup,
    from_generators,
    from_small_elements,
    is_arf,
    oversemigroups,
    predicates,
    ring_classification,
)


class TestConstruction:
    def test_three_four_five(self):
        S = from_generators((3, 4, 5))
        assert S.conductor == 3
        assert S.genus == 2
        assert S.multiplicity == 3
        assert S.type == 2
        assert S.small_elements == (0, 3)
        assert S.gaps == (1, 2)
        assert S.pseudo_frobenius == (1, 2)
        assert S.minimal_generators == (3, 4, 5)

    def test_two_generators(self):
        S = from_generators((2, 3))
        assert S.conductor == 2
        assert S.genus == 1
        assert S.type == 1

    def test_seven_generator_ring(self):
        S = negative_a_semigroup()
        assert S.conductor == 38
        assert S.genus == 20
        assert S.multiplicity == 9
        assert S.type == 3
        assert S.pseudo_frobenius == (16, 21, 37)
        assert S.minimal_generators == (9, 15, 17, 23, 25, 29, 31)

    def test_maximal_type(self):
        S = from_generators((6, 7, 8, 9, 10, 11))
        assert S.type == 5 == S.multiplicity - 1
        assert S.pseudo_frobenius == (1, 2, 3, 4, 5)

    def test_whole_numbers(self):
        N = from_generators((1,))
        assert N.conductor == 0
        assert N.genus == 0
        assert N.multiplicity == 1
        assert N.type == 1
        assert N.small_elements == (0,)
        assert N.pseudo_frobenius == (-1,)
        assert N.minimal_generators == (1,)

    def test_redundant_generators_are_dropped(self):
        S = from_generators((4, 5, 7, 9, 13))
        assert S.minimal_generators == (4, 5, 7)
        assert S == from_generators((4, 5, 7))

    def test_empty_generators(self):
        with pytest.raises(EmptyGenerators):
            from_generators(())

    def test_nonpositive_generators(self):
        with pytest.raises(ValueError):
            from_generators((0,))
        with pytest.raises(ValueError):
            from_generators((-2, 3))

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            from_generators((4, 6))
        with pytest.raises(NotCoprime):
            from_generators((6, 10))

    def test_from_small_elements(self):
        S = from_small_elements((0, 2, 4), 4)
        assert S == from_generators((2, 5))

    def test_small_elements_must_be_closed(self):
        with pytest.raises(NotClosed):
            from_small_elements((0, 2), 5)

    def test_conductor_must_be_tight(self):
        with pytest.raises(ConductorNotTight):
            from_small_elements((0, 2, 3), 3)
        with pytest.raises(ConductorNotTight):
            from_small_elements((0, 1), 1)


class TestCodec:
    def test_encode(self):
        assert from_generators((3, 4, 5)).encode() == "0,3|3"
        assert from_generators((1,)).encode() == "0|0"
        assert from_generators((2, 5)).encode() == "0,2,4|4"

    def test_decode(self):
        assert NumericalSemigroup.decode("0,3|3") == from_generators((3, 4, 5))
        assert NumericalSemigroup.decode("0|0") == from_generators((1,))

    def test_decode_rejects_garbage(self):
        for text in ("", "x", "0,3"):
            with pytest.raises(EncodingError):
                NumericalSemigroup.decode(text)

    def test_decode_rejects_missing_zero(self):
        with pytest.raises(ValueError):
            NumericalSemigroup.decode("3|3")

    def test_decode_rejects_loose_conductor(self):
        with pytest.raises(ConductorNotTight):
            NumericalSemigroup.decode("0,3|4")
        with pytest.raises(ConductorNotTight):
            NumericalSemigroup.decode("0,2|3")

    @given(generator_tuples())
    @settings(max_examples=150, deadline=None)
    def test_roundtrip(self, gens):
        S = from_generators(gens)
        assert NumericalSemigroup.decode(S.encode()) == S

    def test_equality_and_hash_on_normal_form(self):
        a = from_generators((3, 4, 5))
        b = from_small_elements((0, 3), 3)
        assert a == b and hash(a) == hash(b)
        assert a != from_generators((3, 5, 7))


class TestMembership:
    @given(generator_tuples())
    @settings(max_examples=120, deadline=None)
    def test_members_match_sieve(self, gens):
        S = from_generators(gens)
        members, c, genus, mult = oracles.semigroup_facts(gens)
        assert S.conductor == c
        assert S.genus == genus
        assert S.multiplicity == mult
        bound = c + 5
        got = [x for x in range(bound) if x in S]
        want = sorted(m for m in members if m < bound)
        assert got == want

    @given(generator_tuples())
    @settings(max_examples=80, deadline=None)
    def test_pseudo_frobenius_matches_oracle(self, gens):
        S = from_generators(gens)
        members, c, _, _ = oracles.semigroup_facts(gens)
        assert list(S.pseudo_frobenius) == oracles.pseudo_frobenius(members, c)
        assert S.type == len(S.pseudo_frobenius)

    @given(generator_tuples())
    @settings(max_examples=80, deadline=None)
    def test_minimal_generators_match_oracle(self, gens):
        S = from_generators(gens)
        members, c, _, mult = oracles.semigroup_facts(gens)
        assert list(S.minimal_generators) == oracles.minimal_generators(
            members, c, mult
        )

    def test_small_element_extends_past_conductor(self):
        S = from_generators((3, 4, 5))
        assert [S.small_element(j) for j in range(5)] == [0, 3, 4, 5, 6]
        assert [S.small_index(v) for v in (0, 3, 4, 5)] == [0, 1, 2, 3]
        assert S.n == 1

    def test_negative_numbers_are_not_members(self):
        S = from_generators((3, 4, 5))
        assert -1 not in S
        assert -100 not in S


class TestPredicates:
    def test_gorenstein_iff_type_one(self):
        for S in semigroups_up_to(7):
            p = predicates(S)
            assert p.is_gorenstein == (S.type == 1)
            assert p.is_gorenstein == (2 * S.genus == S.conductor)

    def test_almost_gorenstein_examples(self):
        # ideals=() keeps this to the numeric criteria; the quantified
        # equivalences get their own coverage in test_classification
        assert ring_classification(
            from_generators((3, 4, 5)), ideals=()
        ).almost_gorenstein
        assert ring_classification(
            negative_a_semigroup(), ideals=()
        ).almost_gorenstein
        G = NumericalSemigroup.decode("0,4,8,9,12,13|16")
        assert not ring_classification(G, ideals=()).almost_gorenstein

    def test_arf_matches_brute_force(self):
        for S in semigroups_up_to(7):
            c = S.conductor
            members = [x for x in range(2 * c + 3) if x in S]
            brute = all(
                2 * x - y in S
                for x in members
                for y in members
                if y <= x
            )
            assert is_arf(S) == brute, S.encode()

    def test_arf_examples(self):
        assert is_arf(from_generators((2, 3)))
        assert is_arf(from_generators((3, 4, 5)))
        assert not is_arf(from_generators((4, 5, 7)))


class TestOversemigroups:
    def test_chain_over_345(self):
        got = [T.encode() for T in oversemigroups(from_generators((3, 4, 5)))]
        assert got == ["0,3|3", "0,2|2", "0|0"]

    def test_count_is_monotone_sanity(self):
        # every oversemigroup of S other than N has its own oversemigroups
        # inside the list for S
        S = from_generators((4, 5, 7))
        overs = set(T.encode() for T in oversemigroups(S))
        for T in oversemigroups(S):
            assert set(U.encode() for U in oversemigroups(T)) <= overs

    def test_whole_numbers_has_only_itself(self):
        N = from_generators((1,))
        assert [T.encode() for T in oversemigroups(N)] == ["0|0"]
