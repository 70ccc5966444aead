"""Complete alternative sets and the favorable-count probability."""

import random
from fractions import Fraction

import pytest

from conftest import make_atoms
from plogic.classical import (
    CompleteSet,
    Favorability,
    check_complete,
    classical_probability,
    classify_favorability,
)
from plogic.errors import (
    MixedMemberError,
    NotCompleteError,
    UnsatisfiableMemberError,
)
from plogic.formulas import And, Not, Or, Valuation, is_unsatisfiable
from plogic.measures import BFunction, b_eval

A, B, C = make_atoms("ABC")


def _minterm(atoms, bits):
    node = atoms[0] if bits[0] else Not(atoms[0])
    for ref, bit in zip(atoms[1:], bits[1:]):
        node = And(node, ref if bit else Not(ref))
    return node


def _minterms(atoms):
    n = len(atoms)
    return [_minterm(atoms, Valuation.of_minterm(n, i).bits) for i in range(1 << n)]


def _blocks_to_sentences(atoms, blocks):
    out = []
    terms = _minterms(atoms)
    for block in blocks:
        node = terms[block[0]]
        for idx in block[1:]:
            node = Or(node, terms[idx])
        out.append(node)
    return out


def _random_partition(rng, size, parts):
    indices = list(range(size))
    rng.shuffle(indices)
    cuts = sorted(rng.sample(range(1, size), parts - 1))
    blocks = []
    start = 0
    for cut in cuts + [size]:
        blocks.append(sorted(indices[start:cut]))
        start = cut
    return blocks


class TestCompleteness:
    def test_all_minterms_are_complete(self):
        assert check_complete(_minterms([A, B]))

    def test_atom_and_negation(self):
        assert check_complete([A, Not(A)])

    def test_overlapping_pair_is_not(self):
        assert not check_complete([A, B])

    def test_missing_world_is_not(self):
        assert not check_complete([And(A, B), And(Not(A), Not(B))])

    def test_empty_is_an_error(self):
        with pytest.raises(ValueError):
            check_complete([])

    def test_complete_set_type_validates(self):
        with pytest.raises(NotCompleteError):
            CompleteSet((A, B))
        cs = CompleteSet((A, Not(A)))
        assert len(cs.members) == 2


class TestFavorability:
    def test_conjunction_is_favorable_for_its_conjunct(self):
        assert classify_favorability(And(A, B), A) is Favorability.FAVORABLE

    def test_excluding_member_is_unfavorable(self):
        assert classify_favorability(And(Not(A), B), A) is Favorability.UNFAVORABLE

    def test_unrelated_atoms_are_neither(self):
        assert classify_favorability(B, A) is Favorability.NEITHER

    def test_unsatisfiable_member_reports_favorable_by_precedence(self):
        contradiction = And(A, Not(A))
        assert classify_favorability(contradiction, B) is Favorability.FAVORABLE

    def test_satisfiable_member_never_both(self):
        rng = random.Random(60)
        from conftest import random_sentence

        for _ in range(300):
            b = random_sentence(rng, [A, B, C], 4)
            a = random_sentence(rng, [A, B, C], 4)
            if is_unsatisfiable(b):
                continue
            verdict = classify_favorability(b, a)
            opposite = classify_favorability(b, Not(a))
            if verdict is Favorability.FAVORABLE:
                assert opposite is Favorability.UNFAVORABLE
            elif verdict is Favorability.UNFAVORABLE:
                assert opposite is Favorability.FAVORABLE


class TestClassicalProbability:
    def test_atom_over_two_atom_minterms(self):
        assert classical_probability(A, _minterms([A, B])) == Fraction(1, 2)

    def test_atom_and_negation(self):
        assert classical_probability(A, [A, Not(A)]) == Fraction(1, 2)

    def test_six_sided_die(self):
        # six alternatives carved out of a three-atom world; the event is
        # "first or second face", regardless of how big each block is
        rng = random.Random(61)
        blocks = _random_partition(rng, 8, 6)
        members = _blocks_to_sentences([A, B, C], blocks)
        event = Or(members[0], members[1])
        assert classical_probability(event, members) == Fraction(1, 3)

    def test_rejects_mixed_member(self):
        with pytest.raises(MixedMemberError):
            classical_probability(B, [A, Not(A)])

    def test_rejects_incomplete(self):
        with pytest.raises(NotCompleteError):
            classical_probability(A, [A, B])

    def test_rejects_unsatisfiable_member(self):
        # complete, and every satisfiable member classifies cleanly, so the
        # contradiction itself must trigger the rejection
        members = [A, Not(A), And(A, Not(A))]
        assert check_complete(members)
        with pytest.raises(UnsatisfiableMemberError):
            classical_probability(A, members)

    def test_favorable_count_matches_equiprobable_measure(self):
        """Partition replay: the ratio equals the event's mass under any
        measure that spreads 1/n over each block."""
        rng = random.Random(62)
        atoms = make_atoms("ABCD")
        for _ in range(60):
            n_atoms = rng.randrange(2, 5)
            pool = atoms[:n_atoms]
            size = 1 << n_atoms
            parts = rng.randrange(2, min(size, 7))
            blocks = _random_partition(rng, size, parts)
            members = _blocks_to_sentences(pool, blocks)
            chosen = [i for i in range(parts) if rng.random() < 0.5]
            if not chosen:
                chosen = [0]
            event = members[chosen[0]]
            for i in chosen[1:]:
                event = Or(event, members[i])
            ratio = classical_probability(event, members)
            assert ratio == Fraction(len(chosen), parts)
            share = Fraction(1, parts)
            weights = {}
            for block in blocks:
                per = share / len(block)
                for idx in block:
                    weights[idx] = per
            bf = BFunction.from_weights(n_atoms, weights)
            assert b_eval(bf, event) == ratio
            concentrated = BFunction.from_weights(
                n_atoms, {block[0]: share for block in blocks})
            assert b_eval(concentrated, event) == ratio
