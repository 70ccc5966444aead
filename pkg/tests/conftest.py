"""Shared generators for the test suite: random sentences, random exact
measures, and exhaustive sentence corpora."""

from __future__ import annotations

import random
from fractions import Fraction

from plogic.formulas import And, Atom, AtomRef, Implies, Not, Or, Sentence
from plogic.measures import BFunction


def make_atoms(names: str) -> list[AtomRef]:
    return [AtomRef(Atom(i, n)) for i, n in enumerate(names)]


def random_sentence(rng: random.Random, atoms, depth: int,
                    sugar: bool = True) -> Sentence:
    """Random sentence tree of the given depth budget (atoms cost 1)."""
    if depth <= 1 or rng.random() < 0.2:
        return rng.choice(atoms)
    roll = rng.random()
    if roll < 0.35:
        return Not(random_sentence(rng, atoms, depth - 1, sugar))
    left = random_sentence(rng, atoms, depth - 1, sugar)
    right = random_sentence(rng, atoms, depth - 1, sugar)
    if not sugar or roll < 0.6:
        return And(left, right)
    if roll < 0.8:
        return Or(left, right)
    return Implies(left, right)


def random_bfunction(rng: random.Random, n: int) -> BFunction:
    """Random strictly positive exact-rational measure on 2^n minterms."""
    weights = [rng.randrange(1, 30) for _ in range(1 << n)]
    total = sum(weights)
    return BFunction(n, tuple(Fraction(w, total) for w in weights))


def random_sparse_bfunction(rng: random.Random, n: int) -> BFunction:
    """Random measure that zeroes some minterms (but never all)."""
    size = 1 << n
    weights = [rng.randrange(0, 4) for _ in range(size)]
    if not any(weights):
        weights[rng.randrange(size)] = 1
    total = sum(weights)
    return BFunction(n, tuple(Fraction(w, total) for w in weights))


def exhaustive_sentences(atoms, depth: int) -> list[Sentence]:
    """Every distinct kernel tree of depth <= depth (atoms have depth 1)."""
    if depth == 1:
        return list(atoms)
    smaller = exhaustive_sentences(atoms, depth - 1)
    out: dict[Sentence, None] = dict.fromkeys(smaller)
    for s in smaller:
        out.setdefault(Not(s), None)
    for left in smaller:
        for right in smaller:
            out.setdefault(And(left, right), None)
    return list(out)
