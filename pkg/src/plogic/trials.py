"""Repeated independent tests: run-count conjunction series, their
disjunctions, exact binomial probabilities, the variance tail bound, and
a seeded sampling harness.

The n-th test is a fresh atom, and independence with equal marginals is
realized by the product measure on those atoms.
"""

from __future__ import annotations

import hashlib
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyRangeError
from .formulas import And, Atom, AtomRef, Not, Or, Sentence
from .measures import BFunction

_RationalLike = Fraction | int


@dataclass(frozen=True)
class TestSequence:
    """r distinct test atoms with one shared success probability."""

    atoms: tuple[Atom, ...]
    p: Fraction

    def __post_init__(self):
        if len(self.atoms) < 1:
            raise ValueError("need at least one test")
        if len({a.id for a in self.atoms}) != len(self.atoms):
            raise ValueError("test atoms must be distinct")
        if not 0 <= self.p <= 1:
            raise ValueError(f"success probability {self.p} outside [0, 1]")

    @classmethod
    def of(cls, r: int, p: _RationalLike) -> "TestSequence":
        return cls(tuple(Atom(i, f"X{i + 1}") for i in range(r)), Fraction(p))

    @property
    def r(self) -> int:
        return len(self.atoms)

    def st(self, n: int) -> Sentence:
        """The n-th test sentence, 1-based."""
        if not 1 <= n <= self.r:
            raise ValueError(f"test index {n} outside 1..{self.r}")
        return AtomRef(self.atoms[n - 1])


@dataclass(frozen=True)
class RangeSpec:
    """Real bounds [a, b] and the derived integer run-count window [k, l]:
    k is the least integer with a <= k, l the greatest with l <= b, both
    clamped to [0, r]."""

    a: Fraction
    b: Fraction
    k: int
    l: int

    @classmethod
    def derive(cls, a: _RationalLike, b: _RationalLike, r: int) -> "RangeSpec":
        a = Fraction(a)
        b = Fraction(b)
        k = max(math.ceil(a), 0)
        l = min(math.floor(b), r)
        return cls(a, b, k, l)

    @property
    def empty(self) -> bool:
        return self.k > self.l


def enumerate_series(ts: TestSequence, r: int, k: int) -> list[Sentence]:
    """All left-nested conjunction chains of the first r tests with the
    positive occurrences at exactly k positions, positive-position sets in
    lexicographic order."""
    if not 1 <= r <= ts.r:
        raise ValueError(f"range {r} outside 1..{ts.r}")
    if not 0 <= k <= r:
        raise ValueError(f"run count {k} outside 0..{r}")

    def build(n: int, j: int) -> list[Sentence]:
        test = ts.st(n)
        if n == 1:
            if j == 1:
                return [test]
            if j == 0:
                return [Not(test)]
            return []
        out = [And(prefix, Not(test)) for prefix in build(n - 1, j)]
        if j >= 1:
            out.extend(And(prefix, test) for prefix in build(n - 1, j - 1))
        return out

    return build(r, k)


def t_disjunction(ts: TestSequence, r: int, k: int) -> Sentence:
    """Left-fold disjunction of the (r, k) series in enumeration order."""
    series = enumerate_series(ts, r, k)
    node = series[0]
    for term in series[1:]:
        node = Or(node, term)
    return node


def t_range(ts: TestSequence, r: int, a: _RationalLike, b: _RationalLike) -> Sentence:
    """Disjunction of the run-count disjunctions for every integer count in
    the derived window; an empty window is an error, not a silent falsum."""
    spec = RangeSpec.derive(a, b, r)
    if spec.empty:
        raise EmptyRangeError(
            f"bounds [{spec.a}, {spec.b}] leave no run count in 0..{r}")
    node = t_disjunction(ts, r, spec.k)
    for j in range(spec.k + 1, spec.l + 1):
        node = Or(node, t_disjunction(ts, r, j))
    return node


def product_bfunction(ts: TestSequence) -> BFunction:
    """Product measure: each test succeeds independently with mass p."""
    r = ts.r
    p = ts.p
    q = 1 - p
    mass = []
    for idx in range(1 << r):
        m = Fraction(1)
        for pos in range(r):
            m *= p if (idx >> (r - 1 - pos)) & 1 else q
        mass.append(m)
    return BFunction(r, tuple(mass))


def point_prob(r: int, k: int, p: _RationalLike) -> Fraction:
    """Exact binomial term C(r, k) p^k (1-p)^(r-k)."""
    p = Fraction(p)
    return math.comb(r, k) * p**k * (1 - p) ** (r - k)


def range_prob(r: int, a: _RationalLike, b: _RationalLike, p: _RationalLike) -> Fraction:
    """Exact sum of binomial terms over the derived run-count window;
    an empty window sums to zero."""
    if r < 1:
        raise ValueError("need at least one test")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"success probability {p} outside [0, 1]")
    spec = RangeSpec.derive(a, b, r)
    if spec.empty:
        return Fraction(0)
    num = p.numerator
    den = p.denominator
    comp = den - num  # numerator of 1-p over the same denominator
    # Sum C(r,j) num^j comp^(r-j) over j, all over den^r.
    total = 0
    coeff = math.comb(r, spec.k)
    power = num**spec.k * comp ** (r - spec.k)
    for j in range(spec.k, spec.l + 1):
        total += coeff * power
        if j < spec.l:
            coeff = coeff * (r - j) // (j + 1)
            if comp:
                power = power * num // comp
            else:
                power = num ** (j + 1) * comp ** (r - j - 1)
    return Fraction(total, den**r)


def lln_bound(r: int, p: _RationalLike, eps: _RationalLike) -> Fraction:
    """Variance tail bound 1 - p(1-p)/(r eps^2); exact and unclamped, so
    it may be negative (vacuous) for small r."""
    p = Fraction(p)
    eps = Fraction(eps)
    if r < 1:
        raise ValueError("need at least one test")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if not 0 <= p <= 1:
        raise ValueError(f"success probability {p} outside [0, 1]")
    return 1 - p * (1 - p) / (r * eps * eps)


def _trial_frequency(seed: int, index: int, r: int, p: Fraction) -> Fraction:
    """One sampled world from the product measure, reduced to its success
    frequency.  The stream is derived from (seed, index) alone, so results
    never depend on execution order."""
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    rng = random.Random(digest)
    num = p.numerator
    den = p.denominator
    successes = 0
    for _ in range(r):
        if rng.randrange(den) < num:
            successes += 1
    return Fraction(successes, r)


def simulate_frequencies(
    ts: TestSequence, trials: int, seed: int, workers: int = 1
) -> list[Fraction]:
    """Sampled success frequencies for ``trials`` independent worlds.

    Deterministic given the seed, and identical for any worker count: each
    trial owns a private stream keyed by (seed, trial index).
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    r = ts.r
    p = ts.p
    if workers <= 1:
        return [_trial_frequency(seed, i, r, p) for i in range(trials)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda i: _trial_frequency(seed, i, r, p), range(trials)))
