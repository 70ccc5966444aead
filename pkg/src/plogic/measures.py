"""Exact-rational probability valuations over the sentences of a finite
basic set.

A valuation is stored as a measure on the 2^n minterms; the value of any
sentence is the mass of its satisfying minterms, which gives additivity
over every conjunction split by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    DuplicateMintermError,
    NegativeMassError,
    SumNotOneError,
    WidthMismatchError,
    ZeroConditionError,
)
from .formulas import (
    MAX_ATOMS,
    And,
    Sentence,
    TooManyAtomsError,
    Valuation,
    truth_table,
)

_ONE = Fraction(1)
_ZERO = Fraction(0)


@dataclass(frozen=True)
class BFunction:
    """Probability measure on minterms; index = valuation bits read as a
    bitstring with atom 0 most significant."""

    n: int
    mass: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n > MAX_ATOMS:
            raise TooManyAtomsError(f"{self.n} atoms exceed the cap of {MAX_ATOMS}")
        if len(self.mass) != (1 << self.n):
            raise ValueError(
                f"need {1 << self.n} masses for {self.n} atoms, got {len(self.mass)}")
        if any(m < 0 for m in self.mass):
            raise NegativeMassError("minterm masses must be nonnegative")
        if sum(self.mass) != 1:
            raise SumNotOneError(f"masses sum to {sum(self.mass)}, not 1")

    @classmethod
    def uniform(cls, n: int) -> "BFunction":
        size = 1 << n
        return cls(n, (Fraction(1, size),) * size)

    @classmethod
    def from_weights(cls, n: int, weights: Mapping[int, Fraction]) -> "BFunction":
        """Masses for the listed minterm indices; the rest are zero."""
        mass = [_ZERO] * (1 << n)
        for idx, w in weights.items():
            if not 0 <= idx < (1 << n):
                raise ValueError(f"minterm index {idx} out of range for n={n}")
            mass[idx] = Fraction(w)
        return cls(n, tuple(mass))


def from_valuation(v: Valuation) -> BFunction:
    """Point mass on the valuation's minterm; sentence values then agree
    with two-valued evaluation everywhere."""
    return BFunction.from_weights(v.n, {v.minterm_index: _ONE})


def b_eval(bf: BFunction, s: Sentence) -> Fraction:
    """Mass of the satisfying minterms of ``s``; exact."""
    table = truth_table(s, range(bf.n))
    total = _ZERO
    idx = 0
    while table:
        if table & 1:
            total += bf.mass[idx]
        table >>= 1
        idx += 1
    return total


def conditional_prob(bf: BFunction, b: Sentence, c: Sentence) -> Fraction:
    """Value of b given c: mass of (c and b) over mass of c."""
    denom = b_eval(bf, c)
    if denom == 0:
        raise ZeroConditionError("conditioning sentence has probability zero")
    return b_eval(bf, And(c, b)) / denom


def condition(bf: BFunction, c: Sentence) -> BFunction:
    """Measure restricted to the minterms satisfying c, renormalized; its
    sentence values equal the conditional probabilities given c."""
    denom = b_eval(bf, c)
    if denom == 0:
        raise ZeroConditionError("conditioning sentence has probability zero")
    table = truth_table(c, range(bf.n))
    mass = tuple(
        (m / denom if (table >> idx) & 1 else _ZERO)
        for idx, m in enumerate(bf.mass)
    )
    return BFunction(bf.n, mass)


def is_p_function(bf: BFunction, actual: Valuation) -> bool:
    """True iff every sentence of value 1 holds in the designated world.

    Equivalent finite form: the actual world's minterm carries positive
    mass.  If it does not, the disjunction of the support minterms has
    value 1 yet is false at the actual world; if it does, any sentence of
    value 1 must contain the support, hence the actual world.
    """
    if actual.n != bf.n:
        raise ValueError(f"valuation width {actual.n} does not match n={bf.n}")
    return bf.mass[actual.minterm_index] > 0


@dataclass(frozen=True)
class PairRelation:
    """Exact-rational facts about a sentence pair under one measure."""

    inconsistent: bool
    independent: bool


def classify_pair(bf: BFunction, a: Sentence, b: Sentence) -> PairRelation:
    """Inconsistent: the conjunction has measure zero.  Independent: the
    conjunction's measure is the product of the measures."""
    pa = b_eval(bf, a)
    pb = b_eval(bf, b)
    pab = b_eval(bf, And(a, b))
    return PairRelation(inconsistent=(pab == 0), independent=(pab == pa * pb))


# --- Distribution file format -------------------------------------------------
#
# One minterm per line: "<bitstring> <numerator>/<denominator>".  Omitted
# minterms have mass zero.  Width is fixed by the first line.


def load_distribution(text: str | Iterable[str]) -> BFunction:
    """Parse the line-based distribution format, validating width,
    duplicates, signs, and that the masses sum exactly to 1."""
    if isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = list(text)
    n = None
    weights: dict[int, Fraction] = {}
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise WidthMismatchError(
                f"line {lineno}: expected '<bits> <p/q>', got {stripped!r}")
        bits, value = parts
        if not bits or any(c not in "01" for c in bits):
            raise WidthMismatchError(f"line {lineno}: bad bitstring {bits!r}")
        if n is None:
            n = len(bits)
            if n > MAX_ATOMS:
                raise TooManyAtomsError(f"{n} atoms exceed the cap of {MAX_ATOMS}")
        elif len(bits) != n:
            raise WidthMismatchError(
                f"line {lineno}: bitstring width {len(bits)} != {n}")
        try:
            mass = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise WidthMismatchError(
                f"line {lineno}: bad rational {value!r}") from None
        if mass < 0:
            raise NegativeMassError(f"line {lineno}: negative mass {value}")
        idx = int(bits, 2)
        if idx in weights:
            raise DuplicateMintermError(f"line {lineno}: duplicate minterm {bits}")
        weights[idx] = mass
    if n is None:
        raise WidthMismatchError("distribution file has no minterm lines")
    if sum(weights.values()) != 1:
        raise SumNotOneError(
            f"masses sum to {sum(weights.values())}, not 1")
    return BFunction.from_weights(n, weights)


def dump_distribution(bf: BFunction) -> str:
    """Render the nonzero minterms in the distribution file format."""
    out = []
    for idx, m in enumerate(bf.mass):
        if m != 0:
            out.append(f"{idx:0{bf.n}b} {m.numerator}/{m.denominator}")
    return "\n".join(out) + "\n"
