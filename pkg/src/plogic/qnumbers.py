"""Sequence numbers: lazy rational sequences compared through the
density-one filter, with honest three-valued verdicts.

A value stores one representative sequence plus whatever structure its
construction declared -- a standard constant, a true limit, strict
positivity, a polynomial over the underlying sequence leaves, finitely
many edits against a base, or a periodic interleave.  Verdicts (equality,
order, classification) are decided exactly from declared structure and
degrade to Unknown with prefix evidence, never to a wrong yes or no.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .density import DEFAULT_HORIZON, NO, YES, Verdict, unknown
from .errors import ReciprocalOfInfinitesimalOrZeroError


class _Infinite:
    """Sentinel for a declared divergence to positive infinity."""

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()

_leaf_ids = itertools.count()

# Polynomial descriptors: monomial (sorted tuple of (leaf id, exponent)) to
# coefficient.  The empty monomial is the constant term; zero coefficients
# are dropped, so the zero polynomial is the empty mapping.
_Poly = dict


def _const_poly(c: Fraction) -> _Poly:
    return {(): c} if c else {}


def _leaf_poly(leaf: int) -> _Poly:
    return {((leaf, 1),): Fraction(1)}


def _poly_add(p: _Poly, q: _Poly) -> _Poly:
    out = dict(p)
    for mono, c in q.items():
        s = out.get(mono, 0) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return out


def _poly_neg(p: _Poly) -> _Poly:
    return {mono: -c for mono, c in p.items()}


def _poly_mul(p: _Poly, q: _Poly) -> _Poly:
    out: _Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            exps: dict[int, int] = {}
            for leaf, e in itertools.chain(m1, m2):
                exps[leaf] = exps.get(leaf, 0) + e
            mono = tuple(sorted(exps.items()))
            s = out.get(mono, 0) + c1 * c2
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


@dataclass(frozen=True, eq=False)
class QNumber:
    """One representative rational sequence with declared structure.

    ``seq`` must be a pure total map from positive indices to rationals.
    ``standard`` asserts filter-agreement with a constant, ``limit`` a true
    limit (INFINITE for divergence to +oo), ``strictly_positive`` that all
    terms exceed zero.  The remaining descriptors record how the value was
    built, for the verdict analyses.
    """

    seq: Callable[[int], Fraction]
    standard: Fraction | None = None
    limit: Fraction | _Infinite | None = None
    strictly_positive: bool = False
    poly: Mapping | None = None
    edit_base: "QNumber | None" = None
    edit_keys: frozenset[int] = frozenset()
    components: "tuple[QNumber, ...] | None" = None

    def term(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("sequence indices start at 1")
        return Fraction(self.seq(n))

    def prefix(self, count: int) -> list[Fraction]:
        return [self.term(n) for n in range(1, count + 1)]

    # Arithmetic sugar; dispatches through q_lift.
    def __add__(self, other):
        return q_lift("add", self, _coerce(other))

    __radd__ = __add__

    def __mul__(self, other):
        return q_lift("mul", self, _coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return q_lift("negate", self)

    def __sub__(self, other):
        return q_lift("add", self, q_lift("negate", _coerce(other)))

    def __rsub__(self, other):
        return q_lift("add", _coerce(other), q_lift("negate", self))

    def with_edits(self, edits: Mapping[int, Fraction]) -> "QNumber":
        """Same value with finitely many terms replaced; filter-level
        structure survives because the change set is finite."""
        fixed = {int(k): Fraction(v) for k, v in edits.items()}
        if any(k < 1 for k in fixed):
            raise ValueError("edit indices start at 1")
        base = self

        def seq(n, _b=base.seq, _f=fixed):
            got = _f.get(n)
            return got if got is not None else _b(n)

        root = base.edit_base if base.edit_base is not None else base
        keys = base.edit_keys | frozenset(fixed)
        return QNumber(
            seq,
            standard=base.standard,
            limit=base.limit,
            strictly_positive=base.strictly_positive
            and all(v > 0 for v in fixed.values()),
            poly=None,
            edit_base=root,
            edit_keys=keys,
        )


def _coerce(value) -> QNumber:
    if isinstance(value, QNumber):
        return value
    return standard(Fraction(value))


def standard(a) -> QNumber:
    """The constant sequence at ``a``: a standard value."""
    a = Fraction(a)
    return QNumber(
        lambda n, _a=a: _a,
        standard=a,
        limit=a,
        strictly_positive=a > 0,
        poly=_const_poly(a),
    )


def from_function(
    f: Callable[[int], Fraction],
    limit: Fraction | _Infinite | None = None,
    strictly_positive: bool = False,
) -> QNumber:
    """Wrap a pure sequence; the declared limit and sign are trusted by the
    verdict analyses and must be true of ``f``."""
    if limit is not None and not isinstance(limit, _Infinite):
        limit = Fraction(limit)
    return QNumber(
        f,
        limit=limit,
        strictly_positive=strictly_positive,
        poly=_leaf_poly(next(_leaf_ids)),
    )


def harmonic() -> QNumber:
    """The sequence 1/n: positive everywhere, limit zero."""
    return from_function(lambda n: Fraction(1, n), limit=Fraction(0),
                         strictly_positive=True)


def ramp() -> QNumber:
    """The sequence n: diverges to +oo."""
    return from_function(lambda n: Fraction(n), limit=INFINITE,
                         strictly_positive=True)


def cycle(components: Sequence[QNumber]) -> QNumber:
    """Interleave: term n comes from component (n-1) mod len."""
    comps = tuple(components)
    if not comps:
        raise ValueError("need at least one component")
    size = len(comps)

    def seq(n, _c=comps, _s=size):
        return _c[(n - 1) % _s].seq(n)

    same_standard = comps[0].standard
    if any(c.standard != same_standard for c in comps):
        same_standard = None
    same_limit = comps[0].limit
    if any(c.limit != same_limit for c in comps):
        same_limit = None
    return QNumber(
        seq,
        standard=same_standard,
        limit=same_limit,
        strictly_positive=all(c.strictly_positive for c in comps),
        poly=None,
        components=comps,
    )


# --- Lifted arithmetic ---------------------------------------------------------


def _lift_add(x: QNumber, y: QNumber) -> QNumber:
    def seq(n, _x=x.seq, _y=y.seq):
        return _x(n) + _y(n)

    std = x.standard + y.standard if (
        x.standard is not None and y.standard is not None) else None
    lx, ly = x.limit, y.limit
    limit: Fraction | _Infinite | None
    if lx is None or ly is None:
        limit = None
    elif isinstance(lx, _Infinite) or isinstance(ly, _Infinite):
        limit = INFINITE  # +oo plus a convergent, or +oo plus +oo
    else:
        limit = lx + ly
    poly = None
    if x.poly is not None and y.poly is not None:
        poly = _poly_add(x.poly, y.poly)
    return QNumber(seq, standard=std, limit=limit,
                   strictly_positive=x.strictly_positive and y.strictly_positive,
                   poly=poly)


def _lift_mul(x: QNumber, y: QNumber) -> QNumber:
    def seq(n, _x=x.seq, _y=y.seq):
        return _x(n) * _y(n)

    std = x.standard * y.standard if (
        x.standard is not None and y.standard is not None) else None
    lx, ly = x.limit, y.limit
    limit: Fraction | _Infinite | None
    if lx is None or ly is None:
        limit = None
    elif isinstance(lx, _Infinite) and isinstance(ly, _Infinite):
        limit = INFINITE
    elif isinstance(lx, _Infinite) or isinstance(ly, _Infinite):
        finite = ly if isinstance(lx, _Infinite) else lx
        limit = INFINITE if finite > 0 else None
    else:
        limit = lx * ly
    poly = None
    if x.poly is not None and y.poly is not None:
        poly = _poly_mul(x.poly, y.poly)
    return QNumber(seq, standard=std, limit=limit,
                   strictly_positive=x.strictly_positive and y.strictly_positive,
                   poly=poly)


def _lift_negate(x: QNumber) -> QNumber:
    def seq(n, _x=x.seq):
        return -_x(n)

    std = -x.standard if x.standard is not None else None
    limit = None
    if x.limit is not None and not isinstance(x.limit, _Infinite):
        limit = -x.limit
    poly = _poly_neg(x.poly) if x.poly is not None else None
    return QNumber(seq, standard=std, limit=limit, poly=poly)


def invertible(x: QNumber) -> Verdict:
    """Is zero strictly below |x| through the filter?  Yes exactly when
    reciprocal is admissible; note a positive infinitesimal qualifies (its
    reciprocal is an infinite value)."""
    if x.standard is not None:
        return YES if x.standard != 0 else NO
    if x.strictly_positive:
        return YES  # every term exceeds zero
    if x.limit is not None:
        if isinstance(x.limit, _Infinite) or x.limit != 0:
            return YES  # terms eventually bounded away from zero
    return _invert_unknown(x)


def _invert_unknown(x: QNumber) -> Verdict:
    count = sum(1 for n in range(1, DEFAULT_HORIZON + 1) if x.term(n) != 0)
    return unknown(DEFAULT_HORIZON, Fraction(count, DEFAULT_HORIZON))


def _lift_reciprocal(x: QNumber) -> QNumber:
    verdict = invertible(x)
    if not verdict.is_yes:
        raise ReciprocalOfInfinitesimalOrZeroError(
            f"reciprocal needs a Yes verdict that |x| > 0; got {verdict}")

    def seq(n, _x=x.seq):
        v = _x(n)
        return Fraction(0) if v == 0 else 1 / v  # zero set is filter-negligible

    std = 1 / x.standard if x.standard not in (None, 0) else None
    limit: Fraction | _Infinite | None = None
    if isinstance(x.limit, _Infinite):
        limit = Fraction(0)
    elif x.limit is not None and x.limit != 0:
        limit = 1 / x.limit
    elif x.limit == 0 and x.strictly_positive:
        limit = INFINITE
    return QNumber(seq, standard=std, limit=limit,
                   strictly_positive=x.strictly_positive)


_LIFTS = {
    "add": (_lift_add, 2),
    "+": (_lift_add, 2),
    "mul": (_lift_mul, 2),
    "*": (_lift_mul, 2),
    "negate": (_lift_negate, 1),
    "neg": (_lift_negate, 1),
    "reciprocal": (_lift_reciprocal, 1),
    "recip": (_lift_reciprocal, 1),
}


def q_lift(op: str, *args) -> QNumber:
    """Pointwise lift of a named rational operation; standard tags and
    declared structure propagate where sound.  Plain rationals coerce to
    their standard values."""
    try:
        fn, arity = _LIFTS[op]
    except KeyError:
        raise ValueError(f"unknown lift {op!r}") from None
    if len(args) != arity:
        raise ValueError(f"{op} expects {arity} arguments, got {len(args)}")
    return fn(*(_coerce(a) for a in args))


def reciprocal(x: QNumber) -> QNumber:
    return q_lift("reciprocal", x)


# --- Verdicts -------------------------------------------------------------------


def _strip_edits(x: QNumber) -> tuple[QNumber, frozenset[int]]:
    if x.edit_base is not None:
        return x.edit_base, x.edit_keys
    return x, frozenset()


def _diff_poly(x: QNumber, y: QNumber) -> _Poly | None:
    if x.poly is None or y.poly is None:
        return None
    return _poly_add(x.poly, _poly_neg(y.poly))


_FULL, _NULL, _UNDECIDED = "full", "null", "undecided"


def _agreement_class(x: QNumber, y: QNumber) -> str:
    """Conservative classification of {n : x_n = y_n}: provably of density
    one (it contains a filter set), provably of density zero, or undecided.
    """
    if x is y:
        return _FULL
    d = _diff_poly(x, y)
    if d is not None:
        if not d:
            return _FULL  # pointwise-identical sequences
        if set(d) == {()}:
            return _NULL  # constant nonzero difference
    if x.standard is not None and y.standard is not None:
        # Each standard pins its sequence on a filter set; on the
        # intersection the terms are the two constants.
        return _FULL if x.standard == y.standard else _NULL
    if _sign_separated(x, y):
        return _NULL
    lx, ly = x.limit, y.limit
    if lx is not None and ly is not None:
        if isinstance(lx, _Infinite) != isinstance(ly, _Infinite):
            return _NULL
        if not isinstance(lx, _Infinite) and lx != ly:
            return _NULL
    return _UNDECIDED


def _sign_separated(x: QNumber, y: QNumber) -> bool:
    """True when one side is a standard at or below zero and the other is
    strictly positive everywhere."""
    if x.standard is not None and x.standard <= 0 and y.strictly_positive:
        return True
    return y.standard is not None and y.standard <= 0 and x.strictly_positive


def q_equal(x: QNumber, y: QNumber, horizon: int = DEFAULT_HORIZON) -> Verdict:
    """Do the sequences agree on a density-one index set?"""
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    bx, _ = _strip_edits(x)
    by, _ = _strip_edits(y)
    cls = _agreement_class(bx, by)
    if cls == _FULL:
        return YES
    if cls == _NULL:
        return NO
    slots = _cycle_slots(bx, by)
    if slots is not None:
        classes = [_agreement_class(a, b) for a, b in slots]
        if all(c == _FULL for c in classes):
            return YES
        if all(c != _UNDECIDED for c in classes):
            return NO  # some slot never agrees: density < 1
    agree = sum(1 for n in range(1, horizon + 1) if x.term(n) == y.term(n))
    return unknown(horizon, Fraction(agree, horizon))


def _cycle_slots(x: QNumber, y: QNumber):
    """Pair each interleave component with its counterpart, when the
    structure makes slot positions line up."""
    if x.components is not None and y.components is not None:
        if len(x.components) == len(y.components):
            return list(zip(x.components, y.components))
        return None
    if x.components is not None:
        return [(c, y) for c in x.components]
    if y.components is not None:
        return [(x, c) for c in y.components]
    return None


def q_less(x: QNumber, y: QNumber, horizon: int = DEFAULT_HORIZON) -> Verdict:
    """Is x_n < y_n on a density-one index set?"""
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    bx, _ = _strip_edits(x)
    by, _ = _strip_edits(y)
    if bx is by:
        return NO
    d = _diff_poly(by, bx)  # y - x
    if d is not None:
        if not d:
            return NO
        if set(d) == {()}:
            return YES if d[()] > 0 else NO
    lx, ly = bx.limit, by.limit
    if lx is not None and ly is not None:
        xinf = isinstance(lx, _Infinite)
        yinf = isinstance(ly, _Infinite)
        if xinf and not yinf:
            return NO
        if yinf and not xinf:
            return YES
        if not xinf and not yinf and lx != ly:
            return YES if lx < ly else NO
    if bx.standard is not None and bx.standard <= 0 and by.strictly_positive:
        return YES
    if by.standard is not None and by.standard <= 0 and bx.strictly_positive:
        return NO
    below = sum(1 for n in range(1, horizon + 1) if x.term(n) < y.term(n))
    return unknown(horizon, Fraction(below, horizon))


@dataclass(frozen=True)
class Classification:
    """Size class of a sequence number; Unknown carries prefix evidence."""

    kind: str  # "infinitesimal" | "infinite" | "finite-appreciable" | "unknown"
    horizon: int | None = None
    sample: Fraction | None = None

    def __str__(self):
        if self.kind == "unknown":
            return f"unknown(term@{self.horizon}={self.sample})"
        return self.kind


def q_classify(x: QNumber, horizon: int = DEFAULT_HORIZON) -> Classification:
    """Infinitesimal: below every positive bound through the filter (the
    zero standard counts).  Infinite: above every natural bound.  Standard
    or convergent elsewhere: finite-appreciable."""
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    base, _ = _strip_edits(x)
    if base.standard is not None:
        return Classification("infinitesimal" if base.standard == 0
                              else "finite-appreciable")
    limit = base.limit
    if isinstance(limit, _Infinite):
        return Classification("infinite")
    if limit is not None:
        return Classification("infinitesimal" if limit == 0
                              else "finite-appreciable")
    return Classification("unknown", horizon, x.term(horizon))


def infinitely_close(x: QNumber, y: QNumber,
                     horizon: int = DEFAULT_HORIZON) -> Verdict:
    """Is |x - y| zero or infinitesimal?"""
    if q_equal(x, y, horizon).is_yes:
        return YES
    d = _diff_poly(x, y)
    if d is not None:
        if not d:
            return YES
        if set(d) == {()}:
            return YES if d[()] == 0 else NO
    bx, _ = _strip_edits(x)
    by, _ = _strip_edits(y)
    lx, ly = bx.limit, by.limit
    if lx is not None and ly is not None:
        xinf = isinstance(lx, _Infinite)
        yinf = isinstance(ly, _Infinite)
        if xinf and yinf:
            pass  # both diverge; the difference is unconstrained
        elif xinf != yinf:
            return NO
        else:
            return YES if lx == ly else NO
    diff = x - y
    return unknown(horizon, abs(diff.term(horizon)))
