"""Sentence trees over a finite basic set, and their two-valued semantics.

The kernel language has exactly two connectives, negation and conjunction.
Disjunction and implication are constructor sugar that expands at build
time, so every downstream algorithm handles two node shapes plus atoms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AtomOutOfRangeError, TooManyAtomsError

#: Hard cap on basic-set size; keeps exhaustive valuation sweeps tractable.
MAX_ATOMS = 20


@dataclass(frozen=True)
class Atom:
    """One element of the basic set: a dense index plus a display name."""

    id: int
    name: str


class Sentence:
    """Immutable sentence tree; subclasses are AtomRef, Not and And.

    Nodes precompute a structural hash so that dictionary-heavy algorithms
    (proof deduplication, truth-table memoization) stay cheap.
    """

    __slots__ = ("_hash", "__weakref__")

    def __hash__(self):
        return self._hash

    def __str__(self):
        return _plain_format(self)


class AtomRef(Sentence):
    __slots__ = ("atom",)

    def __init__(self, atom: Atom):
        self.atom = atom
        self._hash = hash((1, atom.id, atom.name))

    def __eq__(self, other):
        if self is other:
            return True
        return type(other) is AtomRef and self.atom == other.atom

    __hash__ = Sentence.__hash__

    def __repr__(self):
        return f"AtomRef({self.atom.id}:{self.atom.name})"


class Not(Sentence):
    __slots__ = ("child",)

    def __init__(self, child: Sentence):
        self.child = child
        self._hash = hash((2, child._hash))

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is Not
            and self._hash == other._hash
            and self.child == other.child
        )

    __hash__ = Sentence.__hash__

    def __repr__(self):
        return f"Not({self.child!r})"


class And(Sentence):
    __slots__ = ("left", "right")

    def __init__(self, left: Sentence, right: Sentence):
        self.left = left
        self.right = right
        self._hash = hash((3, left._hash, right._hash))

    def __eq__(self, other):
        if self is other:
            return True
        return (
            type(other) is And
            and self._hash == other._hash
            and self.left == other.left
            and self.right == other.right
        )

    __hash__ = Sentence.__hash__

    def __repr__(self):
        return f"And({self.left!r}, {self.right!r})"


def Or(a: Sentence, b: Sentence) -> Sentence:
    """Disjunction sugar: builds the negated conjunction of the negations."""
    return Not(And(Not(a), Not(b)))


def Implies(a: Sentence, b: Sentence) -> Sentence:
    """Implication sugar: builds the negation of (a and not-b)."""
    return Not(And(a, Not(b)))


def as_implication(s: Sentence) -> tuple[Sentence, Sentence] | None:
    """Destructure the implication shape not(x and not(y)) into (x, y)."""
    if type(s) is Not:
        body = s.child
        if type(body) is And and type(body.right) is Not:
            return body.left, body.right.child
    return None


def _plain_format(s: Sentence) -> str:
    if type(s) is AtomRef:
        return s.atom.name
    if type(s) is Not:
        child = _plain_format(s.child)
        if type(s.child) is AtomRef:
            return f"!{child}"
        return f"!({child})" if type(s.child) is And else f"!{child}"
    left = _plain_format(s.left)
    right = _plain_format(s.right)
    if type(s.left) is And:
        left = f"({left})"
    if type(s.right) is And:
        right = f"({right})"
    return f"{left} & {right}"


@dataclass(frozen=True)
class Valuation:
    """Total 0/1 assignment over the basic set; atom i reads bits[i]."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("valuation bits must be 0 or 1")

    @classmethod
    def from_string(cls, text: str) -> "Valuation":
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"bad valuation bitstring: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def of_minterm(cls, n: int, index: int) -> "Valuation":
        """Valuation whose minterm index is ``index``; atom 0 is the MSB."""
        if not 0 <= index < (1 << n):
            raise ValueError(f"minterm index {index} out of range for n={n}")
        return cls(tuple((index >> (n - 1 - i)) & 1 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def minterm_index(self) -> int:
        idx = 0
        for b in self.bits:
            idx = (idx << 1) | b
        return idx


def atom_ids(s: Sentence) -> frozenset[int]:
    """Set of atom ids occurring in the sentence."""
    found: set[int] = set()
    stack = [s]
    while stack:
        node = stack.pop()
        t = type(node)
        if t is AtomRef:
            found.add(node.atom.id)
        elif t is Not:
            stack.append(node.child)
        else:
            stack.append(node.left)
            stack.append(node.right)
    return frozenset(found)


def atoms_of(s: Sentence) -> tuple[Atom, ...]:
    """Occurring atoms, sorted by id."""
    found: dict[int, Atom] = {}
    stack = [s]
    while stack:
        node = stack.pop()
        t = type(node)
        if t is AtomRef:
            found[node.atom.id] = node.atom
        elif t is Not:
            stack.append(node.child)
        else:
            stack.append(node.left)
            stack.append(node.right)
    return tuple(found[i] for i in sorted(found))


def evaluate(s: Sentence, v: Valuation) -> int:
    """Two-valued evaluation: not flips, and multiplies."""
    bits = v.bits
    n = len(bits)
    memo: dict[int, int] = {}

    def rec(node: Sentence) -> int:
        key = id(node)
        got = memo.get(key)
        if got is not None:
            return got
        t = type(node)
        if t is AtomRef:
            i = node.atom.id
            if not 0 <= i < n:
                raise AtomOutOfRangeError(
                    f"atom {node.atom.name} (id {i}) outside valuation of size {n}"
                )
            val = bits[i]
        elif t is Not:
            val = 1 - rec(node.child)
        else:
            val = rec(node.left) & rec(node.right)
        memo[key] = val
        return val

    return rec(s)


def _atom_mask(position: int, m: int) -> int:
    """Bitmask over the 2^m minterm indices where the atom at ``position``
    (0 = most significant) is true."""
    shift = m - 1 - position
    half = 1 << shift
    unit = ((1 << half) - 1) << half  # one low period: zeros then ones
    period = half << 1
    size = 1 << m
    repeats = size // period
    # Replicate the period pattern via the base-2^period repunit.
    repunit = ((1 << (period * repeats)) - 1) // ((1 << period) - 1)
    return unit * repunit


def truth_table(s: Sentence, ids: Sequence[int]) -> int:
    """Truth table of ``s`` over the listed atom ids, as a bitmask.

    Bit j of the result is the value of ``s`` under the valuation whose
    minterm index is j (first listed atom most significant).
    """
    ids = list(ids)
    m = len(ids)
    if m > MAX_ATOMS:
        raise TooManyAtomsError(f"{m} atoms exceed the cap of {MAX_ATOMS}")
    size = 1 << m
    full = (1 << size) - 1
    base = {a: _atom_mask(i, m) for i, a in enumerate(ids)}
    memo: dict[Sentence, int] = {}

    def rec(node: Sentence) -> int:
        got = memo.get(node)
        if got is not None:
            return got
        t = type(node)
        if t is AtomRef:
            try:
                val = base[node.atom.id]
            except KeyError:
                raise AtomOutOfRangeError(
                    f"atom {node.atom.name} (id {node.atom.id}) "
                    f"not among table atoms {ids}"
                ) from None
        elif t is Not:
            val = full ^ rec(node.child)
        else:
            val = rec(node.left) & rec(node.right)
        memo[node] = val
        return val

    return rec(s)


def is_tautology(s: Sentence) -> bool:
    """True iff the sentence evaluates to 1 under every valuation of its
    occurring atoms."""
    ids = sorted(atom_ids(s))
    size = 1 << len(ids)
    return truth_table(s, ids) == (1 << size) - 1


def is_unsatisfiable(s: Sentence) -> bool:
    """True iff no valuation of the occurring atoms satisfies the sentence."""
    ids = sorted(atom_ids(s))
    return truth_table(s, ids) == 0


def semantic_equal(a: Sentence, b: Sentence) -> bool:
    """True iff the two sentences agree under every valuation of the union
    of their occurring atoms."""
    ids = sorted(atom_ids(a) | atom_ids(b))
    return truth_table(a, ids) == truth_table(b, ids)


def all_valuations(n: int) -> Iterable[Valuation]:
    """All 2^n valuations over a basic set of size n, in minterm order."""
    if n > MAX_ATOMS:
        raise TooManyAtomsError(f"{n} atoms exceed the cap of {MAX_ATOMS}")
    for idx in range(1 << n):
        yield Valuation.of_minterm(n, idx)


def basic_set(names: Iterable[str]) -> tuple[Atom, ...]:
    """Build a basic set from unique names; ids follow listing order."""
    atoms = []
    seen = set()
    for i, name in enumerate(names):
        if name in seen:
            raise ValueError(f"duplicate atom name {name!r}")
        seen.add(name)
        atoms.append(Atom(i, name))
    if len(atoms) > MAX_ATOMS:
        raise TooManyAtomsError(f"basic set of {len(atoms)} exceeds {MAX_ATOMS}")
    return tuple(atoms)
