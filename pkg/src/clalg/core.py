"""Carriers for finite CL-algebra candidates.

A candidate bundles a finite universe with a partial order, a fusion
table, an optional implication table, and designated elements bot, zero
and one.  Nothing here assumes the axioms hold: a candidate may be an
arbitrary (even inconsistent) table set, and the validator module is the
only place that decides whether it is an actual CL-algebra.

Universe elements are dense indices 0..n-1; display names are kept
alongside for parsing and reporting.  Subsets of the universe and order
rows are bit masks, which caps the universe at MAX_UNIVERSE elements so
every subset fits in one machine word.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterator

MAX_UNIVERSE = 64

Table = tuple[tuple[int, ...], ...]


class AlgebraError(Exception):
    """Base class for structural errors raised by algebra operations."""


class NotALattice(AlgebraError):
    """A pair of elements without a unique meet or join."""

    def __init__(self, x: int, y: int, kind: str, frontier: tuple[int, ...] = ()):
        self.x = x
        self.y = y
        self.kind = kind  # "meet" or "join"
        self.frontier = frontier
        super().__init__(f"no {kind} for elements {x} and {y}")


class ImplicationAbsent(AlgebraError):
    """An operation needed an implication table and none is available."""


class NoResidual(AlgebraError):
    """Some set {z : mult(x, z) <= y} has no unique maximum.

    `frontier` holds the maximal elements of the set (an antichain,
    empty when the set itself is empty); no implication table satisfying
    residuation can exist for the given fusion table.
    """

    def __init__(self, x: int, y: int, frontier: tuple[int, ...]):
        self.x = x
        self.y = y
        self.frontier = frontier
        super().__init__(f"residual undefined at ({x}, {y}); maximal candidates {frontier}")


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of `mask`, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class OrderRelation:
    """A reflexive relation stored as per-element up-set bit masks.

    up[x] has bit y set iff x <= y.  The relation is not required to be
    a partial order, let alone a lattice; defective relations are kept
    representable so the validator can report them with witnesses.
    """

    n: int
    up: tuple[int, ...]

    @classmethod
    def from_covers(cls, n: int, covers: list[tuple[int, int]] | tuple) -> "OrderRelation":
        """Reflexive-transitive closure of a covering (Hasse) edge list."""
        up = [1 << i for i in range(n)]
        changed = True
        while changed:
            changed = False
            for lo, hi in covers:
                merged = up[lo] | up[hi]
                if merged != up[lo]:
                    up[lo] = merged
                    changed = True
        return cls(n, tuple(up))

    @classmethod
    def from_leq(cls, n: int, leq) -> "OrderRelation":
        """Build from any truthy n x n matrix; the diagonal is forced on."""
        up = []
        for x in range(n):
            mask = 1 << x
            for y in range(n):
                if leq[x][y]:
                    mask |= 1 << y
            up.append(mask)
        return cls(n, tuple(up))

    @cached_property
    def dn(self) -> tuple[int, ...]:
        """dn[y] has bit x set iff x <= y."""
        dn = [0] * self.n
        for x, mask in enumerate(self.up):
            for y in iter_bits(mask):
                dn[y] |= 1 << x
        return tuple(dn)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def glb(self, x: int, y: int) -> int | None:
        """Greatest lower bound, or None when it does not exist uniquely."""
        lb = self.dn[x] & self.dn[y]
        for g in iter_bits(lb):
            if lb & ~self.dn[g] == 0:
                return g
        return None

    def lub(self, x: int, y: int) -> int | None:
        ub = self.up[x] & self.up[y]
        for g in iter_bits(ub):
            if ub & ~self.up[g] == 0:
                return g
        return None

    def maximal_in(self, mask: int) -> tuple[int, ...]:
        """Elements of `mask` with nothing of `mask` strictly above them."""
        return tuple(m for m in iter_bits(mask) if self.up[m] & mask == 1 << m)

    def minimal_in(self, mask: int) -> tuple[int, ...]:
        return tuple(m for m in iter_bits(mask) if self.dn[m] & mask == 1 << m)

    def greatest_in(self, mask: int) -> int | None:
        """The element of `mask` above all of `mask`, or None."""
        for g in iter_bits(mask):
            if mask & ~self.dn[g] == 0:
                return g
        return None

    def least(self) -> int | None:
        full = (1 << self.n) - 1
        for x in range(self.n):
            if self.up[x] == full:
                return x
        return None

    def is_total(self) -> bool:
        return all(
            self.leq(x, y) or self.leq(y, x)
            for x in range(self.n)
            for y in range(x + 1, self.n)
        )

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges (lo, hi), sorted by (lo, hi)."""
        out = []
        for lo in range(self.n):
            for hi in iter_bits(self.up[lo] & ~(1 << lo)):
                between = self.up[lo] & self.dn[hi] & ~(1 << lo) & ~(1 << hi)
                if between == 0:
                    out.append((lo, hi))
        return tuple(out)


def _check_table(label: str, table, n: int) -> None:
    if len(table) != n:
        raise ValueError(f"{label} table must have {n} rows")
    for row in table:
        if len(row) != n:
            raise ValueError(f"{label} table rows must have {n} entries")
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"{label} table entry {v} out of range")


@dataclass(frozen=True)
class AlgebraCandidate:
    """An unvalidated finite algebra: universe, order, tables, designations.

    `imp_table` may be None; the validator derives it from residuation
    when possible.  Instances are immutable and all operations are pure.
    """

    name: str
    elements: tuple[str, ...]
    order: OrderRelation
    mult_table: Table
    imp_table: Table | None
    bot: int
    zero: int
    one: int

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise ValueError("universe must be non-empty")
        if n > MAX_UNIVERSE:
            raise ValueError(f"universe exceeds {MAX_UNIVERSE} elements")
        if len(set(self.elements)) != n:
            raise ValueError("element names must be pairwise distinct")
        for nm in self.elements:
            if not nm or any(c.isspace() for c in nm):
                raise ValueError(f"bad element name {nm!r}")
        if self.order.n != n:
            raise ValueError("order size does not match universe")
        _check_table("mult", self.mult_table, n)
        if self.imp_table is not None:
            _check_table("imp", self.imp_table, n)
        for label, v in (("bot", self.bot), ("zero", self.zero), ("one", self.one)):
            if not 0 <= v < n:
                raise ValueError(f"{label} index {v} out of range")

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"unknown element {name!r}") from None

    def name_of(self, x: int) -> str:
        return self.elements[x]

    def leq(self, x: int, y: int) -> bool:
        return self.order.leq(x, y)

    def meet(self, x: int, y: int) -> int:
        g = self.order.glb(x, y)
        if g is None:
            lb = self.order.dn[x] & self.order.dn[y]
            raise NotALattice(x, y, "meet", self.order.maximal_in(lb))
        return g

    def join(self, x: int, y: int) -> int:
        g = self.order.lub(x, y)
        if g is None:
            ub = self.order.up[x] & self.order.up[y]
            raise NotALattice(x, y, "join", self.order.minimal_in(ub))
        return g

    def mult(self, x: int, y: int) -> int:
        return self.mult_table[x][y]

    def imp(self, x: int, y: int) -> int:
        if self.imp_table is None:
            raise ImplicationAbsent("implication table neither supplied nor derived")
        return self.imp_table[x][y]

    def neg(self, x: int) -> int:
        return self.imp(x, self.zero)

    def plus(self, x: int, y: int) -> int:
        return self.neg(self.mult(self.neg(x), self.neg(y)))

    def derived_top(self) -> int:
        return self.imp(self.bot, self.bot)

    @property
    def has_imp(self) -> bool:
        return self.imp_table is not None

    def with_imp(self, table: Table) -> "AlgebraCandidate":
        return replace(self, imp_table=table)

    def as_candidate(self) -> "AlgebraCandidate":
        return AlgebraCandidate(
            self.name, self.elements, self.order, self.mult_table,
            self.imp_table, self.bot, self.zero, self.one,
        )

    def subset_of_names(self, names) -> int:
        """Bit mask for a comma-separated string or iterable of names."""
        if isinstance(names, str):
            names = [t for t in names.split(",") if t]
        mask = 0
        for nm in names:
            mask |= 1 << self.index(nm)
        return mask

    def render_subset(self, mask: int) -> str:
        return "{" + ",".join(self.elements[i] for i in iter_bits(mask)) + "}"


@dataclass(frozen=True)
class FiniteCLAlgebra(AlgebraCandidate):
    """A candidate that passed all four axiom checks, plus its top element.

    Construct these through validator.validate / validator.seal only;
    the extra field is trusted by every downstream module.
    """

    top: int = 0

    def __post_init__(self):
        super().__post_init__()
        if self.imp_table is None:
            raise ValueError("a sealed algebra requires an implication table")
        if not 0 <= self.top < self.n:
            raise ValueError("top index out of range")


def derive_implication(order: OrderRelation, mult_table: Table) -> Table:
    """Compute the residuation-forced implication table.

    Entry (x, y) is the unique maximum of {z : mult(x, z) <= y}.  Raises
    NoResidual at the first (x, y), in lexicographic order, where that
    maximum does not exist; the witness carries the maximal elements of
    the set as an antichain.
    """
    n = order.n
    rows = []
    for x in range(n):
        mrow = mult_table[x]
        row = []
        for y in range(n):
            s = 0
            for z in range(n):
                if order.leq(mrow[z], y):
                    s |= 1 << z
            g = order.greatest_in(s)
            if g is None:
                raise NoResidual(x, y, order.maximal_in(s))
            row.append(g)
        rows.append(tuple(row))
    return tuple(rows)
