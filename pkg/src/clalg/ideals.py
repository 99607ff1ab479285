"""Ideals of a finite CL-algebra: recognition, generation, enumeration,
and the special-ideal classifications.

An ideal is a subset that contains zero, is closed under the derived
addition x+y = ~(~x * ~y) and under binary join, and is downward closed.
Recognition scans the three conditions in that order and reports the
lexicographically first violation.

All operations here only need total tables and a lattice order; they
deliberately accept unvalidated candidates so that defective printed
table sets can still be analysed and reported on (classification flags
are only meaningful theorems on sealed algebras).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import AlgebraCandidate, AlgebraError, iter_bits, popcount
from .validator import Verdict


class EmptySubset(AlgebraError):
    pass


class ZeroMissing(AlgebraError):
    pass


class NotAnIdeal(AlgebraError):
    def __init__(self, verdict: Verdict):
        self.verdict = verdict
        super().__init__(f"not an ideal: {verdict.witness}")


@dataclass(frozen=True)
class Subset:
    """A subset of an n-element universe as a bit mask."""

    n: int
    bits: int

    def __post_init__(self):
        if self.bits >> self.n:
            raise ValueError("subset has bits beyond the universe")

    @classmethod
    def from_indices(cls, n: int, indices) -> "Subset":
        mask = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError(f"index {i} out of range")
            mask |= 1 << i
        return cls(n, mask)

    @classmethod
    def from_names(cls, alg: AlgebraCandidate, names) -> "Subset":
        return cls(alg.n, alg.subset_of_names(names))

    @classmethod
    def universe(cls, n: int) -> "Subset":
        return cls(n, (1 << n) - 1)

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self):
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def render(self, alg: AlgebraCandidate) -> str:
        return alg.render_subset(self.bits)


@dataclass(frozen=True)
class Ideal:
    """A subset whose three ideal conditions have been verified."""

    subset: Subset
    contains_zero: bool = True
    plus_closed: bool = True
    join_closed: bool = True
    down_closed: bool = True

    @property
    def bits(self) -> int:
        return self.subset.bits


@dataclass(frozen=True)
class IdealClassification:
    is_prime: bool
    is_distributive: bool
    is_implicative: bool
    is_affine: bool
    is_zero_downset: bool


def is_ideal(alg: AlgebraCandidate, s: Subset) -> Verdict:
    """Check the three ideal conditions on a non-empty subset.

    Witness kinds: zero_missing(zero); plus_not_closed(x, y, value) and
    join_not_closed(x, y, value) over member pairs x <= y; then
    not_down_closed(x, y) for the first x <= y with y in, x out.
    """
    if s.is_empty:
        raise EmptySubset("an ideal must be non-empty")
    bits = s.bits
    if alg.zero not in s:
        return Verdict("ideal", False, ("zero_missing", alg.zero))
    members = s.members()
    for i, x in enumerate(members):
        for y in members[i:]:
            p = alg.plus(x, y)
            if not bits >> p & 1:
                return Verdict("ideal", False, ("plus_not_closed", x, y, p))
            j = alg.join(x, y)
            if not bits >> j & 1:
                return Verdict("ideal", False, ("join_not_closed", x, y, j))
    dn = alg.order.dn
    for x in range(alg.n):
        for y in range(alg.n):
            if (dn[y] >> x & 1) and (bits >> y & 1) and not bits >> x & 1:
                return Verdict("ideal", False, ("not_down_closed", x, y))
    return Verdict("ideal", True)


def certify_ideal(alg: AlgebraCandidate, s: Subset) -> Ideal:
    verdict = is_ideal(alg, s)
    if not verdict:
        raise NotAnIdeal(verdict)
    return Ideal(subset=s)


def generated_ideal(alg: AlgebraCandidate, s: Subset) -> Ideal:
    """Least ideal containing s: add zero, then close downward and under
    plus and join until a fixed point (the universe is finite)."""
    dn = alg.order.dn
    bits = s.bits | 1 << alg.zero
    while True:
        grown = bits
        for y in iter_bits(bits):
            grown |= dn[y]
        mem = tuple(iter_bits(grown))
        for i, x in enumerate(mem):
            for y in mem[i:]:
                grown |= 1 << alg.plus(x, y)
                grown |= 1 << alg.join(x, y)
        if grown == bits:
            return certify_ideal(alg, Subset(alg.n, bits))
        bits = grown


def _down_sets(alg: AlgebraCandidate) -> list[int]:
    """All downward-closed subsets, via include/exclude DFS along a
    linear extension (so down-closure prunes instead of filtering)."""
    dn = alg.order.dn
    ext = sorted(range(alg.n), key=lambda i: (popcount(dn[i]), i))
    out: list[int] = []

    def rec(pos: int, included: int) -> None:
        if pos == len(ext):
            out.append(included)
            return
        e = ext[pos]
        rec(pos + 1, included)
        if dn[e] & ~included == 1 << e:
            rec(pos + 1, included | 1 << e)

    rec(0, 0)
    return out


def all_ideals(alg: AlgebraCandidate) -> list[Ideal]:
    """Every ideal, in ascending bit-pattern order.

    Enumerates down-sets of the order and keeps those containing zero
    that are closed under plus and join.
    """
    zero_bit = 1 << alg.zero
    found = []
    for bits in _down_sets(alg):
        if not bits & zero_bit:
            continue
        mem = tuple(iter_bits(bits))
        ok = True
        for i, x in enumerate(mem):
            for y in mem[i:]:
                if not bits >> alg.plus(x, y) & 1 or not bits >> alg.join(x, y) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(Ideal(subset=Subset(alg.n, bits)))
    found.sort(key=lambda ideal: ideal.bits)
    return found


def zero_downset(alg: AlgebraCandidate) -> Ideal:
    """The ideal {x : x <= zero}; certification failing here means the
    order or tables are inconsistent, so NotAnIdeal propagates."""
    return certify_ideal(alg, Subset(alg.n, alg.order.dn[alg.zero]))


def _top_of(alg: AlgebraCandidate) -> int:
    top = getattr(alg, "top", None)
    return top if top is not None else alg.derived_top()


def is_prime(alg: AlgebraCandidate, ideal: Ideal) -> Verdict:
    """For every pair, ~(x->y) or ~(y->x) must land in the ideal.

    The witness carries the first failing pair together with both
    computed values, (x, y, ~(x->y), ~(y->x)).
    """
    bits = ideal.bits
    n = alg.n
    for x in range(n):
        for y in range(x, n):
            nxy = alg.neg(alg.imp(x, y))
            nyx = alg.neg(alg.imp(y, x))
            if not bits >> nxy & 1 and not bits >> nyx & 1:
                return Verdict("prime", False, (x, y, nxy, nyx))
    return Verdict("prime", True)


def is_distributive_ideal(alg: AlgebraCandidate, ideal: Ideal) -> Verdict:
    """((x|y) & (x|z)) * ~(x | (y&z)) must land in the ideal, all triples."""
    bits = ideal.bits
    for x, y, z in product(range(alg.n), repeat=3):
        lhs = alg.meet(alg.join(x, y), alg.join(x, z))
        w = alg.mult(lhs, alg.neg(alg.join(x, alg.meet(y, z))))
        if not bits >> w & 1:
            return Verdict("distributive_ideal", False, (x, y, z, w))
    return Verdict("distributive_ideal", True)


def is_implicative(alg: AlgebraCandidate, s: Subset) -> Verdict:
    """Detachment on negated implications, over a zero-containing subset.

    Stated for subsets, not only certified ideals, matching the two-part
    definition; callers wanting ideal-hood check that separately.
    """
    if alg.zero not in s:
        raise ZeroMissing("an implicative ideal must contain zero")
    bits = s.bits
    for x, y, z in product(range(alg.n), repeat=3):
        p1 = alg.neg(alg.imp(x, alg.imp(y, z)))
        if not bits >> p1 & 1:
            continue
        p2 = alg.neg(alg.imp(x, y))
        if not bits >> p2 & 1:
            continue
        c = alg.neg(alg.imp(x, z))
        if not bits >> c & 1:
            return Verdict("implicative", False, (x, y, z, c))
    return Verdict("implicative", True)


def is_affine(alg: AlgebraCandidate, ideal: Ideal) -> bool:
    return alg.mult(_top_of(alg), alg.zero) in ideal.subset


def classify(alg: AlgebraCandidate, ideal: Ideal) -> IdealClassification:
    return IdealClassification(
        is_prime=bool(is_prime(alg, ideal)),
        is_distributive=bool(is_distributive_ideal(alg, ideal)),
        is_implicative=bool(is_implicative(alg, ideal.subset)),
        is_affine=is_affine(alg, ideal),
        is_zero_downset=ideal.bits == alg.order.dn[alg.zero],
    )
