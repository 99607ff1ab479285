"""Axiom checks for algebra candidates, with first-witness reporting.

Every check runs its quantifiers in ascending element-index order,
nested left to right, and stops at the first violation; the scan orders
below are part of the module contract (the test-suite replays them
against an independent brute-force oracle and expects witness-for-
witness agreement):

  lattice:  reflexivity x; antisymmetry (x, y) with x < y; transitivity
            (x, y, z); missing joins (x, y) with x <= y; missing meets
            likewise; declared bot not least.
  monoid:   commutativity (x, y) with x < y; unit x; associativity
            (x, y, z).
  residuation: (x, y, z) on the biconditional mult(x,y) <= z iff
            x <= imp(y,z).
  involution: x on neg(neg(x)) == x.

Checks never mutate the candidate; a derived implication table is
attached to the returned report/algebra only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import (
    AlgebraCandidate,
    FiniteCLAlgebra,
    ImplicationAbsent,
    NoResidual,
    Table,
    derive_implication,
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check; truthy iff the property holds.

    `witness` is the lexicographically first violating tuple.  Its first
    entry is a kind tag, the rest are element indices (plus, for some
    kinds, a computed value or an antichain tuple) so the violation can
    be replayed against the tables.  `skipped` marks a check that could
    not run at all (no implication table and none derivable).
    """

    law: str
    ok: bool
    witness: tuple | None = None
    detail: str = ""
    skipped: bool = False

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class StructuralFlags:
    is_linear: bool
    is_distributive_lattice: bool
    is_idempotent: bool
    is_residuated_lattice: bool


@dataclass(frozen=True)
class ValidationReport:
    """All four axiom verdicts; `algebra` and `flags` are set on promotion."""

    lattice: Verdict
    monoid: Verdict
    residuation: Verdict
    involution: Verdict
    top: int | None = None
    flags: StructuralFlags | None = None
    algebra: FiniteCLAlgebra | None = None

    @property
    def passed(self) -> bool:
        return bool(self.lattice and self.monoid and self.residuation and self.involution)

    @property
    def verdicts(self) -> tuple[Verdict, ...]:
        return (self.lattice, self.monoid, self.residuation, self.involution)


class NotACLAlgebra(Exception):
    """seal() was asked to promote a candidate that fails an axiom."""

    def __init__(self, report: ValidationReport):
        self.report = report
        failed = [v.law for v in report.verdicts if not v.ok]
        super().__init__(f"candidate fails: {', '.join(failed)}")


class EquivalenceBroken(Exception):
    """Integrality and top == one disagreed on a supposedly sealed algebra."""

    def __init__(self, x: int, y: int, detail: str):
        self.x = x
        self.y = y
        super().__init__(detail)


def check_lattice(cand: AlgebraCandidate) -> Verdict:
    order = cand.order
    n = cand.n
    for x in range(n):
        if not order.leq(x, x):
            return Verdict("lattice", False, ("reflexivity", x))
    for x in range(n):
        for y in range(x + 1, n):
            if order.leq(x, y) and order.leq(y, x):
                return Verdict("lattice", False, ("antisymmetry", x, y))
    for x, y, z in product(range(n), repeat=3):
        if order.leq(x, y) and order.leq(y, z) and not order.leq(x, z):
            return Verdict("lattice", False, ("transitivity", x, y, z))
    for x in range(n):
        for y in range(x, n):
            if order.lub(x, y) is None:
                ub = order.up[x] & order.up[y]
                return Verdict("lattice", False, ("no_join", x, y, order.minimal_in(ub)))
    for x in range(n):
        for y in range(x, n):
            if order.glb(x, y) is None:
                lb = order.dn[x] & order.dn[y]
                return Verdict("lattice", False, ("no_meet", x, y, order.maximal_in(lb)))
    for x in range(n):
        if not order.leq(cand.bot, x):
            return Verdict("lattice", False, ("bot_not_least", x))
    return Verdict("lattice", True)


def check_monoid(cand: AlgebraCandidate) -> Verdict:
    n = cand.n
    t = cand.mult_table
    for x in range(n):
        for y in range(x + 1, n):
            if t[x][y] != t[y][x]:
                return Verdict("monoid", False, ("commutativity", x, y))
    e = cand.one
    for x in range(n):
        if t[e][x] != x or t[x][e] != x:
            return Verdict("monoid", False, ("unit", x))
    for x, y, z in product(range(n), repeat=3):
        if t[t[x][y]][z] != t[x][t[y][z]]:
            return Verdict("monoid", False, ("associativity", x, y, z))
    return Verdict("monoid", True)


def _imp_or_derive(cand: AlgebraCandidate, imp_table: Table | None) -> Table:
    if imp_table is not None:
        return imp_table
    if cand.imp_table is not None:
        return cand.imp_table
    try:
        return derive_implication(cand.order, cand.mult_table)
    except NoResidual as exc:
        raise ImplicationAbsent(
            f"no implication table and derivation failed at "
            f"({exc.x}, {exc.y})"
        ) from exc


def check_residuation(cand: AlgebraCandidate, imp_table: Table | None = None) -> Verdict:
    imp = _imp_or_derive(cand, imp_table)
    order = cand.order
    t = cand.mult_table
    n = cand.n
    for x, y, z in product(range(n), repeat=3):
        lhs = order.leq(t[x][y], z)
        rhs = order.leq(x, imp[y][z])
        if lhs != rhs:
            direction = "mult(x,y) <= z but not x <= imp(y,z)" if lhs else \
                "x <= imp(y,z) but not mult(x,y) <= z"
            return Verdict("residuation", False, ("adjunction", x, y, z), direction)
    return Verdict("residuation", True)


def check_involution(cand: AlgebraCandidate, imp_table: Table | None = None) -> Verdict:
    imp = _imp_or_derive(cand, imp_table)
    z = cand.zero
    for x in range(cand.n):
        if imp[imp[x][z]][z] != x:
            return Verdict("involution", False, ("involution", x))
    return Verdict("involution", True)


def validate(cand: AlgebraCandidate) -> ValidationReport:
    """Run the four axiom checks and, on all-pass, seal the algebra.

    Always returns the full report.  When the candidate has no
    implication table, one is derived first; if derivation is impossible
    the residuation verdict carries the no-residual witness and the
    involution check is marked skipped.
    """
    lattice = check_lattice(cand)
    monoid = check_monoid(cand)

    imp_table = cand.imp_table
    if imp_table is None:
        try:
            imp_table = derive_implication(cand.order, cand.mult_table)
        except NoResidual as exc:
            residuation = Verdict(
                "residuation", False,
                ("no_residual", exc.x, exc.y, exc.frontier),
                "no implication table can satisfy residuation",
            )
            involution = Verdict(
                "involution", False, None,
                "not checkable: implication neither supplied nor derivable",
                skipped=True,
            )
            return ValidationReport(lattice, monoid, residuation, involution)

    residuation = check_residuation(cand, imp_table)
    involution = check_involution(cand, imp_table)
    report = ValidationReport(lattice, monoid, residuation, involution)
    if not report.passed:
        return report

    top = imp_table[cand.bot][cand.bot]
    # forced by the axioms: bot is absorbing for mult, hence x <= imp(bot, bot)
    assert all(cand.order.leq(x, top) for x in range(cand.n))
    sealed = FiniteCLAlgebra(
        cand.name, cand.elements, cand.order, cand.mult_table,
        imp_table, cand.bot, cand.zero, cand.one, top,
    )
    flags = StructuralFlags(
        is_linear(sealed),
        is_distributive_lattice(sealed),
        is_idempotent(sealed),
        is_residuated_lattice(sealed),
    )
    return ValidationReport(lattice, monoid, residuation, involution, top, flags, sealed)


def seal(cand: AlgebraCandidate) -> FiniteCLAlgebra:
    """validate() and return the sealed algebra, or raise NotACLAlgebra."""
    report = validate(cand)
    if report.algebra is None:
        raise NotACLAlgebra(report)
    return report.algebra


def is_residuated_lattice(alg: FiniteCLAlgebra) -> bool:
    """True iff top == one, cross-checked against integrality of mult.

    The two conditions are equivalent on any sealed algebra; a
    discrepancy is an internal-consistency failure and raises
    EquivalenceBroken rather than returning a guess.
    """
    integral_witness = None
    n = alg.n
    for x in range(n):
        for y in range(n):
            if not alg.leq(alg.mult(x, y), x):
                integral_witness = (x, y)
                break
        if integral_witness:
            break
    top_is_one = alg.top == alg.one
    if top_is_one and integral_witness is not None:
        x, y = integral_witness
        raise EquivalenceBroken(x, y, f"top == one but mult({x},{y}) is not below {x}")
    if not top_is_one and integral_witness is None:
        raise EquivalenceBroken(
            alg.one, alg.top,
            "mult is integral everywhere but top != one",
        )
    return top_is_one


def is_idempotent(alg: AlgebraCandidate) -> bool:
    return all(alg.mult(x, x) == x for x in range(alg.n))


def is_linear(alg: AlgebraCandidate) -> bool:
    return alg.order.is_total()


def is_distributive_lattice(alg: AlgebraCandidate) -> bool:
    n = alg.n
    return all(
        alg.meet(x, alg.join(y, z)) == alg.join(alg.meet(x, y), alg.meet(x, z))
        for x, y, z in product(range(n), repeat=3)
    )


def first_incomparable_pair(alg: AlgebraCandidate) -> tuple[int, int] | None:
    for x in range(alg.n):
        for y in range(x + 1, alg.n):
            if not alg.leq(x, y) and not alg.leq(y, x):
                return (x, y)
    return None


def first_nondistributive_triple(alg: AlgebraCandidate) -> tuple[int, int, int] | None:
    for x, y, z in product(range(alg.n), repeat=3):
        if alg.meet(x, alg.join(y, z)) != alg.join(alg.meet(x, y), alg.meet(x, z)):
            return (x, y, z)
    return None
