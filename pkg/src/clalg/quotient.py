"""Ideal-induced congruences and quotient algebras.

x and y are congruent modulo an ideal I when x * ~y and y * ~x both lie
in I.  Nothing is taken on trust: the relation is verified to be an
equivalence, compatibility with every operation is replayed
exhaustively, the quotient is rebuilt from class representatives and
re-validated from scratch, and the class order derived from meets is
cross-checked against the membership criterion ~(x->y) in I.  Each of
those verifications can fail on defective candidates, and each failure
is a first-class reported result rather than an internal error.

Classes are named after their minimal-index representative in brackets,
and quotient elements are ordered by ascending representative index.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AlgebraCandidate, AlgebraError, FiniteCLAlgebra, OrderRelation, iter_bits
from .ideals import Ideal, Subset, is_affine, is_distributive_ideal, is_prime
from .validator import (
    ValidationReport,
    Verdict,
    first_incomparable_pair,
    first_nondistributive_triple,
    validate,
)


class NotEquivalence(AlgebraError):
    """The induced relation is not an equivalence; witness is
    ("reflexivity", x) or ("transitivity", x, y, z)."""

    def __init__(self, witness: tuple):
        self.witness = witness
        super().__init__(f"relation is not an equivalence: {witness}")


class NotACongruence(AlgebraError):
    def __init__(self, certificate: Verdict):
        self.certificate = certificate
        super().__init__(f"compatibility fails: {certificate.witness}")


class QuotientInvalid(AlgebraError):
    """The quotient construction failed; carries either the failing
    validation report or an order-criterion mismatch witness."""

    def __init__(self, detail: str, report: ValidationReport | None = None,
                 witness: tuple | None = None):
        self.report = report
        self.witness = witness
        super().__init__(detail)


@dataclass(frozen=True)
class Congruence:
    """Partition induced by an ideal, plus its compatibility certificate.

    The certificate scans operations in the order meet, join, mult, imp,
    neg, and argument tuples (x, x', y, y') lexicographically over
    related pairs; it records the first incompatibility.
    """

    n: int
    ideal: Subset
    classes: tuple[Subset, ...]
    class_index: tuple[int, ...]
    certificate: Verdict

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def representatives(self) -> tuple[int, ...]:
        return tuple(cls.members()[0] for cls in self.classes)


def congruence_from_ideal(alg: AlgebraCandidate, ideal: Ideal) -> Congruence:
    """Compute the relation, verify it is an equivalence (reflexivity,
    symmetry, transitivity, in that scan order), partition the universe,
    and certify compatibility of all five operations by replay."""
    n = alg.n
    ibits = ideal.bits
    neg = [alg.neg(x) for x in range(n)]

    rel = []
    for x in range(n):
        mask = 0
        for y in range(n):
            if ibits >> alg.mult(x, neg[y]) & 1 and ibits >> alg.mult(y, neg[x]) & 1:
                mask |= 1 << y
        rel.append(mask)

    for x in range(n):
        if not rel[x] >> x & 1:
            raise NotEquivalence(("reflexivity", x))
    # symmetric by construction; transitivity needs checking
    for x in range(n):
        for y in iter_bits(rel[x]):
            extra = rel[y] & ~rel[x]
            if extra:
                z = next(iter_bits(extra))
                raise NotEquivalence(("transitivity", x, y, z))

    class_index = [-1] * n
    classes = []
    for x in range(n):
        if class_index[x] < 0:
            idx = len(classes)
            classes.append(Subset(n, rel[x]))
            for y in iter_bits(rel[x]):
                class_index[y] = idx

    certificate = _compatibility_certificate(alg, rel, class_index)
    return Congruence(
        n=n, ideal=ideal.subset, classes=tuple(classes),
        class_index=tuple(class_index), certificate=certificate,
    )


def _compatibility_certificate(alg, rel, class_index) -> Verdict:
    n = alg.n
    pairs = [(x, x1) for x in range(n) for x1 in iter_bits(rel[x])]
    ops = (
        ("meet", alg.meet),
        ("join", alg.join),
        ("mult", alg.mult),
        ("imp", alg.imp),
    )
    for tag, fn in ops:
        for x, x1 in pairs:
            for y, y1 in pairs:
                if class_index[fn(x, y)] != class_index[fn(x1, y1)]:
                    return Verdict("congruence", False, (tag, x, x1, y, y1))
    for x, x1 in pairs:
        if class_index[alg.neg(x)] != class_index[alg.neg(x1)]:
            return Verdict("congruence", False, ("neg", x, x1))
    return Verdict("congruence", True)


def class_of(cong: Congruence, x: int) -> Subset:
    return cong.classes[cong.class_index[x]]


@dataclass(frozen=True)
class QuotientAlgebra:
    """The sealed class-level algebra plus the projection onto it."""

    base: AlgebraCandidate
    congruence: Congruence
    algebra: FiniteCLAlgebra  # elements are the congruence classes

    @property
    def projection(self) -> tuple[int, ...]:
        return self.congruence.class_index

    def project(self, x: int) -> int:
        return self.congruence.class_index[x]


def build_quotient(alg: AlgebraCandidate, ideal: Ideal,
                   cong: Congruence | None = None) -> QuotientAlgebra:
    """Construct and re-validate the quotient by a certified ideal.

    Raises NotACongruence when the compatibility certificate fails,
    and QuotientInvalid when the class order disagrees with the
    membership criterion or the class tables fail full validation.
    """
    if cong is None:
        cong = congruence_from_ideal(alg, ideal)
    if not cong.certificate:
        raise NotACongruence(cong.certificate)

    n = alg.n
    cidx = cong.class_index
    reps = cong.representatives()
    k = len(reps)

    q_leq = [[False] * k for _ in range(k)]
    for i, ri in enumerate(reps):
        for j, rj in enumerate(reps):
            q_leq[i][j] = cidx[alg.meet(ri, rj)] == i

    # cross-check the meet-derived order against the membership criterion
    ibits = ideal.bits
    for x in range(n):
        for y in range(n):
            left = cidx[alg.meet(x, y)] == cidx[x]
            right = bool(ibits >> alg.neg(alg.imp(x, y)) & 1)
            if left != right:
                raise QuotientInvalid(
                    f"class order disagrees with ideal-membership criterion at "
                    f"({alg.name_of(x)}, {alg.name_of(y)})",
                    witness=("order_criterion", x, y, left, right),
                )

    names = tuple(f"[{alg.elements[r]}]" for r in reps)
    q_mult = tuple(
        tuple(cidx[alg.mult(ri, rj)] for rj in reps) for ri in reps
    )
    q_imp = tuple(
        tuple(cidx[alg.imp(ri, rj)] for rj in reps) for ri in reps
    )
    q_cand = AlgebraCandidate(
        name=f"{alg.name}_mod_{'_'.join(alg.elements[i] for i in ideal.subset)}",
        elements=names,
        order=OrderRelation.from_leq(k, q_leq),
        mult_table=q_mult,
        imp_table=q_imp,
        bot=cidx[alg.bot],
        zero=cidx[alg.zero],
        one=cidx[alg.one],
    )
    report = validate(q_cand)
    if report.algebra is None:
        raise QuotientInvalid("quotient tables fail validation", report=report)
    return QuotientAlgebra(base=alg, congruence=cong, algebra=report.algebra)


def check_order_criterion(alg: AlgebraCandidate, ideal: Ideal, x: int, y: int,
                          cong: Congruence | None = None) -> tuple[bool, bool]:
    """Evaluate both sides of: class(x) <= class(y) iff ~(x->y) in I.

    Returned as (left, right) so callers can assert the biconditional.
    """
    if cong is None:
        cong = congruence_from_ideal(alg, ideal)
    left = cong.class_index[alg.meet(x, y)] == cong.class_index[x]
    right = alg.neg(alg.imp(x, y)) in ideal.subset
    return left, right


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    status: str  # "holds" | "violated" | "vacuous" | "blocked"
    witness: tuple | None = None


@dataclass(frozen=True)
class TheoremReport:
    ideal: Subset
    certificate: Verdict
    congruence: Congruence
    quotient_valid: bool
    claims: tuple[ClaimResult, ...]
    quotient_report: ValidationReport | None = None

    @property
    def ok(self) -> bool:
        return bool(self.certificate) and self.quotient_valid and all(
            c.status in ("holds", "vacuous") for c in self.claims
        )


def theorem_suite(alg: AlgebraCandidate, ideal: Ideal) -> TheoremReport:
    """Evaluate the four quotient theorems on one concrete instance:

      distributive ideal  -> quotient lattice is distributive
      prime ideal         -> quotient order is total
      affine ideal        -> quotient top == one
      I == {x : x <= 0}   -> every congruence class is a singleton

    Each claim reports holds, violated (with witness), or vacuous; when
    the quotient itself cannot be built the quotient-dependent claims
    are reported as blocked instead of raising.
    """
    cong = congruence_from_ideal(alg, ideal)
    if not cong.certificate:
        raise NotACongruence(cong.certificate)

    distributive = bool(is_distributive_ideal(alg, ideal))
    prime = bool(is_prime(alg, ideal))
    affine = is_affine(alg, ideal)

    quotient = None
    quotient_report = None
    blocked_witness = None
    try:
        quotient = build_quotient(alg, ideal, cong)
    except QuotientInvalid as exc:
        quotient_report = exc.report
        blocked_witness = exc.witness

    claims = []

    def quotient_claim(name: str, guard: bool, evaluate) -> None:
        if not guard:
            claims.append(ClaimResult(name, "vacuous"))
        elif quotient is None:
            claims.append(ClaimResult(name, "blocked", blocked_witness))
        else:
            witness = evaluate(quotient.algebra)
            status = "holds" if witness is None else "violated"
            claims.append(ClaimResult(name, status, witness))

    quotient_claim(
        "distributive_ideal_distributive_quotient", distributive,
        first_nondistributive_triple,
    )
    quotient_claim(
        "prime_ideal_linear_quotient", prime,
        first_incomparable_pair,
    )
    quotient_claim(
        "affine_ideal_residuated_quotient", affine,
        lambda q: None if q.top == q.one else (q.top, q.one),
    )

    if ideal.bits != alg.order.dn[alg.zero]:
        claims.append(ClaimResult("zero_downset_singleton_classes", "vacuous"))
    else:
        fat = next((c for c in cong.classes if len(c) > 1), None)
        if fat is None:
            claims.append(ClaimResult("zero_downset_singleton_classes", "holds"))
        else:
            claims.append(ClaimResult(
                "zero_downset_singleton_classes", "violated", ("class", fat.bits)
            ))

    return TheoremReport(
        ideal=ideal.subset,
        certificate=cong.certificate,
        congruence=cong,
        quotient_valid=quotient is not None,
        claims=tuple(claims),
        quotient_report=quotient_report,
    )
