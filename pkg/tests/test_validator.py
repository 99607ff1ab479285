import random
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from oracles import oracle_validate

from clalg.core import AlgebraCandidate, FiniteCLAlgebra, OrderRelation
from clalg.fixtures import linear_candidate, nonlinear_candidate
from clalg.validator import (
    EquivalenceBroken,
    NotACLAlgebra,
    check_involution,
    check_lattice,
    check_monoid,
    is_distributive_lattice,
    is_idempotent,
    is_linear,
    is_residuated_lattice,
    seal,
    validate,
)


def test_linear_fixture_promotes(linear5_candidate):
    report = validate(linear5_candidate)
    assert report.passed
    assert isinstance(report.algebra, FiniteCLAlgebra)
    assert report.top == 4
    f = report.flags
    assert (f.is_linear, f.is_distributive_lattice) == (True, True)
    assert (f.is_idempotent, f.is_residuated_lattice) == (False, False)


def test_nonlinear_fixture_fails_residuation(nonlinear6):
    report = validate(nonlinear6)
    assert report.lattice.ok and report.monoid.ok and report.involution.ok
    assert not report.residuation.ok
    # first adjunction failure: 1 <= b->0 = b, yet 1*b = b is not below 0
    assert report.residuation.witness == ("adjunction", 2, 4, 1)
    assert report.algebra is None


def _agree(cand):
    report = validate(cand)
    oracle = oracle_validate(cand)
    for verdict, axiom in (
        (report.lattice, oracle.lattice),
        (report.monoid, oracle.monoid),
        (report.residuation, oracle.residuation),
        (report.involution, oracle.involution),
    ):
        assert verdict.ok == axiom.ok
        assert verdict.skipped == axiom.skipped
        assert verdict.witness == axiom.first
    return report


def test_oracle_agreement_on_fixtures():
    assert _agree(linear_candidate()).passed
    assert not _agree(nonlinear_candidate()).passed


def test_check_lattice_antichain_reports_no_join():
    order = OrderRelation(2, (0b01, 0b10))
    cand = AlgebraCandidate(
        name="pair", elements=("p", "q"), order=order,
        mult_table=((0, 1), (1, 1)), imp_table=None, bot=0, zero=0, one=0,
    )
    verdict = check_lattice(cand)
    assert verdict.witness == ("no_join", 0, 1, ())


def test_check_lattice_wrong_bot():
    order = OrderRelation.from_covers(2, [(0, 1)])
    cand = AlgebraCandidate(
        name="upside", elements=("lo", "hi"), order=order,
        mult_table=((0, 0), (0, 1)), imp_table=None, bot=1, zero=0, one=1,
    )
    assert check_lattice(cand).witness == ("bot_not_least", 0)


def test_check_monoid_left_projection_fails_commutativity():
    order = OrderRelation.from_covers(2, [(0, 1)])
    cand = AlgebraCandidate(
        name="proj", elements=("x", "y"), order=order,
        mult_table=((0, 0), (1, 1)), imp_table=None, bot=0, zero=0, one=1,
    )
    assert check_monoid(cand).witness == ("commutativity", 0, 1)


def test_check_monoid_unit_witness():
    order = OrderRelation.from_covers(2, [(0, 1)])
    cand = AlgebraCandidate(
        name="allbot", elements=("x", "y"), order=order,
        mult_table=((0, 0), (0, 0)), imp_table=None, bot=0, zero=0, one=1,
    )
    assert check_monoid(cand).witness == ("unit", 1)


def test_check_monoid_associativity_witness():
    order = OrderRelation.from_covers(3, [(0, 1), (1, 2)])
    mult = ((1, 0, 0), (0, 0, 1), (0, 1, 2))  # commutative, unit 2, broken assoc
    cand = AlgebraCandidate(
        name="brokeassoc", elements=("x", "y", "z"), order=order,
        mult_table=mult, imp_table=None, bot=0, zero=0, one=2,
    )
    assert check_monoid(cand).witness == ("associativity", 0, 0, 1)


def test_check_involution_witness(linear5_candidate):
    rows = [list(r) for r in linear5_candidate.imp_table]
    rows[3][1] = 4  # ~a now top, and ~top = bot != a
    cand = linear5_candidate.with_imp(tuple(tuple(r) for r in rows))
    assert check_involution(cand).witness == ("involution", 3)


def test_validate_derives_missing_implication(linear5_candidate):
    bare = linear5_candidate.with_imp(None)
    report = validate(bare)
    assert report.passed
    assert report.algebra.imp_table == linear5_candidate.imp_table
    assert bare.imp_table is None  # the input is never mutated


def test_validate_underivable_marks_involution_skipped():
    covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
    order = OrderRelation.from_covers(5, covers)
    meet = tuple(tuple(order.glb(x, y) for y in range(5)) for x in range(5))
    cand = AlgebraCandidate(
        name="m3", elements=("o", "p", "q", "r", "i"), order=order,
        mult_table=meet, imp_table=None, bot=0, zero=0, one=4,
    )
    report = validate(cand)
    assert report.residuation.witness == ("no_residual", 1, 0, (2, 3))
    assert report.involution.skipped
    assert not report.passed


def test_seal_raises_with_report(nonlinear6):
    with pytest.raises(NotACLAlgebra) as exc:
        seal(nonlinear6)
    assert not exc.value.report.residuation.ok


def test_validate_is_deterministic_and_idempotent(linear5):
    again = validate(linear5.as_candidate())
    assert again.passed
    assert again.top == linear5.top
    assert again.algebra.mult_table == linear5.mult_table
    assert again.algebra.imp_table == linear5.imp_table


def test_is_residuated_lattice(linear5, census):
    assert is_residuated_lattice(linear5) is False  # top and one differ
    two = census[2][0]
    assert two.top == two.one
    assert is_residuated_lattice(two) is True


def test_equivalence_broken_on_tampered_algebra(linear5):
    # force top == one on tables whose fusion is not integral
    fake = FiniteCLAlgebra(
        linear5.name, linear5.elements, linear5.order, linear5.mult_table,
        linear5.imp_table, linear5.bot, linear5.zero, linear5.one, top=linear5.one,
    )
    with pytest.raises(EquivalenceBroken):
        is_residuated_lattice(fake)


def test_structural_predicates(linear5, nonlinear6):
    assert is_linear(linear5)
    assert is_distributive_lattice(linear5)  # chains are distributive
    assert not is_idempotent(linear5)  # a*a = 0
    assert not is_linear(nonlinear6)


def test_linear_census_algebras_are_distributive(census):
    # total orders always pass the distributivity scan
    for algs in census.values():
        for alg in algs:
            if is_linear(alg):
                assert is_distributive_lattice(alg)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_mutation_agreement_with_oracle(rand: random.Random):
    base = linear_candidate() if rand.random() < 0.5 else nonlinear_candidate()
    n = base.n
    which = rand.choice(("mult", "imp"))
    table = base.mult_table if which == "mult" else base.imp_table
    rows = [list(r) for r in table]
    rows[rand.randrange(n)][rand.randrange(n)] = rand.randrange(n)
    mutated = tuple(tuple(r) for r in rows)
    cand = replace(base, **{f"{which}_table": mutated})
    report = _agree(cand)
    # every reported witness must reproduce its violation when replayed
    from clalg.replay import confirm_witness

    for verdict in report.verdicts:
        assert confirm_witness(cand, verdict)


def test_no_residual_witness_replays():
    from clalg.replay import confirm_witness

    covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
    order = OrderRelation.from_covers(5, covers)
    meet = tuple(tuple(order.glb(x, y) for y in range(5)) for x in range(5))
    cand = AlgebraCandidate(
        name="m3", elements=("o", "p", "q", "r", "i"), order=order,
        mult_table=meet, imp_table=None, bot=0, zero=0, one=4,
    )
    report = validate(cand)
    assert confirm_witness(cand, report.residuation)
