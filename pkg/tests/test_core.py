import pytest
from hypothesis import given, strategies as st

from clalg.core import (
    MAX_UNIVERSE,
    AlgebraCandidate,
    ImplicationAbsent,
    NoResidual,
    NotALattice,
    OrderRelation,
    derive_implication,
    iter_bits,
)

# element indices in the fixtures (declaration order)
B, Z, U, A, T = 0, 1, 2, 3, 4  # linear5: bot 0 1 a top
B2, Z2, U2, A2, BB, T2 = 0, 1, 2, 3, 4, 5  # nonlinear6: bot 0 1 a b top


def test_iter_bits():
    assert list(iter_bits(0)) == []
    assert list(iter_bits(0b101001)) == [0, 3, 5]


def test_order_from_covers_is_closed(linear5_candidate):
    order = linear5_candidate.order
    # chain bot < 0 < a < 1 < top
    assert order.leq(B, T) and order.leq(Z, U) and order.leq(Z, A)
    assert not order.leq(U, A)
    assert all(order.leq(x, x) for x in range(order.n))


def test_covers_recovered(linear5_candidate, nonlinear6):
    assert linear5_candidate.order.covers() == ((B, Z), (Z, A), (U, T), (A, U))
    assert nonlinear6.order.covers() == (
        (B2, Z2), (B2, A2), (Z2, U2), (U2, BB), (A2, T2), (BB, T2)
    )


def test_leq_examples(linear5_candidate, nonlinear6):
    assert linear5_candidate.leq(Z, A)  # 0 <= a on the chain
    assert not nonlinear6.leq(A2, BB)  # a is on its own branch


def test_meet_join_examples(nonlinear6):
    assert nonlinear6.join(A2, U2) == T2
    assert nonlinear6.meet(A2, BB) == B2
    assert all(nonlinear6.meet(x, x) == x for x in range(nonlinear6.n))


def test_mult_imp_lookups(linear5):
    assert linear5.mult(A, A) == Z  # a*a = 0
    assert linear5.imp(A, Z) == A  # a->0 = a
    assert all(linear5.mult(linear5.one, x) == x for x in range(linear5.n))


def test_neg(linear5, nonlinear6):
    assert linear5.neg(Z) == U  # ~0 = 1
    assert nonlinear6.neg(A2) == A2  # ~a = a
    assert all(linear5.neg(linear5.neg(x)) == x for x in range(linear5.n))


def test_plus(linear5, nonlinear6):
    assert linear5.plus(A, A) == U  # ~(a*a) = ~0 = 1
    assert all(linear5.plus(Z, x) == x for x in range(linear5.n))
    assert nonlinear6.plus(U2, BB) == U2  # ~(0*b) = ~0 = 1


def test_derived_top(linear5):
    assert linear5.derived_top() == T == linear5.top


def test_derive_implication_matches_printed_linear(linear5_candidate):
    # the residuation-forced table reproduces the supplied one entrywise
    derived = derive_implication(linear5_candidate.order, linear5_candidate.mult_table)
    assert derived == linear5_candidate.imp_table
    assert derived[B][B] == T


def test_derive_implication_mismatches_nonlinear(nonlinear6):
    # the supplied table disagrees with the forced residual at exactly
    # these six entries, each of which the derivation puts at b
    derived = derive_implication(nonlinear6.order, nonlinear6.mult_table)
    diffs = {
        (x, y)
        for x in range(nonlinear6.n)
        for y in range(nonlinear6.n)
        if derived[x][y] != nonlinear6.imp_table[x][y]
    }
    assert diffs == {(Z2, Z2), (Z2, U2), (Z2, BB), (A2, A2), (BB, U2), (BB, BB)}
    assert all(derived[x][y] == BB for x, y in diffs)


def test_derive_implication_one_element():
    order = OrderRelation.from_covers(1, [])
    assert derive_implication(order, ((0,),)) == ((0,),)


def _antichain2():
    order = OrderRelation(2, (0b01, 0b10))
    return AlgebraCandidate(
        name="pair", elements=("p", "q"), order=order,
        mult_table=((0, 0), (0, 1)), imp_table=None, bot=0, zero=0, one=1,
    )


def test_not_a_lattice_witness():
    cand = _antichain2()
    with pytest.raises(NotALattice) as exc:
        cand.meet(0, 1)
    assert (exc.value.x, exc.value.y, exc.value.kind) == (0, 1, "meet")
    assert exc.value.frontier == ()


def _m3_candidate():
    # bot, three atoms, top: a lattice with no residual for meet-fusion
    covers = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
    order = OrderRelation.from_covers(5, covers)
    meet = tuple(
        tuple(order.glb(x, y) for y in range(5)) for x in range(5)
    )
    return AlgebraCandidate(
        name="m3", elements=("o", "p", "q", "r", "i"), order=order,
        mult_table=meet, imp_table=None, bot=0, zero=0, one=4,
    )


def test_no_residual_witness():
    cand = _m3_candidate()
    with pytest.raises(NoResidual) as exc:
        derive_implication(cand.order, cand.mult_table)
    assert (exc.value.x, exc.value.y) == (1, 0)
    assert exc.value.frontier == (2, 3)  # an antichain of maximal candidates


def test_implication_absent(linear5_candidate):
    bare = linear5_candidate.with_imp(None)
    with pytest.raises(ImplicationAbsent):
        bare.neg(0)


def test_universe_cap():
    n = MAX_UNIVERSE + 1
    order = OrderRelation.from_covers(n, [(i, i + 1) for i in range(n - 1)])
    row = tuple(range(n))
    with pytest.raises(ValueError):
        AlgebraCandidate(
            name="big", elements=tuple(f"e{i}" for i in range(n)), order=order,
            mult_table=tuple(row for _ in range(n)), imp_table=None,
            bot=0, zero=0, one=0,
        )


def test_duplicate_names_rejected():
    order = OrderRelation.from_covers(2, [(0, 1)])
    with pytest.raises(ValueError):
        AlgebraCandidate(
            name="dup", elements=("x", "x"), order=order,
            mult_table=((0, 0), (0, 1)), imp_table=None, bot=0, zero=0, one=1,
        )


@given(st.integers(2, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12))))
def test_cover_closure_is_reflexive_transitive(args):
    n, covers = args
    order = OrderRelation.from_covers(n, covers)
    assert all(order.leq(x, x) for x in range(n))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if order.leq(x, y) and order.leq(y, z):
                    assert order.leq(x, z)
    # dn is the transpose of up
    for x in range(n):
        for y in range(n):
            assert order.leq(x, y) == bool(order.dn[y] >> x & 1)
