import pytest
from hypothesis import given, settings, strategies as st

from clalg.core import AlgebraCandidate, OrderRelation
from clalg.fileformat import ParseError, export_dot, parse_algebra, serialize_algebra
from clalg.fixtures import LINEAR_CLA, NONLINEAR_CLA
from clalg.ideals import Subset, certify_ideal
from clalg.quotient import build_quotient


def test_parse_linear_structure():
    cand = parse_algebra(LINEAR_CLA)
    assert cand.name == "linear5"
    assert cand.elements == ("bot", "0", "1", "a", "top")
    assert (cand.bot, cand.zero, cand.one) == (0, 1, 2)
    assert cand.order.is_total()
    assert cand.mult_table[3][3] == 1  # a*a = 0
    assert cand.imp_table[3][1] == 3  # a->0 = a


def test_parse_nonlinear_structure():
    cand = parse_algebra(NONLINEAR_CLA)
    assert cand.n == 6
    assert not cand.order.is_total()
    assert len(cand.order.covers()) == 6


@pytest.mark.parametrize("text", [LINEAR_CLA, NONLINEAR_CLA])
def test_round_trip_value_and_text(text):
    cand = parse_algebra(text)
    assert serialize_algebra(cand) == text  # fixtures are canonically written
    assert parse_algebra(serialize_algebra(cand)) == cand


def test_round_trip_without_imp():
    text = LINEAR_CLA.split("imp:")[0] + "end\n"
    cand = parse_algebra(text)
    assert cand.imp_table is None
    assert parse_algebra(serialize_algebra(cand)) == cand


def test_comments_and_blank_lines_are_ignored():
    text = "# header comment\n\n" + LINEAR_CLA.replace(
        "zero: 0", "zero: 0   # designated"
    )
    assert parse_algebra(text) == parse_algebra(LINEAR_CLA)


def _expect_error(text, fragment, line=None):
    with pytest.raises(ParseError) as exc:
        parse_algebra(text)
    assert fragment in exc.value.message
    if line is not None:
        assert exc.value.line == line


def test_parse_errors():
    _expect_error("", "algebra NAME required")
    _expect_error("algebra x\nelements: a a\nbot: a\nzero: a\none: a\nmult:\na\nend\n",
                  "duplicate element name", line=2)
    _expect_error("algebra x\nelements: a b!\n", "bad element name")
    missing_one = LINEAR_CLA.replace("one: 1\n", "")
    _expect_error(missing_one, "one: required", line=5)
    _expect_error(LINEAR_CLA.replace("cover: bot 0", "cover: bot zz"),
                  "unknown element 'zz'", line=6)
    _expect_error(LINEAR_CLA.replace("cover: bot 0", "cover: bot"),
                  "exactly two element names")
    ragged = LINEAR_CLA.replace("bot 0 1 a top\nbot 0 a 0 top",
                                "bot 0 1 a top\nbot 0 a 0")
    _expect_error(ragged, "has 4 entries, expected 5")
    _expect_error(LINEAR_CLA.replace("end\n", ""), "end required")
    _expect_error(LINEAR_CLA + "trailing\n", "unexpected content after end")
    _expect_error(LINEAR_CLA.replace("mult:", "mul:"), "mult: required")


def test_error_line_numbers_point_at_the_offender():
    bad = LINEAR_CLA.replace("imp:\ntop top top top top",
                             "imp:\ntop top top top zz")
    with pytest.raises(ParseError) as exc:
        parse_algebra(bad)
    assert exc.value.line == 17
    assert "unknown element 'zz'" in exc.value.message


def test_export_dot_edge_counts(linear5_candidate, nonlinear6):
    dot1 = export_dot(linear5_candidate)
    dot2 = export_dot(nonlinear6)
    assert dot1.count(" -> ") == 4
    assert dot2.count(" -> ") == 6
    assert '"bot" [label="bot (bot)"]' in dot1
    assert '"0" [label="0 (zero)"]' in dot1
    assert '"1" [label="1 (one)"]' in dot1


def test_export_dot_marks_top_on_sealed(linear5):
    dot = export_dot(linear5)
    assert '"top" [label="top (top)"]' in dot


def test_export_dot_quotient(linear5):
    ideal = certify_ideal(linear5, Subset.from_names(linear5, "bot,a,0,1"))
    quot = build_quotient(linear5, ideal)
    dot = export_dot(quot)
    assert dot.count(" -> ") == 2  # three-class chain
    assert '"[0]" [label="[0] (zero,one) = {0,1,a}"]' in dot


names_st = st.integers(1, 5).map(lambda n: tuple(f"e{i}" for i in range(n)))


@st.composite
def candidates(draw):
    names = draw(names_st)
    n = len(names)
    covers = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] < p[1]),
        max_size=8,
    ))

    def table():
        return tuple(
            tuple(draw(st.integers(0, n - 1)) for _ in range(n)) for _ in range(n)
        )

    return AlgebraCandidate(
        name=draw(st.sampled_from(["g1", "g2", "zed"])),
        elements=names,
        order=OrderRelation.from_covers(n, covers),
        mult_table=table(),
        imp_table=table() if draw(st.booleans()) else None,
        bot=draw(st.integers(0, n - 1)),
        zero=draw(st.integers(0, n - 1)),
        one=draw(st.integers(0, n - 1)),
    )


@settings(max_examples=60, deadline=None)
@given(candidates())
def test_round_trip_random_candidates(cand):
    assert parse_algebra(serialize_algebra(cand)) == cand
