"""Invariant layer: minimal exponent, thresholds, witnesses, classification.

Expected values were derived by hand from the Newton polyhedra (facet
covectors solved directly) before being frozen here.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whideal import (
    ASSUMPTION_BANNER,
    NONCONVENIENT_BANNER,
    Polynomial,
    ValidationError,
    VDegreeQuery,
    classify,
    hodge_trivial,
    jacobian_witness,
    minimal_exponent,
    parse_polynomial,
    v_filtration_membership,
    w1_trivial,
    weight_nilpotency_bound,
    witness_annotation,
)

WORKED = "x^2 + y^2 + z^2 + u^2*w^2 + u^4 + w^5"


def diagonal(exponents):
    """sum of x_i^{a_i} over the given exponent list."""
    n = len(exponents)
    names = tuple(f"x{i + 1}" for i in range(n))
    terms = {}
    for i, a in enumerate(exponents):
        e = [0] * n
        e[i] = a
        terms[tuple(e)] = Fraction(1)
    return Polynomial(names, terms)


# -- minimal exponent ---------------------------------------------------------


def test_minimal_exponent_node():
    assert minimal_exponent(parse_polynomial("x^2 + y^2")) == 1


def test_minimal_exponent_cusp():
    assert minimal_exponent(parse_polynomial("x^2 + y^3")) == Fraction(5, 6)


def test_minimal_exponent_e8():
    assert minimal_exponent(parse_polynomial("x^3 + y^5")) == Fraction(8, 15)


def test_minimal_exponent_worked_example():
    assert minimal_exponent(parse_polynomial(WORKED)) == 2


def test_minimal_exponent_diagonal_law():
    for exps in [(2, 2), (2, 3, 5), (3, 3, 3), (4, 4, 4, 4), (2, 9)]:
        expected = sum(Fraction(1, a) for a in exps)
        assert minimal_exponent(diagonal(exps)) == expected


def test_minimal_exponent_rejects_smooth():
    with pytest.raises(ValidationError):
        minimal_exponent(parse_polynomial("x + y^2"))


def test_minimal_exponent_nonconvenient_gate():
    f = parse_polynomial("x^2*y + y^2")
    with pytest.raises(ValidationError):
        minimal_exponent(f)
    assert minimal_exponent(f, allow_nonconvenient=True) == Fraction(3, 4)


# -- V-filtration queries -----------------------------------------------------


def test_v_query_validation():
    with pytest.raises(ValidationError):
        VDegreeQuery(-1, Fraction(1, 2))
    with pytest.raises(ValidationError):
        VDegreeQuery(0, Fraction(0))
    with pytest.raises(ValidationError):
        VDegreeQuery(0, Fraction(3, 2))
    q = VDegreeQuery(2, 1)
    assert q.alpha == Fraction(1) and isinstance(q.alpha, Fraction)


def test_v_filtration_worked_example():
    f = parse_polynomial(WORKED)
    assert v_filtration_membership(f, VDegreeQuery(1, Fraction(1)))
    assert not v_filtration_membership(f, VDegreeQuery(2, Fraction(1)))
    assert v_filtration_membership(f, VDegreeQuery(1, Fraction(1, 2)))


def test_v_filtration_cusp():
    f = parse_polynomial("x^2 + y^3")
    assert v_filtration_membership(f, VDegreeQuery(0, Fraction(5, 6)))
    assert not v_filtration_membership(f, VDegreeQuery(0, Fraction(1)))


# -- triviality thresholds ----------------------------------------------------


def test_hodge_threshold_is_weak_inequality():
    # alpha~ = 1 exactly: I_0 trivial but its W_1 piece is not
    node = parse_polynomial("x^2 + y^2")
    assert hodge_trivial(node, 0)
    assert not w1_trivial(node, 0)


def test_thresholds_three_variable_quadric():
    f = parse_polynomial("x^2 + y^2 + z^2")  # alpha~ = 3/2
    assert hodge_trivial(f, 0) and w1_trivial(f, 0)
    assert not hodge_trivial(f, 1) and not w1_trivial(f, 1)


def test_thresholds_four_variable_quadric():
    f = parse_polynomial("x^2 + y^2 + z^2 + w^2")  # alpha~ = 2
    assert hodge_trivial(f, 1)
    assert not w1_trivial(f, 1)
    assert not hodge_trivial(f, 2)


def test_threshold_rejects_negative_level():
    f = parse_polynomial("x^2 + y^2")
    with pytest.raises(ValidationError):
        hodge_trivial(f, -1)
    with pytest.raises(ValidationError):
        w1_trivial(f, -1)


# -- weight nilpotency bound --------------------------------------------------


def test_nilpotency_bound_examples():
    assert weight_nilpotency_bound(parse_polynomial("x^2 + y^2")) == 2
    assert weight_nilpotency_bound(parse_polynomial("x^2 + y^2 + z^2 + w^2")) == 2
    assert weight_nilpotency_bound(parse_polynomial(WORKED)) == 3


def test_nilpotency_bound_needs_integer_exponent():
    with pytest.raises(ValidationError):
        weight_nilpotency_bound(parse_polynomial("x^2 + y^3"))


# -- Jacobian witnesses -------------------------------------------------------


def test_witness_two_cubes():
    f = parse_polynomial("x^3 + y^3")
    assert jacobian_witness(f, (1, 1), 0)  # xy outside (3x^2, 3y^2)
    assert not jacobian_witness(f, (2, 0), 0)


def test_witness_single_variable_square():
    f = parse_polynomial("x^2")
    assert not jacobian_witness(f, (1,), 0)


def test_witness_worked_example():
    f = parse_polynomial(WORKED)
    assert jacobian_witness(f, (0, 0, 0, 0, 5), 1)


def test_witness_rejects_negative_level():
    with pytest.raises(ValidationError):
        jacobian_witness(parse_polynomial("x^3 + y^3"), (1, 1), -1)


def test_witness_annotation_texts():
    f = parse_polynomial(WORKED)
    m = (0, 0, 0, 0, 5)
    inside = witness_annotation(f, m, 1, False)
    assert inside == "witness w^5 lies in J(f): no obstruction"
    plain = witness_annotation(f, m, 1, True)
    assert "V^(>1)" in plain and ">= 3" in plain
    assert "supports type" not in plain
    pinned = witness_annotation(f, m, 1, True, nilpotency_upper=3)
    assert pinned.endswith("; supports type (1,1)")
    loose = witness_annotation(f, m, 1, True, nilpotency_upper=4)
    assert "supports type" not in loose


# -- classification -----------------------------------------------------------


def test_classify_fermat_cubic():
    rep = classify(parse_polynomial("x^3 + y^3 + z^3"))
    assert rep.minimal_exponent == 1
    assert rep.p_level == 0
    assert rep.r == 1
    assert rep.s == 2
    assert rep.simplicial
    assert rep.nilpotency_upper == 2
    assert rep.type_range == ((0, 1),)
    assert rep.exact_type == (0, 1)
    assert any("weighted homogeneous" in note for note in rep.notes)


def test_classify_node():
    rep = classify(parse_polynomial("x^2 + y^2"))
    assert rep.p_level == 0
    assert rep.s == 1
    assert rep.exact_type == (0, 0)
    assert rep.type_range == ((0, 0),)


def test_classify_four_variable_quadric():
    rep = classify(parse_polynomial("x^2 + y^2 + z^2 + w^2"))
    assert rep.p_level == 1
    assert rep.r == 1 and rep.s == 3
    assert rep.nilpotency_upper == 2
    assert rep.type_range == ((1, 1),)
    assert rep.exact_type == (1, 1)


def test_classify_cusp_has_no_integer_level():
    rep = classify(parse_polynomial("x^2 + y^3"))
    assert rep.p_level is None
    assert rep.s is None
    assert rep.nilpotency_upper is None
    assert rep.type_range is None
    assert rep.exact_type is None
    assert sorted(rep.hodge_triviality) == [0, 1, 2, 3]


def test_classify_worked_example():
    rep = classify(parse_polynomial(WORKED))
    assert rep.minimal_exponent == 2
    assert rep.p_level == 1
    assert rep.r == 2
    assert rep.s == 3
    assert rep.simplicial
    assert rep.nilpotency_upper == 3
    assert rep.type_range == ((1, 1), (1, 2))
    assert rep.exact_type is None
    assert rep.hodge_triviality == {0: True, 1: True, 2: False, 3: False}
    assert rep.w1_triviality == {0: True, 1: False, 2: False, 3: False}
    assert rep.notes[0] == ASSUMPTION_BANNER
    assert any("maximal ideal" in note for note in rep.notes)


def test_classify_nonconvenient_banner():
    f = parse_polynomial("x^2*y + y^2")
    with pytest.raises(ValidationError):
        classify(f)
    rep = classify(f, allow_nonconvenient=True)
    assert NONCONVENIENT_BANNER in rep.notes


def test_classify_permutation_invariant():
    rep_f = classify(parse_polynomial(WORKED))
    # cycle the variables: same model up to coordinate relabeling
    rep_g = classify(
        parse_polynomial("w^2 + x^2 + y^2 + z^2*u^2 + z^4 + u^5", ("x", "y", "z", "u", "w"))
    )
    for name in (
        "minimal_exponent",
        "p_level",
        "r",
        "s",
        "simplicial",
        "nilpotency_upper",
        "type_range",
        "exact_type",
        "hodge_triviality",
        "w1_triviality",
    ):
        assert getattr(rep_f, name) == getattr(rep_g, name), name


def test_report_json_shape():
    rep = classify(parse_polynomial(WORKED))
    data = rep.to_json_dict()
    assert data["schema"] == "whideal-report/1"
    assert data["minimal_exponent"] == "2/1"
    assert data["p_level"] == 1
    assert data["hodge_triviality"] == [[0, True], [1, True], [2, False], [3, False]]
    assert data["type_range"] == [[1, 1], [1, 2]]
    assert data["exact_type"] is None
    assert len(data["facets"]) == 2
    assert all(isinstance(note, str) for note in data["notes"])


def test_with_notes_appends():
    rep = classify(parse_polynomial("x^2 + y^2"))
    extended = rep.with_notes(["extra line"])
    assert extended.notes == rep.notes + ("extra line",)
    assert extended.minimal_exponent == rep.minimal_exponent


# -- properties ---------------------------------------------------------------

exponent_lists = st.lists(st.integers(min_value=2, max_value=9), min_size=1, max_size=5)


@settings(derandomize=True, deadline=None)
@given(exponent_lists)
def test_diagonal_exponent_formula(exps):
    assert minimal_exponent(diagonal(exps)) == sum(Fraction(1, a) for a in exps)


@settings(derandomize=True, deadline=None)
@given(exponent_lists, st.integers(min_value=0, max_value=4))
def test_w1_triviality_implies_hodge_triviality(exps, p):
    f = diagonal(exps)
    if w1_trivial(f, p):
        assert hodge_trivial(f, p)


@settings(derandomize=True, deadline=None)
@given(exponent_lists)
def test_triviality_tables_monotone(exps):
    rep = classify(diagonal(exps))
    for table in (rep.hodge_triviality, rep.w1_triviality):
        levels = sorted(table)
        for a, b in zip(levels, levels[1:]):
            if table[b]:
                assert table[a]
    if rep.exact_type is not None:
        assert rep.exact_type in rep.type_range
