import pytest
from hypothesis import given, settings, strategies as st

from jtchar.charring import CharSeries, SeriesSpace, L_series, M_series, symE_series
from jtchar.engine import (CaseId, DomainError, admissible_weights, complex_lines, complex_terms, det_formula,
                           det_shape, entry_labels, euler_raw, format_complex, make_space, normalize_label,
                           parity_split, weight_space_char)
from jtchar.poly import Alphabet
from jtchar.symfun import h_polynomial
from jtchar.weyl import Weight

CASES = ["generic", "skew", "sym-even", "sym-odd", "spinor-odd", "spinor-even"]


def weights(term):
    return sorted(w.doubled for w in term.weights)


def test_complex_generic_k2():
    terms = complex_terms(CaseId("generic", 2), ())
    assert [t.degree for t in terms] == [0, 1]
    assert [w.integers() for w in terms[0].weights] == [(0, 0)]
    assert [w.integers() for w in terms[1].weights] == [(1, -1)]


def test_complex_skew():
    terms = complex_terms(CaseId("skew", 1), ())
    assert [[w.integers() for w in t.weights] for t in terms] == [[(0,)], [(2,)]]
    terms = complex_terms(CaseId("skew", 2), ())
    assert len(terms) == 5
    assert [w.integers() for w in terms[4].weights] == [(4, 2)]
    assert sum(len(t.weights) for t in terms) == 8


def test_printed_complexes_match_examples():
    def labels(case, k, **kw):
        c = CaseId(case, k)
        # L_-n and L_n coincide only in a single alphabet
        norm = normalize_label if c.mode == "single" else (lambda s: s)
        return [sorted(norm(s) for s in ls) for _, ls in complex_lines(c, (), **kw)]

    assert labels("generic", 2) == [["L_1⊗L_-1"], ["L_0⊗L_0"]]
    assert labels("skew", 1) == [["L_2"], ["L_0"]]
    assert labels("skew", 2) == [["L_4⊗L_2"], ["L_3⊗L_3", "L_4⊗L_0"], ["L_1⊗L_3", "L_3⊗L_1"],
                                 ["L_0⊗L_2", "L_1⊗L_1"], ["L_0⊗L_0"]]
    assert labels("sym-odd", 1) == [["SymE⊗L_1"], ["SymE⊗L_0"]]
    assert format_complex(CaseId("sym-odd", 1), (), parity=1, chain=True) == "F1: M_1⊗L_1 → F0: M_0⊗L_0"


def test_weight_space_examples():
    sp2 = SeriesSpace.two(4)
    for n in (-2, 0, 3):
        assert weight_space_char(CaseId("generic", 1), (n,), sp2) == L_series(n, sp2)
    sp = SeriesSpace.single(4)
    assert weight_space_char(CaseId("sym-odd", 1), (0,), sp) == symE_series(sp) * L_series(0, sp)
    got = weight_space_char(CaseId("spinor-odd", 1), ("1/2",), sp)
    assert got == symE_series(sp) * (L_series(0, sp) + L_series(1, sp))
    with pytest.raises(DomainError):
        weight_space_char(CaseId("spinor-odd", 1), (1,), sp)
    with pytest.raises(DomainError):
        weight_space_char(CaseId("skew", 1), ("1/2",), sp)


def test_euler_raw_examples():
    sp2 = SeriesSpace.two(4)
    for n in (-1, 0, 2):
        assert euler_raw(CaseId("generic", 1), (n,), sp2) == L_series(n, sp2)
    sp = SeriesSpace.single(4)
    assert euler_raw(CaseId("skew", 1), (), sp) == L_series(0, sp) - L_series(2, sp)
    tiny = SeriesSpace.two(1, 1, 2, 2)
    e = euler_raw(CaseId("generic", 2), (), tiny)
    assert e.coefficient(((1,), (1,))) == 1
    assert e.coefficient(((), ())) == 1


def h(d, a):
    return h_polynomial(d, a)


def test_det_formula_hand_values():
    sp = SeriesSpace.single(4)
    d = det_formula(CaseId("sym-odd", 1), (), sp)
    assert d == symE_series(sp) * (L_series(0, sp) - L_series(1, sp))
    assert d.degree_part(1).is_zero()

    sp = SeriesSpace.single(3)
    a = Alphabet("x", 3)
    d = det_formula(CaseId("spinor-odd", 1), ("1/2",), sp)
    assert d == symE_series(sp) * (L_series(0, sp) - L_series(2, sp))
    hand = h(3, a) + h(1, a) ** 3 - h(1, a) * h(2, a)
    assert d.degree_part(3) == CharSeries.from_poly(hand, sp)

    sp = SeriesSpace.single(2)
    a = Alphabet("x", 2)
    d = det_formula(CaseId("spinor-even", 1), ("1/2",), sp)
    assert d == L_series(0, sp) + L_series(1, sp)
    assert d.degree_part(2) == CharSeries.from_poly(h(1, a) ** 2, sp)


def test_empty_determinant():
    sp = SeriesSpace.two(3)
    assert det_formula(CaseId("generic", 0), (), sp) == CharSeries.one(sp)


def test_parity_split_k1():
    sp = SeriesSpace.single(4)
    plus = parity_split(1, (), 1, sp)
    assert plus == M_series(0, sp) * L_series(0, sp) - M_series(1, sp) * L_series(1, sp)


@pytest.mark.parametrize("k", [1, 2])
def test_parity_halves_sum_to_euler(k):
    sp = SeriesSpace.single(4)
    c = CaseId("sym-odd", k)
    for lam in admissible_weights(c, 2):
        total = parity_split(k, lam, 1, sp) + parity_split(k, lam, -1, sp)
        assert total == euler_raw(c, lam, sp)


def test_domain_checks():
    with pytest.raises(DomainError):
        complex_terms(CaseId("skew", 2), (1, 2))
    with pytest.raises(DomainError):
        complex_terms(CaseId("sym-even", 1), (-1,))
    with pytest.raises(DomainError):
        complex_terms(CaseId("spinor-odd", 1), ("-1/2",))
    with pytest.raises(DomainError):
        complex_terms(CaseId("spinor-even", 2), ("1/2", "-3/2"))
    complex_terms(CaseId("spinor-even", 2), ("3/2", "-1/2"))
    with pytest.raises(ValueError):
        CaseId("nonsense", 1)


def test_display_plus_sign_fails_at_degree_one():
    sp = SeriesSpace.single(4)
    c = CaseId("sym-odd", 1)
    diff = euler_raw(c, (), sp).first_difference(det_formula(c, (), sp, "display-plus"))
    assert diff == (((1,),), 0, 2)
    assert det_formula(c, (), sp, "display-minus") == euler_raw(c, (), sp)


def test_printed_spinor_index_fails_off_rectangles():
    sp = SeriesSpace.single(4)
    for name in ("spinor-odd", "spinor-even"):
        c = CaseId(name, 2)
        lam = ("3/2", "1/2")
        assert det_formula(c, lam, sp, "printed") != euler_raw(c, lam, sp)
        assert det_formula(c, lam, sp) == euler_raw(c, lam, sp)
        rect = ("3/2", "3/2")
        assert det_formula(c, rect, sp, "printed") == det_formula(c, rect, sp)


@pytest.mark.parametrize("name", ["spinor-odd", "spinor-even"])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_unsimplified_spinor_forms_agree(name, k):
    c = CaseId(name, k)
    sp = SeriesSpace.single(4)
    for lam in admissible_weights(c, 2):
        simple = det_formula(c, lam, sp)
        assert det_formula(c, lam, sp, "unsimplified") == simple
        assert det_formula(c, lam, sp, "column-reduced") == simple


def test_generic_rho_shift_invariance():
    c = CaseId("generic", 2)
    sp = SeriesSpace.two(3)
    for lam in [(0, 0), (1, -1), (2, 0)]:
        assert euler_raw(c, lam, sp, rho_shift=3) == euler_raw(c, lam, sp)


def test_entry_labels():
    shape = det_shape(CaseId("skew", 2), (), "display")
    assert entry_labels(shape) == [["L[0]-L[2]", "L[1]-L[3]"], ["L[-1]-L[3]", "L[0]-L[4]"]]
    with pytest.raises(DomainError):
        det_shape(CaseId("skew", 2), (1, 0), "display")


case_and_weight = st.sampled_from(CASES).flatmap(
    lambda name: st.integers(1, 2).flatmap(
        lambda k: st.sampled_from(admissible_weights(CaseId(name, k), 3)).map(lambda lam: (name, k, lam))))


@settings(max_examples=40, deadline=None)
@given(case_and_weight)
def test_closed_form_equals_signed_sum(args):
    name, k, lam = args
    c = CaseId(name, k)
    sp = make_space(c, 4)
    assert det_formula(c, lam, sp) == euler_raw(c, lam, sp)


def test_admissible_weights_are_admissible():
    ws = admissible_weights(CaseId("spinor-even", 2), 1)
    assert Weight.of("1/2", "1/2") in ws
    # (1/2, -1/2) is dominant for D_2 but outside the determinant's domain
    assert Weight.of("1/2", "-1/2") not in ws
