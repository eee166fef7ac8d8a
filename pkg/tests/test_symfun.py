import random

import pytest
from hypothesis import given, settings, strategies as st

from jtchar.charring import CharSeries, SeriesSpace
from jtchar.partitions import enumerate_partitions, partitions_of
from jtchar.poly import Alphabet, Poly, compositions
from jtchar.symfun import (SchurExpansion, e_polynomial, gl_tensor_multiplicity, h_polynomial, lr_coefficient,
                           omega, schur_decompose, schur_polynomial, schur_series, tableau_schur_polynomial)

A2 = Alphabet("x", 2)
A6 = Alphabet("x", 6)


def test_h_and_e_small():
    assert h_polynomial(2, A2) == Poly((A2,), {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert h_polynomial(0, A2) == Poly.one((A2,))
    assert h_polynomial(-3, A2).is_zero()
    assert e_polynomial(2, A2) == Poly((A2,), {(1, 1): 1})


def test_schur_examples():
    a = Alphabet("x", 3)
    assert schur_polynomial((2, 1), a) == h_polynomial(2, a) * h_polynomial(1, a) - h_polynomial(3, a)
    assert schur_polynomial((1, 1, 1), A2).is_zero()
    assert schur_polynomial((1, 1), A2) == Poly((A2,), {(1, 1): 1})


@pytest.mark.parametrize("lam", [p for p in enumerate_partitions(5) if len(p) <= 4])
def test_jacobi_trudi_matches_tableaux(lam):
    assert schur_polynomial(lam, A6) == tableau_schur_polynomial(lam, A6)


def test_schur_series_matches_polynomial():
    sp = SeriesSpace.single(5)
    a = Alphabet("x", 5)
    for lam in enumerate_partitions(5):
        assert schur_series(lam, sp).to_poly() == schur_polynomial(lam, a)


def test_decompose_examples():
    sp = SeriesSpace.single(2)
    h1 = schur_series((1,), sp)
    exp = schur_decompose(h1 * h1)
    assert exp == SchurExpansion({(2,): 1, (1, 1): 1})
    assert schur_decompose(schur_polynomial((2, 1), Alphabet("x", 3)))[(2, 1)] == 1
    sp2 = SeriesSpace.two(1)
    prod = schur_series((1,), sp2, 0) * schur_series((1,), sp2, 1)
    assert schur_decompose(prod).coeffs == {((1,), (1,)): 1}


def test_lr_examples():
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((3, 1), (3, 1), ()) == 1
    assert lr_coefficient((2, 2), (1,), (1,)) == 0
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


def test_lr_symmetry():
    for lam in enumerate_partitions(6, exact_size=6):
        for d in range(7):
            for mu in partitions_of(d):
                for nu in partitions_of(6 - d):
                    assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)


def test_gl_tensor_multiplicity_handles_negative_weights():
    # V_(1,-1) and V_(0,0) both sit in the standard rep tensored with its dual
    assert gl_tensor_multiplicity((1, -1), (1, 0), (0, -1)) == 1
    assert gl_tensor_multiplicity((0, 0), (1, 0), (0, -1)) == 1
    assert gl_tensor_multiplicity((1, 0), (1, 0), (0, -1)) == 0


def test_omega():
    assert omega(SchurExpansion({(2,): 1})) == SchurExpansion({(1, 1): 1})
    x = SchurExpansion({(3, 1): 2, (2,): -1})
    assert omega(omega(x)) == x
    sp = SeriesSpace.single(2)
    h2 = CharSeries.from_poly(h_polynomial(2, A2), sp)
    e2 = CharSeries.from_poly(e_polynomial(2, A2), sp)
    assert omega(schur_decompose(h2)) == schur_decompose(e2)


@pytest.mark.parametrize("d", range(0, 7))
def test_cauchy_identity(d):
    """sum_{|lam|=d} s_lam(x) s_lam(y) is the (d,d) part of prod 1/(1 - x_i y_j)."""
    n = 3 if d > 4 else d or 1
    sp = SeriesSpace.two(d, d, n, n)
    lhs = CharSeries.zero(sp)
    for lam in partitions_of(d, max_length=n):
        lhs = lhs + schur_series(lam, sp, 0) * schur_series(lam, sp, 1)
    # geometric series: choose a matrix of exponents m_ij with total d
    X, Y = Alphabet("x", n), Alphabet("y", n)
    terms = {}
    for m in compositions(d, n * n):
        ex = tuple(sum(m[i * n + j] for j in range(n)) for i in range(n))
        ey = tuple(sum(m[i * n + j] for i in range(n)) for j in range(n))
        terms[ex + ey] = terms.get(ex + ey, 0) + 1
    assert lhs.to_poly() == Poly((X, Y), terms)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_decompose_inverts_expansion(seed):
    rng = random.Random(seed)
    cap = 4
    shapes = enumerate_partitions(cap)
    exp = SchurExpansion({rng.choice(shapes): rng.randint(-3, 3) for _ in range(4)})
    sp = SeriesSpace.single(cap)
    assert schur_decompose(exp.to_series(sp)) == exp
