import json
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from jtchar.charring import SeriesSpace, L_series
from jtchar.engine import CaseId, det_formula, make_space
from jtchar.oracle import (FaithfulnessError, NotACharacter, decompose_u, greedy_decompose, hwv_char,
                           irreducible_character, lhs_partition_sum, module_torus_character, parity_oracle,
                           skew_lr_check, u_alphabet, use_cache)
from jtchar.poly import Alphabet, Poly
from jtchar.symfun import SchurExpansion, schur_decompose, schur_polynomial
from jtchar.weyl import RootType, Weight


def U(k):
    return u_alphabet(k)


def upoly(k, terms):
    return Poly((U(k),), terms)


def expansion(series):
    return schur_decompose(series)


def test_lhs_examples():
    sp = SeriesSpace.single(4)
    assert expansion(lhs_partition_sum(CaseId("skew", 1), sp)) == SchurExpansion({(): 1, (1, 1): 1, (2, 2): 1})
    sp2 = SeriesSpace.two(4)
    assert lhs_partition_sum(CaseId("generic", 1), sp2) == L_series(0, sp2)
    sp = SeriesSpace.single(2)
    assert expansion(lhs_partition_sum(CaseId("sym-even", 1), sp)) == SchurExpansion({(): 1, (2,): 1, (1, 1): 1})
    with pytest.raises(FaithfulnessError):
        lhs_partition_sum(CaseId("skew", 1), SeriesSpace.single(4, 2))


def test_irreducible_examples():
    assert irreducible_character(RootType("A", 2), (1, 0)) == upoly(2, {(2, 0): 1, (0, 2): 1})
    assert irreducible_character(RootType("C", 1), (1,)) == upoly(1, {(2,): 1, (-2,): 1})
    assert irreducible_character(RootType("B", 1), (1,)) == upoly(1, {(2,): 1, (0,): 1, (-2,): 1})
    with pytest.raises(ValueError):
        irreducible_character(RootType("C", 2), (0, 1))


def test_type_a_characters_are_schur_polynomials():
    x = Alphabet("x", 3)
    for lam in [(2, 1, 0), (3, 0, 0), (2, 2, 1), (1, 1, 1)]:
        chi = irreducible_character(RootType("A", 3), lam)
        # halve the doubled exponents and compare with the tableau-free Jacobi-Trudi polynomial
        plain = Poly((x,), {tuple(e // 2 for e in m): c for m, c in chi.items()})
        assert plain == schur_polynomial(lam, x)


def brute_weights(vectors, power):
    out = {}
    for combo in product(vectors, repeat=power):
        key = tuple(map(sum, zip(*combo)))
        out[key] = out.get(key, 0) + 1
    return out


def test_classical_dimensions():
    # Weyl dimension formula values for a few small representations
    cases = [(RootType("B", 2), (1, 0), 5), (RootType("B", 2), ("1/2", "1/2"), 4), (RootType("C", 2), (1, 1), 5),
             (RootType("C", 2), (2, 0), 10), (RootType("D", 2), (1, 1), 3), (RootType("D", 3), (1, 0, 0), 6),
             (RootType("B", 2), ("3/2", "1/2"), 16), (RootType("D", 3), ("1/2", "1/2", "-1/2"), 4)]
    for t, hw, dim in cases:
        chi = irreducible_character(t, hw)
        assert sum(c for _, c in chi.items()) == dim
        assert all(c > 0 for _, c in chi.items())


def test_module_torus_character_examples():
    sp = SeriesSpace.two(1, 1, 2, 2)
    got = module_torus_character(CaseId("generic", 1), (1, 0), sp)
    ctx = got.alphabets
    want = Poly.from_terms(ctx, [({"x": (1, 0), "u": (-2,)}, 1), ({"x": (0, 1), "u": (-2,)}, 1)])
    assert got == want
    sp = SeriesSpace.single(1, 2)
    got = module_torus_character(CaseId("skew", 1), 1, sp)
    terms = [({"x": e, "u": (s,)}, 1) for e in ((1, 0), (0, 1)) for s in (2, -2)]
    assert got == Poly.from_terms(got.alphabets, terms)
    got = module_torus_character(CaseId("spinor-odd", 1), 0, SeriesSpace.single(0, 1))
    assert got.split_by("u")[(0,)] == upoly(1, {(1,): 1, (-1,): 1})


def test_greedy_single_irreducible():
    t = RootType("B", 2)
    chi = irreducible_character(t, (2, 1))
    res = greedy_decompose(chi, t)
    assert res.parts == {Weight.of(2, 1): 1}


def test_greedy_skew_degree_two():
    case = CaseId("skew", 1)
    sp = SeriesSpace.single(2)
    chi = module_torus_character(case, 2, sp)
    res = greedy_decompose(chi, case.root_type, sp)
    assert set(res.parts) == {Weight.of(2), Weight.of(0)}
    assert expansion(res[(2,)]) == SchurExpansion({(2,): 1})
    assert expansion(res[(0,)]) == SchurExpansion({(1, 1): 1})


def test_greedy_generic_bidegree_one_one():
    case = CaseId("generic", 1)
    sp = SeriesSpace.two(1)
    chi = module_torus_character(case, (1, 1), sp)
    res = greedy_decompose(chi, case.root_type, sp)
    assert list(res.parts) == [Weight.of(0)]
    assert expansion(res[(0,)]).coeffs == {((1,), (1,)): 1}


def test_greedy_rejects_non_characters():
    t = RootType("C", 1)
    with pytest.raises(NotACharacter):
        decompose_u(t, upoly(1, {(2,): 1}))
    with pytest.raises(NotACharacter):
        decompose_u(t, upoly(1, {(0,): -1}))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([("A", 2), ("B", 2), ("C", 2), ("D", 2), ("D", 3)]))
def test_greedy_recovers_random_multiplicities(seed, fam_k):
    rng = random.Random(seed)
    t = RootType(*fam_k)
    pool = []
    for vec in product(range(3), repeat=t.k):
        for half in (False, True):
            if half and t.family in "AC":
                continue
            dbl = tuple(2 * v + (1 if half else 0) for v in vec)
            w = Weight(tuple(sorted(dbl, reverse=True)))
            if t.family == "D" and rng.random() < 0.5 and w.doubled[-1]:
                w = Weight(w.doubled[:-1] + (-w.doubled[-1],))
            pool.append(w)
    mult = {w: rng.randint(1, 3) for w in rng.sample(pool, 3)}
    chi = Poly.zero((U(t.k),))
    for w, m in mult.items():
        chi = chi + irreducible_character(t, w).scale(m)
    assert greedy_decompose(chi, t).parts == mult


def test_hwv_examples():
    sp = SeriesSpace.single(4)
    got = hwv_char(CaseId("skew", 1), (0,), sp)
    assert expansion(got) == SchurExpansion({(): 1, (1, 1): 1, (2, 2): 1})
    sp = SeriesSpace.single(2)
    got = hwv_char(CaseId("sym-odd", 1), (0,), sp)
    assert expansion(got) == SchurExpansion({(): 1, (2,): 1})
    sp2 = SeriesSpace.two(4)
    for n in range(4):
        assert hwv_char(CaseId("generic", 1), (n,), sp2) == L_series(n, sp2)


CASES = ["generic", "skew", "sym-even", "sym-odd", "spinor-odd", "spinor-even"]


@pytest.mark.parametrize("name", CASES)
@pytest.mark.parametrize("k", [1, 2])
def test_two_ground_truths_agree(name, k):
    c = CaseId(name, k)
    sp = make_space(c, 4)
    assert hwv_char(c, c.base_weight(), sp) == lhs_partition_sum(c, sp)


def test_parity_oracle_matches_definition():
    sp = SeriesSpace.single(4)
    full = hwv_char(CaseId("sym-odd", 1), (1,), sp)
    assert parity_oracle(1, (1,), 1, sp) + parity_oracle(1, (1,), -1, sp) == full


@pytest.mark.parametrize("k", [1, 2])
def test_spinor_even_doubling(k):
    c = CaseId("spinor-even", k)
    sp = make_space(c, 4)
    plus = hwv_char(c, Weight.half(k), sp)
    minus = hwv_char(c, Weight.half(k, -1), sp)
    target = lhs_partition_sum(c, sp)
    assert plus == target and minus == target
    assert plus + minus == target.scale(2)


def test_skew_lr_empty_mu():
    sp = SeriesSpace.two(3)
    lhs, rhs = skew_lr_check(2, (2, 1), (), sp)
    assert lhs == det_formula(CaseId("generic", 2), (2, 1), sp)
    assert rhs == hwv_char(CaseId("generic", 2), (2, 1), sp)
    assert lhs == rhs


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "memo.json"
    cache = use_cache(str(path))
    try:
        t = RootType("B", 2)
        first = irreducible_character(t, (1, 1))
        cache.save()
        data = json.loads(path.read_text())
        assert data["version"] == 1 and "B|2|2,2" in data["irreducible"]
        use_cache(str(path))
        assert irreducible_character(t, (1, 1)) == first
    finally:
        use_cache(None)


def test_missing_cache_is_safe(tmp_path):
    try:
        cache = use_cache(str(tmp_path / "nothing-here.json"))
        assert cache.irreducible == {}
    finally:
        use_cache(None)
