"""Joint-kernel brute force: matrices, nullspace, module comparison."""

import random
from fractions import Fraction

import pytest

from singjack import oracle, singular
from singjack.combinatorics import ParameterViolation


def test_monomial_basis_order():
    assert oracle.monomial_basis(2, 1) == [(1, 0), (0, 1)]
    assert oracle.monomial_basis(3, 2) == [
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert oracle.monomial_basis(2, -1) == []


def test_dunkl_matrix_small():
    half = Fraction(-1, 2)
    assert oracle.dunkl_matrix(2, 1, 1, half) == [[Fraction(1, 2),
                                                   Fraction(1, 2)]]
    assert oracle.dunkl_matrix(2, 1, 2, half) == [[Fraction(1, 2),
                                                   Fraction(1, 2)]]
    # degree 2 -> degree 1, rows x1, x2; columns x1^2, x1x2, x2^2
    got = oracle.dunkl_matrix(2, 2, 1, half)
    assert got == [[Fraction(3, 2), 0, Fraction(1, 2)],
                   [Fraction(-1, 2), 1, Fraction(1, 2)]]


def test_joint_kernel_rank_one():
    rep = oracle.joint_kernel(2, 1, Fraction(-1, 2))
    assert rep.dimension == 1
    assert rep.free_columns == [1]
    assert rep.basis == [[Fraction(-1), Fraction(1)]]
    assert rep.monomials == [(1, 0), (0, 1)]


def test_joint_kernel_trivial_at_generic_value():
    rep = oracle.joint_kernel(2, 1, Fraction(1, 3))
    assert rep.dimension == 0
    assert rep.basis == []


def test_joint_kernel_rejects_nonpositive_degree():
    with pytest.raises(ParameterViolation):
        oracle.joint_kernel(2, 0, Fraction(-1, 2))


def test_report_json_round_trip():
    rep = oracle.joint_kernel(3, 1, Fraction(-1, 3))
    obj = rep.to_json(include_timestamp=False)
    assert "timestamp" not in obj
    back = oracle.KernelReport.from_json(obj)
    assert back.N == rep.N and back.degree == rep.degree
    assert back.kappa0 == rep.kappa0
    assert back.monomials == rep.monomials
    assert back.basis == rep.basis
    assert back.free_columns == rep.free_columns
    assert "timestamp" in rep.to_json()


def test_compare_with_matching_module():
    mod = singular.build_module(1, 3, 3)
    rep = oracle.joint_kernel(3, 1, mod.kappa0)
    cmpres = oracle.compare_with_module(rep, mod)
    assert cmpres["per_element"] == [True, True]
    assert cmpres["contains_module"] and cmpres["equal_to_module"]
    assert not cmpres["dimension_mismatch"]
    assert cmpres["kernel_dimension"] == 2 == cmpres["module_dimension"]
    assert rep.comparison is cmpres
    assert rep.to_json(include_timestamp=False)["comparison"] == cmpres


def test_compare_with_wrong_degree_records_not_raises():
    mod = singular.build_module(1, 3, 3)
    rep = oracle.joint_kernel(3, 2, mod.kappa0)
    cmpres = oracle.compare_with_module(rep, mod)
    assert cmpres["per_element"] == [False, False]
    assert not cmpres["contains_module"]
    assert not cmpres["equal_to_module"]


# ---------------------------------------------------------------------------
# cross-check the fraction-free elimination against a plain Fraction RREF

def _rref_nullspace(mat, ncols):
    a = [[Fraction(v) for v in row] for row in mat]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, c in zip(a, pivots):
            x[c] = -row[f]
        out.append(x)
    return out


def _bareiss_nullspace(mat, ncols):
    ech, pivots = oracle._bareiss_echelon(mat)
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = sum(Fraction(ech[r][j]) * x[j] for j in range(c + 1, ncols))
            x[c] = -s / ech[r][c]
        out.append(x)
    return out


def _in_span(vecs, v):
    if not vecs:
        return not any(v)
    rows = [list(u) for u in vecs]
    red = [Fraction(x) for x in v]
    piv = []
    a = [row[:] for row in rows]
    r = 0
    for c in range(len(v)):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
    for row, c in zip(a, piv):
        if red[c]:
            f = red[c]
            red = [x - f * y for x, y in zip(red, row)]
    return not any(red)


def test_bareiss_against_plain_rref_on_random_matrices():
    rng = random.Random(42)
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        mat = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        fast = _bareiss_nullspace(mat, cols)
        slow = _rref_nullspace(mat, cols)
        assert len(fast) == len(slow)
        for v in fast:
            assert _in_span(slow, v)
        for v in slow:
            assert _in_span(fast, v)
        for v in fast:
            for row in mat:
                assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
