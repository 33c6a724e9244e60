"""Acceptance gate: ten independent checks covering operator laws,
module certification, labeling, critical pairs, pole structure, the
brute-force kernel, coefficient formulas, step recursions, the
seminormal representation, and evaluation at the all-ones point."""

import random
import time
from fractions import Fraction

from singjack import combinatorics as comb
from singjack import jack
from singjack import multipoly as mp
from singjack import oracle
from singjack import singular
from singjack.exactarith import KappaRatio, kappa_linear
from singjack.operators import OperatorContext, cherednik, dunkl


def test_criterion_01_operator_commutativity():
    """Dunkl and Cherednik families commute pairwise on 50 seeded random
    polynomials at generic kappa, ambient up to 4, degree up to 5."""
    t0 = time.monotonic()
    rng = random.Random(20240917)
    count = 0
    while count < 50:
        N = rng.choice((2, 3, 4))
        ctx = OperatorContext(N)
        f = mp.mp_zero(N)
        for _ in range(4):
            e = tuple(rng.randint(0, 3) for _ in range(N))
            if sum(e) > 5:
                continue
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            f = f + mp.monomial(N, e, c)
        if f.is_zero():
            continue
        i = rng.randint(1, N - 1)
        j = rng.randint(i + 1, N)
        assert dunkl(ctx, i, dunkl(ctx, j, f)) == \
            dunkl(ctx, j, dunkl(ctx, i, f))
        assert cherednik(ctx, i, cherednik(ctx, j, f)) == \
            cherednik(ctx, j, cherednik(ctx, i, f))
        count += 1
    assert count == 50
    assert time.monotonic() - t0 < 60


def test_criterion_02_module_certification():
    """Eight parameter triples build fully certified singular modules:
    pole-free specialization, annihilation by every Dunkl operator,
    Murphy spectra matching tableau contents, isotype and seminormal
    structure."""
    t0 = time.monotonic()
    triples = [(1, 2, 3), (1, 2, 4), (1, 3, 3), (1, 3, 4),
               (2, 3, 4), (1, 4, 5), (1, 2, 5), (2, 6, 7)]
    for m, n, N in triples:
        module = singular.build_module(m, n, N)
        assert len(module.elements) == singular._syt_count(module.label.tau)
        for el in module.elements:
            assert el.certificates == {"pole_free": True,
                                       "annihilated": True,
                                       "murphy_spectrum_ok": True}
            assert singular.verify_singular(el.zeta)
        assert singular.isotype_check(module)
        assert singular.seminormal_check(module)
    assert time.monotonic() - t0 < 600


def test_criterion_03_labeling_row():
    """Parameter resolution for n=6, N=10 across every residue of m
    modulo 6: the isotype, the weight, and kappa0 = -m/6."""
    for m in range(1, 13):
        if m % 6 == 0:
            continue
        label = comb.resolve_label(m, 6, 10)
        assert label.kappa0 == Fraction(-m, 6)
        r = m % 6
        if r in (1, 5):
            assert label.family == "two_part"
            assert label.tau == (5, 5)
            assert label.lam == (m,) * 5 + (0,) * 5
        elif r in (2, 4):
            m1 = m // 2
            assert label.family == "multi"
            assert label.tau == (5, 2, 2, 1)
            assert label.lam == (4 * m1, 3 * m1, 3 * m1, 2 * m1,
                                 2 * m1) + (0,) * 5
        else:
            m1 = m // 3
            assert label.family == "multi"
            assert label.tau == (5, 1, 1, 1, 1, 1)
            assert label.lam == (7 * m1, 6 * m1, 5 * m1, 4 * m1,
                                 3 * m1) + (0,) * 5


def test_criterion_04_large_critical_partner():
    """In ambient 33 the constructed partner of the second decreased
    weight is an exact critical pair at (3, 4), in under a second."""
    t0 = time.monotonic()
    lam = comb.build_lambda(3, 4, 4, 2, 3)
    assert lam == (27, 27, 24, 24, 24, 21, 21, 21, 18, 18, 18,
                   15, 15, 15) + (0,) * 19
    assert len(lam) == 33
    lam1 = comb.comp_sub(lam, comb.epsilon(5, 33))
    partner = comb.critical_partner(3, 4, 4, 2, 3, 1)
    assert partner == (27, 27, 24, 24, 2, 0, 0, 0, 21, 21, 21,
                       18, 18, 18) + (3,) * 22
    assert len(partner) == 36
    assert comb.is_critical_pair(lam1, partner, 3, 4)
    assert time.monotonic() - t0 < 1


def test_criterion_05_pole_structure():
    """For both weight families the decreased weights have a simple hook
    zero below the top point and none at it, stay pole-free in their own
    ambient, admit no partner there, and the constructed partner is the
    unique hit in the extended ambient."""
    t0 = time.monotonic()
    for m, n, N in ((1, 2, 4), (1, 3, 5)):
        label = comb.resolve_label(m, n, N)
        assert label.family == "multi"
        l = label.params["l"]
        for k in range(l + 1):
            rep = singular.pole_analysis(label.lam, k, label)
            assert rep["l"] == l
            assert rep["hook_zero_multiplicity"] == (1 if k < l else 0)
            assert rep["expected_multiplicity"] == (1 if k < l else 0)
            assert rep["pole_free_at_ambient"]
            assert rep["partners_within_ambient"] == []
            if k < l:
                assert rep["constructed_found"] is True
                assert rep["partners_extended"] == [rep["constructed_partner"]]
            else:
                assert rep["partners_extended"] == []
    assert time.monotonic() - t0 < 300


def test_criterion_06_joint_kernel_contains_module():
    """The brute-force joint kernel of all Dunkl operators matches the
    constructed module in each of three (ambient, degree, kappa0)
    slices."""
    t0 = time.monotonic()
    cases = [((3, 1, Fraction(-1, 3)), (1, 3, 3)),
             ((3, 3, Fraction(-1, 2)), (1, 2, 3)),
             ((4, 6, Fraction(-1, 2)), (1, 2, 4))]
    for (N, degree, kappa0), (m, n, NN) in cases:
        assert N == NN
        module = singular.build_module(m, n, N)
        assert comb.comp_weight(module.label.lam) == degree
        assert module.kappa0 == kappa0
        report = oracle.joint_kernel(N, degree, kappa0)
        comparison = oracle.compare_with_module(report, module)
        assert comparison["contains_module"]
        assert comparison["equal_to_module"]
        assert report.dimension == len(module.elements)
    assert time.monotonic() - t0 < 600


def test_criterion_07_squarefree_coefficient():
    """The coefficient of the squarefree monomial in the x-monic
    eigenvector of a partition is |lam|! kappa^|lam| / h(lam, kappa+1),
    checked in the minimal ambient that holds it."""
    for lam in ((1,), (2,), (2, 1)):
        N = len(lam) + comb.comp_weight(lam)
        assert jack.ks_coefficient_check(lam, N)


def test_criterion_08_step_and_recursion_laws():
    """Over every partition of weight at most 5 in ambients up to 4:
    the last-variable differentiation formula, the block recursion for
    all points of decrease, single-step moves across equal blocks, and
    swap-replay chains reaching every rearrangement."""
    t0 = time.monotonic()
    for d in range(1, 6):
        for lam in comb.partitions_of(d):
            for n in range(max(2, comb.comp_length(lam)), 5):
                lamp = comb.pad(lam, n)
                z = jack.zeta_p(lamp, n)

                scalar, rotated = jack.dm_formula(z)
                m = comb.comp_length(lamp)
                assert scalar == KappaRatio(
                    kappa_linear(n + 1 - comb.rank(lamp, m), lamp[m - 1]),
                    kappa_linear(0, 1))
                assert rotated.alpha == comb.pad(comb.tilde(lamp), n)

                rep = jack.bigdiff_verify(lamp, n)
                assert rep["ok"]
                assert all(st["ok"] for st in rep["recursion"])

                # block boundaries: i ends a value run, s = next run length
                runs = []
                i = 1
                while i <= n:
                    j = i
                    while j < n and lamp[j] == lamp[i - 1]:
                        j += 1
                    runs.append((i, j))
                    i = j + 1
                for (a0, a1), (b0, b1) in zip(runs, runs[1:]):
                    s = b1 - b0 + 1
                    moved = jack.movert_step(z, a1, s)
                    tgt = comb.perm_on_comp(
                        comb.transposition(n, a1, a1 + s), lamp)
                    assert moved.poly == jack.zeta_p(tgt, n).poly
                    back = jack.movelt_step(z, a0, a1 - a0 + 1)
                    tgt2 = comb.perm_on_comp(
                        comb.transposition(n, a0, a1 + 1), lamp)
                    assert back.poly == jack.zeta_p(tgt2, n).poly

                for alpha in comb.rearrangements(lam, n):
                    cur = list(alpha)
                    swaps = []
                    changed = True
                    while changed:
                        changed = False
                        for i in range(n - 1):
                            if cur[i] < cur[i + 1]:
                                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                                swaps.append(i + 1)
                                changed = True
                    assert tuple(cur) == lamp
                    zz = z
                    for i in reversed(swaps):
                        zz = jack.z2sz_step(zz, i)
                    assert zz.alpha == comb.pad(alpha, n)
                    assert zz.poly == jack.zeta_p(alpha, n).poly
    assert time.monotonic() - t0 < 900


def test_criterion_09_seminormal_representation():
    """For two small modules the realized transposition matrices follow
    the tableau case rules, the Murphy spectra are the tableau content
    vectors (the leading element carrying the reversed content sequence
    of the weight), the dimension counts standard tableaux, and the
    central element fixes the degree law."""
    for m, n, N in ((1, 3, 4), (1, 3, 3)):
        module = singular.build_module(m, n, N)
        assert singular.seminormal_check(module)
        assert singular.seminormal_matrices(module) == \
            singular.murphy_rule_matrices(module)
        spectra = singular.murphy_spectrum_check(module)
        assert spectra["ok"]
        for el, spec in zip(module.elements, spectra["spectra"]):
            assert spec == [el.tableau.eta(j) for j in range(1, N + 1)]
        lead = spectra["spectra"][0]
        contents = comb.content_sequence(module.label.lam, module.kappa0)
        assert lead == list(reversed(contents))
        assert len(module.elements) == singular._syt_count(module.label.tau)
        assert singular.isotype_check(module)
        tau_omega = comb.omega_eigenvalue(module.label.tau)
        assert Fraction(comb.comp_weight(module.label.lam)) == \
            -module.kappa0 * tau_omega


def test_criterion_10_evaluation_at_ones():
    """Every p-monic eigenvector of weight at most 4 in ambients up to 4
    evaluates at the all-ones point to E_-(alpha) (N kappa + 1)_{alpha+}
    / h(alpha+, 1), and the x-to-p conversion scalar is the hook/E
    factor in every case."""
    for N in (2, 3, 4):
        for d in range(1, 5):
            for alpha in comb.compositions_of(d, N):
                zx = jack.zeta_x(alpha, N)
                zp = jack.zeta_p(alpha, N)
                fac = jack.p_to_x_factor(alpha)
                assert zp.poly == mp.poly_scale(zx.poly, fac)
                assert mp.coeff(zp.poly, comb.pad(alpha, N)) == fac
                lamp = comb.sort_desc(alpha)
                expected = comb.e_factor(alpha, -1) * KappaRatio(
                    comb.pochhammer(kappa_linear(N, 1), lamp),
                    comb.hook_product(lamp, 1))
                assert mp.eval_ones(zp.poly) == expected
