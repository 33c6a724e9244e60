"""Nonsymmetric Jack polynomials over the generic parameter field.

Construction is a triangular joint-eigenvector solve against the Cherednik
operators; the transposition/cycle recurrences are implemented as separate
routes so the two can be cross-checked.  All arithmetic is exact.
"""

from fractions import Fraction
from math import factorial

from . import combinatorics as comb
from .exactarith import (
    KAPPA,
    KP_ONE,
    KappaPoly,
    KappaRatio,
    KR_ONE,
    KR_ZERO,
    kappa_linear,
    ratio_sum,
)
from .multipoly import (
    MultiPoly,
    apply_perm,
    coeff,
    monomial,
    mp_zero,
    poly_add,
    poly_scale,
    poly_sub,
    word_apply,
)
from .operators import OperatorContext, cherednik, dunkl


class SpectralCollision(ArithmeticError):
    pass


class NotDecreasingAt(ValueError):
    def __init__(self, i, msg=None):
        self.i = i
        super().__init__(msg or "entry %d is not greater than its successor" % i)


class DegenerateFactor(ArithmeticError):
    pass


class PreconditionViolation(ValueError):
    pass


class FormulaMismatch(Exception):
    def __init__(self, msg, lhs=None, rhs=None, at=None):
        super().__init__(msg)
        self.lhs = lhs
        self.rhs = rhs
        self.at = at


class AmbientTooSmall(ValueError):
    pass


class SolveFailure(ArithmeticError):
    pass


# ------------------------------------------------------------ denominators

def _linear_factors(kp):
    """Factor a monic KappaPoly into (monic linear, multiplicity) pairs.

    Roots are found by rational-root extraction; any rootless remainder of
    positive degree is returned as a single factor with multiplicity 1.
    """
    out = []
    if kp.degree <= 0:
        return out
    rem = kp.monic()
    # integer-primitive form for root candidates
    while rem.degree >= 1:
        coeffs = rem.coeffs
        den_lcm = 1
        for c in coeffs:
            den_lcm = den_lcm * c.denominator // _gcd_int(den_lcm, c.denominator)
        ints = [int(c * den_lcm) for c in coeffs]
        a0, an = ints[0], ints[-1]
        root = None
        if a0 == 0:
            root = Fraction(0)
        else:
            for p in _divisors(abs(a0)):
                for q in _divisors(abs(an)):
                    for cand in (Fraction(p, q), Fraction(-p, q)):
                        if rem.eval_at(cand) == 0:
                            root = cand
                            break
                    if root is not None:
                        break
                if root is not None:
                    break
        if root is None:
            out.append((rem, 1))
            return out
        lin = KappaPoly((-root, 1))
        mult = 0
        while True:
            q, r = rem.divmod(lin)
            if not r.is_zero():
                break
            rem = q
            mult += 1
        out.append((lin, mult))
    return sorted(out, key=lambda t: (t[0].degree, t[0].coeffs))


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a if a else 1


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def denominator_profile(f):
    """Distinct irreducible kappa-denominator factors across coefficients,
    each with its maximal multiplicity in any single coefficient."""
    best = {}
    for c in f.terms.values():
        for fac, mult in _linear_factors(c.den):
            key = fac.coeffs
            if mult > best.get(key, (None, 0))[1]:
                best[key] = (fac, mult)
    return sorted(best.values(), key=lambda t: (t[0].degree, t[0].coeffs))


# ------------------------------------------------------------------ JackPoly

class JackPoly:
    """A simultaneous Cherednik eigenvector tagged with its composition.

    basis "x": coefficient of x^alpha is 1 and the rest of the support is
    strictly below alpha in the triangle order.  basis "p": the same
    polynomial rescaled so its p-expansion is monic at p_alpha.
    """

    __slots__ = ("alpha", "n", "basis", "poly", "denominator_factors")

    def __init__(self, alpha, n, basis, poly, denominator_factors=None,
                 check=True):
        if basis not in ("x", "p"):
            raise ValueError("basis must be 'x' or 'p', got %r" % (basis,))
        self.alpha = comb.pad(alpha, n)
        self.n = n
        self.basis = basis
        self.poly = poly
        if denominator_factors is None:
            denominator_factors = denominator_profile(poly)
        self.denominator_factors = denominator_factors
        if check:
            self._assert_eigen()
            if basis == "x":
                self._assert_x_monic()

    def _assert_eigen(self):
        ctx = OperatorContext(self.n)
        spec = comb.spectral_vector(self.alpha)
        for i in range(1, self.n + 1):
            xi = kappa_linear(*spec[i - 1])
            if cherednik(ctx, i, self.poly) != poly_scale(self.poly, xi):
                raise SolveFailure(
                    "U_%d eigen-equation fails for alpha=%s" % (i, self.alpha)
                )

    def _assert_x_monic(self):
        lead = self.poly.terms.get(self.alpha)
        if lead != KR_ONE:
            raise SolveFailure("leading coefficient at x^alpha is %r" % (lead,))
        for e in self.poly.terms:
            if e != self.alpha and not comb.triangle_greater(self.alpha, e):
                raise SolveFailure(
                    "support %s not below %s" % (e, self.alpha)
                )

    def degree(self):
        return comb.comp_weight(self.alpha)

    def to_json(self):
        body = self.poly.to_json()
        body["alpha"] = list(self.alpha)
        body["basis"] = self.basis
        body["denominator_factors"] = [
            {"factor": fac.to_json(), "multiplicity": mult}
            for fac, mult in self.denominator_factors
        ]
        return body

    @classmethod
    def from_json(cls, obj, check=False):
        poly = MultiPoly.from_json(obj)
        factors = [
            (KappaPoly.from_json(d["factor"]), d["multiplicity"])
            for d in obj.get("denominator_factors", [])
        ]
        return cls(obj["alpha"], obj["N"], obj["basis"], poly,
                   denominator_factors=factors, check=check)

    def __repr__(self):
        return "JackPoly(alpha=%s, n=%d, basis=%r)" % (
            self.alpha, self.n, self.basis)


# ------------------------------------------------------------- construction

_UMONO_CACHE = {}
_ZETA_CACHE = {}


def clear_caches():
    _UMONO_CACHE.clear()
    _ZETA_CACHE.clear()


def _u_monomial_terms(n, i, exp):
    """Terms of U_i x^exp at generic kappa, cached."""
    key = (n, i, exp)
    got = _UMONO_CACHE.get(key)
    if got is None:
        ctx = OperatorContext(n)
        got = cherednik(ctx, i, monomial(n, exp)).terms
        _UMONO_CACHE[key] = got
    return got


def zeta_x(alpha, n):
    """The x-monic simultaneous eigenvector for composition alpha.

    Triangular solve over the down-set of alpha: each lower coefficient is
    determined from already-solved ones via the least Cherednik operator
    separating the spectra, then every eigen-equation is asserted.
    """
    alpha = tuple(int(a) for a in alpha)
    if comb.comp_length(alpha) > n:
        raise AmbientTooSmall(
            "composition %s does not fit in %d variables" % (alpha, n))
    alpha = comb.pad(alpha, n)
    key = (alpha, n, "x")
    got = _ZETA_CACHE.get(key)
    if got is not None:
        return got

    dset = comb.down_set(alpha)
    spec_a = comb.spectral_vector(alpha)
    coeffs = {alpha: KR_ONE}
    order = [alpha]
    for beta in dset[1:]:
        spec_b = comb.spectral_vector(beta)
        piv = None
        for i in range(n):
            if spec_a[i] != spec_b[i]:
                piv = i + 1
                break
        if piv is None:
            raise SpectralCollision(
                "eigenvalue vectors of %s and %s coincide" % (alpha, beta))
        da, db = spec_a[piv - 1], spec_b[piv - 1]
        denom = kappa_linear(da[0] - db[0], da[1] - db[1])
        items = []
        for gamma in order:
            c = _u_monomial_terms(n, piv, gamma).get(beta)
            if c is not None:
                items.append(coeffs[gamma] * c)
        if items:
            val = ratio_sum(items) / denom
            if val:
                coeffs[beta] = val
                order.append(beta)

    poly = MultiPoly(n, dict(coeffs), field=None, _clean=True)
    zp = JackPoly(alpha, n, "x", poly)
    _ZETA_CACHE[key] = zp
    return zp


def p_to_x_factor(alpha):
    """Scalar carrying zeta^x to the p-monic normalization."""
    lam = comb.sort_desc(alpha)
    num = comb.hook_product(lam, kappa_linear(1, 1))
    den = comb.hook_product(lam, 1)
    fac = comb.e_factor(alpha, 1) * comb.e_factor(alpha, -1)
    return fac * KappaRatio(num, den)


def zeta_p(alpha, n):
    """The p-monic eigenvector: zeta_x rescaled by the hook/E factor."""
    alpha = tuple(int(a) for a in alpha)
    if comb.comp_length(alpha) > n:
        raise AmbientTooSmall(
            "composition %s does not fit in %d variables" % (alpha, n))
    alpha = comb.pad(alpha, n)
    key = (alpha, n, "p")
    got = _ZETA_CACHE.get(key)
    if got is not None:
        return got
    zx = zeta_x(alpha, n)
    poly = poly_scale(zx.poly, p_to_x_factor(alpha))
    zp = JackPoly(alpha, n, "p", poly)
    _ZETA_CACHE[key] = zp
    return zp


def _rising(base, k):
    out = KP_ONE
    for q in range(k):
        out = out * (base + q)
    return out


def p_basis(alpha, n):
    """Coefficient of y^alpha in prod_i ((1-x_i y_i)^-1 prod_j (1-x_i y_j)^-kappa).

    Truncated series: y_j is capped at alpha_j and processed one j at a time,
    pinning the y_j-degree to alpha_j before moving on.  The x-degree always
    equals the pinned y-weight, so no spurious terms are carried.
    """
    alpha = tuple(int(a) for a in alpha)
    if comb.comp_length(alpha) > n:
        raise AmbientTooSmall(
            "composition %s does not fit in %d variables" % (alpha, n))
    alpha = comb.pad(alpha, n)
    state = {(0,) * n: KP_ONE}
    for j in range(1, n + 1):
        cap = alpha[j - 1]
        if cap == 0:
            continue
        layers = [state] + [{} for _ in range(cap)]
        for i in range(1, n + 1):
            base = kappa_linear(1, 1) if i == j else KAPPA
            series = [_rising(base, t) * Fraction(1, factorial(t))
                      for t in range(cap + 1)]
            new = [{} for _ in range(cap + 1)]
            for t_prev in range(cap + 1):
                src = layers[t_prev]
                if not src:
                    continue
                for t in range(cap + 1 - t_prev):
                    c = series[t]
                    if c.is_zero():
                        continue
                    dst = new[t_prev + t]
                    for e, v in src.items():
                        if t:
                            e2 = list(e)
                            e2[i - 1] += t
                            e2 = tuple(e2)
                        else:
                            e2 = e
                        vc = v * c
                        acc = dst.get(e2)
                        if acc is None:
                            dst[e2] = vc
                        else:
                            acc = acc + vc
                            if acc.is_zero():
                                del dst[e2]
                            else:
                                dst[e2] = acc
            layers = new
        state = layers[cap]
    return MultiPoly(n, state)


# ----------------------------------------------------------- step formulas

def z2sz_step(zeta, i):
    """Adjacent-transposition step from zeta_alpha to zeta_{(i,i+1)alpha},
    valid when alpha_i > alpha_{i+1}."""
    alpha, n = zeta.alpha, zeta.n
    if not 1 <= i < n:
        raise NotDecreasingAt(i, "position %d has no successor in %d" % (i, n))
    if alpha[i - 1] <= alpha[i]:
        raise NotDecreasingAt(i)
    d_r = comb.rank(alpha, i + 1) - comb.rank(alpha, i)
    denom = kappa_linear(d_r, alpha[i - 1] - alpha[i])
    a = KAPPA / denom
    sigma = comb.transposition(n, i, i + 1)
    flipped = poly_sub(apply_perm(sigma, zeta.poly), poly_scale(zeta.poly, a))
    if zeta.basis == "x":
        fac = KR_ONE - a * a
        if not fac:
            raise DegenerateFactor("1 - a^2 vanishes at position %d" % i)
        flipped = poly_scale(flipped, fac.reciprocal())
    return JackPoly(comb.perm_on_comp(sigma, alpha), n, zeta.basis, flipped)


def movert_step(zeta, i, s):
    """Move a larger entry right across a block of equal smaller entries:
    alpha_i = a > b = alpha_{i+1} = ... = alpha_{i+s}.  p-monic only."""
    alpha, n = zeta.alpha, zeta.n
    if zeta.basis != "p":
        raise PreconditionViolation("movert_step needs the p-monic basis")
    if not (1 <= i and i + s <= n and s >= 1):
        raise PreconditionViolation("window [%d,%d] outside [1,%d]" % (i, i + s, n))
    a, b = alpha[i - 1], alpha[i + s - 1]
    if not a > b:
        raise PreconditionViolation(
            "alpha_%d=%d not greater than alpha_%d=%d" % (i, a, i + s, b))
    for j in range(1, s + 1):
        if alpha[i + j - 1] != b:
            raise PreconditionViolation(
                "alpha_%d=%d breaks the constant block of %d"
                % (i + j, alpha[i + j - 1], b))
    d_r = comb.rank(alpha, i + s) - comb.rank(alpha, i)
    bracket = KAPPA / kappa_linear(d_r, a - b)
    word = [(1, comb.identity_perm(n))]
    for j in range(1, s):
        word.append((1, comb.transposition(n, i, i + j)))
    moved = poly_sub(
        apply_perm(comb.transposition(n, i, i + s), zeta.poly),
        poly_scale(word_apply(word, zeta.poly), bracket),
    )
    new_alpha = comb.perm_on_comp(comb.transposition(n, i, i + s), alpha)
    return JackPoly(new_alpha, n, "p", moved)


def movelt_step(zeta, i, s):
    """Move a smaller entry left across a block of equal larger entries:
    alpha_i = ... = alpha_{i+s-1} = b > a = alpha_{i+s}.  p-monic only."""
    alpha, n = zeta.alpha, zeta.n
    if zeta.basis != "p":
        raise PreconditionViolation("movelt_step needs the p-monic basis")
    if not (1 <= i and i + s <= n and s >= 1):
        raise PreconditionViolation("window [%d,%d] outside [1,%d]" % (i, i + s, n))
    b, a = alpha[i - 1], alpha[i + s - 1]
    if not b > a:
        raise PreconditionViolation(
            "alpha_%d=%d not greater than alpha_%d=%d" % (i, b, i + s, a))
    for j in range(1, s):
        if alpha[i + j - 1] != b:
            raise PreconditionViolation(
                "alpha_%d=%d breaks the constant block of %d"
                % (i + j, alpha[i + j - 1], b))
    d_r = comb.rank(alpha, i + s) - comb.rank(alpha, i)
    bracket = KAPPA / kappa_linear(d_r, b - a)
    word = [(1, comb.identity_perm(n))]
    for j in range(1, s):
        word.append((1, comb.transposition(n, i + j, i + s)))
    moved = poly_sub(
        apply_perm(comb.transposition(n, i, i + s), zeta.poly),
        poly_scale(word_apply(word, zeta.poly), bracket),
    )
    new_alpha = comb.perm_on_comp(comb.transposition(n, i, i + s), alpha)
    return JackPoly(new_alpha, n, "p", moved)


# ------------------------------------------------- differentiation formulas

def dm_formula(zeta):
    """Closed form for D_m zeta_alpha, m = length of alpha (p-monic).

    Returns (scalar, rotated) with scalar = (N+1-r(alpha,m))kappa + alpha_m
    and rotated = the inverse cycle applied to zeta of the wrapped
    composition; asserts D_m zeta == scalar * rotated and D_i zeta == 0 for
    i > m before returning.
    """
    if zeta.basis != "p":
        raise PreconditionViolation("dm_formula needs the p-monic basis")
    alpha, n = zeta.alpha, zeta.n
    m = comb.comp_length(alpha)
    if m == 0:
        raise comb.ZeroComposition("zero composition has no last entry")
    scalar = KappaRatio(
        kappa_linear(n + 1 - comb.rank(alpha, m), alpha[m - 1]), KP_ONE)
    at = comb.tilde(alpha)
    zt = zeta_p(at, n)
    rotated = apply_perm(comb.invert(comb.theta_perm(n, m)), zt.poly)
    ctx = OperatorContext(n)
    lhs = dunkl(ctx, m, zeta.poly)
    rhs = poly_scale(rotated, scalar)
    if lhs != rhs:
        raise FormulaMismatch(
            "D_%d zeta_%s does not match the cycle formula" % (m, alpha),
            lhs=lhs, rhs=rhs)
    for i in range(m + 1, n + 1):
        if dunkl(ctx, i, zeta.poly):
            raise FormulaMismatch(
                "D_%d zeta_%s expected to vanish" % (i, alpha),
                lhs=dunkl(ctx, i, zeta.poly), rhs=mp_zero(n))
    out = JackPoly(at, n, "p", rotated, check=False)
    return scalar, out


def _chain_word_apply(pairs, poly):
    # pairs: sequence of (transposition, bracket KappaRatio, block word);
    # applies ((t) - bracket*word) left-factor steps in the given order
    for t, bracket, word in pairs:
        poly = poly_sub(
            apply_perm(t, poly),
            poly_scale(word_apply(word, poly), bracket),
        )
    return poly


def bigdiff_verify(lam, n):
    """Execute the block recursion for D_{i_j} zeta_lambda and verify each
    stage against direct Dunkl application.  Returns a report dict."""
    lam = comb.pad(lam, n)
    plan = comb.bigdiff_plan(lam)
    pts = plan.points
    M = plan.M
    ctx = OperatorContext(n)
    z_lam = zeta_p(lam, n)

    report = {
        "lambda": list(lam),
        "N": n,
        "points_of_decrease": list(pts),
        "final_coefficients": [str(plan.scalar(s)) for s in range(1, M + 1)],
        "mu_chain": [],
        "nu_chain": [],
        "recursion": [],
    }

    # mu-chain: zeta_{mu(j,k+1)} = z_{j,k+1} zeta_{mu(j,k)}
    for j in range(1, M + 1):
        for k in range(j, M):
            lhs = zeta_p(plan.mu[(j, k + 1)], n).poly
            rhs = word_apply(plan.z[(j, k + 1)], zeta_p(plan.mu[(j, k)], n).poly)
            ok = lhs == rhs
            report["mu_chain"].append({"j": j, "k": k + 1, "ok": ok})
            if not ok:
                raise FormulaMismatch(
                    "mu-chain step (%d,%d) fails" % (j, k + 1),
                    lhs=lhs, rhs=rhs, at=j)

    # nu-chain: from zeta_{lambda - eps(i_j)} up to zeta_{nu(0,j)}, which must
    # match the wrapped composition from the mu-route
    for j in range(1, M + 1):
        if comb.tilde(plan.mu[(j, M)]) != plan.nu[(0, j)]:
            raise FormulaMismatch(
                "wrapped mu(%d,M) disagrees with nu(0,%d)" % (j, j), at=j)
        cur = zeta_p(plan.nu[(j, j)], n).poly
        steps = []
        if (j - 1, j) in plan.Cp:
            ijm1 = pts[j - 2] if j >= 2 else 0
            steps.append((comb.transposition(n, ijm1 + 1, pts[j - 1]),
                          plan.Cp[(j - 1, j)], plan.wp[(j - 1, j)]))
        for k in range(j - 2, -1, -1):
            ik = pts[k - 1] if k >= 1 else 0
            ik1 = pts[k]
            steps.append((comb.transposition(n, ik + 1, ik1 + 1),
                          plan.Cp[(k, j)], plan.wp[(k, j)]))
        expect = [plan.nu[(k, j)] for k in range(j - 1, -1, -1)]
        if (j - 1, j) not in plan.Cp:
            # adjacent blocks: nu(j-1,j) == nu(j,j), no step emitted
            expect = expect[1:] if j >= 1 else expect
            if plan.nu.get((j - 1, j)) != plan.nu[(j, j)]:
                raise FormulaMismatch(
                    "expected nu(%d,%d) == nu(%d,%d)" % (j - 1, j, j, j), at=j)
        for target, (t, bracket, word) in zip(expect, steps):
            cur = _chain_word_apply([(t, bracket, word)], cur)
            ok = cur == zeta_p(target, n).poly
            report["nu_chain"].append({"j": j, "target": list(target), "ok": ok})
            if not ok:
                raise FormulaMismatch(
                    "nu-chain step toward %s fails" % (target,), at=j)

    # block recursion, solved from j = M downward
    d_rec = {}
    for j in range(M, 0, -1):
        scalar, rotated = dm_formula(zeta_p(plan.mu[(j, M)], n))
        acc = rotated.poly
        acc = poly_scale(acc, scalar)
        for r in range(M - 1, j - 1, -1):
            acc = apply_perm(comb.transposition(n, pts[r - 1], pts[r]), acc)
        for s in range(j + 1, M + 1):
            term = d_rec[s]
            for k in range(j + 1, s):
                term = word_apply(plan.z[(j, k)], term)
            term = word_apply(plan.w[s - 1], term)
            for r in range(s - 1, j - 1, -1):
                term = apply_perm(
                    comb.transposition(n, pts[r - 1], pts[r]), term)
            acc = poly_add(acc, poly_scale(term, plan.C[(j, s)]))
        d_rec[j] = acc
        direct = dunkl(ctx, pts[j - 1], z_lam.poly)
        ok = acc == direct
        report["recursion"].append({"j": j, "i": pts[j - 1], "ok": ok})
        if not ok:
            raise FormulaMismatch(
                "recursion for D_%d disagrees with direct application"
                % pts[j - 1], lhs=acc, rhs=direct, at=j)

    report["ok"] = True
    return report


def ks_coefficient_check(lam, n):
    """Compare the squarefree coefficient of zeta_lambda^x against
    |lam|! kappa^|lam| / h(lam, kappa+1)."""
    lam = tuple(int(a) for a in lam)
    if not comb.is_partition(lam):
        raise comb.ShapeViolation("not a partition: %s" % (lam,))
    m = comb.comp_length(lam)
    wt = comb.comp_weight(lam)
    if n < m + wt:
        raise AmbientTooSmall(
            "need at least %d variables for %s" % (m + wt, lam))
    z = zeta_x(lam, n)
    exp = (0,) * m + (1,) * wt + (0,) * (n - m - wt)
    lhs = coeff(z.poly, exp)
    num = KappaPoly((0,) * wt + (Fraction(factorial(wt)),))
    rhs = KappaRatio(num, comb.hook_product(lam, kappa_linear(1, 1)))
    return lhs == rhs


# --------------------------------------------------------- p-basis expansion

def _solve_square(mat, rhs):
    """Solve mat * x = rhs exactly; entries KappaPoly/KappaRatio."""
    size = len(mat)
    a = [[KR_ZERO + mat[r][c] for c in range(size)] for r in range(size)]
    b = [KR_ZERO + rhs[r] for r in range(size)]
    for col in range(size):
        piv = None
        for r in range(col, size):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise SolveFailure("matrix is singular at column %d" % col)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
        inv = a[col][col].reciprocal()
        for c in range(col, size):
            a[col][c] = a[col][c] * inv
        b[col] = b[col] * inv
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                for c in range(col, size):
                    a[r][c] = a[r][c] - f * a[col][c]
                b[r] = b[r] - f * b[col]
    return b


_PBASIS_CACHE = {}


def _p_basis_cached(gamma, n):
    key = (gamma, n)
    got = _PBASIS_CACHE.get(key)
    if got is None:
        got = p_basis(gamma, n)
        _PBASIS_CACHE[key] = got
    return got


def p_expand(f, n):
    """Expand a homogeneous polynomial in the p-basis of its degree.

    Returns a dict composition -> KappaRatio.  Exact linear solve against
    all p_gamma of the same degree.
    """
    if not f.is_homogeneous():
        raise SolveFailure("p-expansion needs a homogeneous input")
    d = f.degree()
    if d < 0:
        return {}
    gammas = list(comb.compositions_of(d, n))
    monos = gammas  # same index set: exponent vectors of degree d
    index = {e: r for r, e in enumerate(monos)}
    mat = [[KR_ZERO for _ in gammas] for _ in monos]
    for c, gamma in enumerate(gammas):
        for e, v in _p_basis_cached(gamma, n).terms.items():
            mat[index[e]][c] = v
    rhs = [KR_ZERO for _ in monos]
    for e, v in f.terms.items():
        rhs[index[e]] = v
    sol = _solve_square(mat, rhs)
    return {g: sol[c] for c, g in enumerate(gammas) if sol[c]}


def difp_support_check(alpha, n):
    """Expand D_m p_alpha in the p-basis and check the support law:
    the coefficient at alpha - eps(m) is (N+1-r(alpha,m))kappa + alpha_m,
    and every other contributing index gamma has support in [1,m] with
    alpha strictly below gamma + eps(m) in the triangle order."""
    alpha = comb.pad(tuple(int(a) for a in alpha), n)
    m = comb.comp_length(alpha)
    if m == 0:
        raise comb.ZeroComposition("zero composition not allowed")
    ctx = OperatorContext(n)
    dp = dunkl(ctx, m, _p_basis_cached(alpha, n))
    expansion = p_expand(dp, n)
    target = comb.comp_sub(alpha, comb.epsilon(m, n))
    diag = expansion.get(target, KR_ZERO)
    want = KR_ZERO + kappa_linear(n + 1 - comb.rank(alpha, m), alpha[m - 1])
    if diag != want:
        return False
    for gamma, val in expansion.items():
        if gamma == target:
            continue
        if comb.comp_length(gamma) > m:
            return False
        lifted = tuple(g + (1 if i == m - 1 else 0)
                       for i, g in enumerate(gamma))
        if not comb.triangle_greater(lifted, alpha):
            return False
    return True
