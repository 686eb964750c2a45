#!/usr/bin/env python3
"""Independent reference oracle for the fixture corpus.

Computes expected values for every fixture with sympy (exact factorization,
Jordan forms, signatures) and mpmath (high-precision root finding, PSLQ
integer-relation search).  Deliberately shares no code with the C++ library:
exterior powers are built from minors, characteristic polynomials of wedge
actions are reconstructed from numeric root products and rounded to integers,
and all relation claims are re-checked at several precisions.

Output: expected.json next to this script (consumed by gen_expected_header.py).
"""

import json
import itertools
import os
from fractions import Fraction

import mpmath as mp
import sympy as sp

T = sp.Symbol("T")

HERE = os.path.dirname(os.path.abspath(__file__))


# ----------------------------------------------------------------------------
# fixture inputs
# ----------------------------------------------------------------------------

# polynomial coefficients, lowest degree first (constant term first)
POLY_FIXTURES = {
    "s15":                  [1, 0, -1, 1, 0, -1, 1],
    "grado9":               [1, -1, 1, -2, 4, -3, 1],
    "caso2":                [1, -3, 2, -1, 2, 1, 1],
    "four-orbit":           [1, -2, 2, 1, 4, 1, 1],
    "lambda1-eq-lambda2sq": [1, -1, 1, -2, 1, 0, 1],
}

MATRIX3_FIXTURES = {
    "unipotent-1": [[1, 0, 0], [1, 1, 0], [0, 1, 1]],
    "unipotent-2": [[1, 0, 0], [1, 1, 0], [0, 0, 1]],
}

# 9x9 degree-(1,1) actions as printed in the source material, frozen verbatim.
PRINTED_H11_1 = [
    [1, 1, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 0, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
]
PRINTED_H11_2 = [
    [1, 1, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 1, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
]

SURFACE_LOXODROMIC = {"g": [[2, 1], [1, 1]], "q": [[-2, 1], [1, 2]]}
SURFACE_PARABOLIC = {"g": [[1, 2, 2], [0, 1, 2], [0, 0, 1]],
                     "q": [[0, 0, 1], [0, -1, 0], [1, 0, 0]]}


# ----------------------------------------------------------------------------
# helpers
# ----------------------------------------------------------------------------

def poly_from_low(coeffs):
    return sp.Poly(list(reversed(coeffs)), T)


def roots_mpmath(coeffs_low, dps=None):
    """High-precision complex roots, coefficients lowest-first."""
    with mp.workdps(dps or mp.mp.dps):
        return mp.polyroots([mp.mpf(c) for c in reversed(coeffs_low)],
                            maxsteps=500, extraprec=200)


def conjugate_order(roots):
    """Split roots into (positive-imag reps sorted by |.| desc, check pairing)."""
    used = [False] * len(roots)
    reps = []
    for i, r in enumerate(roots):
        if used[i]:
            continue
        if abs(mp.im(r)) < mp.mpf(10) ** (-mp.mp.dps + 15):
            raise ValueError("unexpected real root")
        best, bestd = None, None
        for j in range(len(roots)):
            if j == i or used[j]:
                continue
            d = abs(roots[j] - mp.conj(r))
            if bestd is None or d < bestd:
                best, bestd = j, d
        assert bestd < mp.mpf(10) ** (-mp.mp.dps + 20), "pairing failed"
        used[i] = used[best] = True
        reps.append(r if mp.im(r) > 0 else roots[best])
    reps.sort(key=lambda z: -abs(z))
    return reps


def int_poly_from_roots(roots, tol_exp=-40):
    """Monic integer polynomial with the given numeric roots (rounded, checked)."""
    coeffs = [mp.mpc(1)]
    for r in roots:
        nxt = [mp.mpc(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c           # multiply by T
            nxt[i + 1] -= c * r   # constant -r
        coeffs = nxt
    out = []
    for c in coeffs:
        ri = mp.nint(mp.re(c))
        assert abs(mp.re(c) - ri) < mp.mpf(10) ** tol_exp, f"non-integer coeff {c}"
        assert abs(mp.im(c)) < mp.mpf(10) ** tol_exp, f"complex coeff {c}"
        out.append(int(ri))
    # out is highest-first implicit: coeffs[0] is T^n coefficient
    return list(reversed(out))    # return lowest-first


def cluster(values, rel_tol_exp=-60):
    """Cluster near-equal positive reals; returns list of (rep, count)."""
    out = []
    for v in sorted(values):
        if out and abs(v - out[-1][0]) < abs(out[-1][0]) * mp.mpf(10) ** rel_tol_exp:
            out[-1][1] += 1
        else:
            out.append([v, 1])
    return [(v, c) for v, c in out]


def nstr(x, digits=50):
    return mp.nstr(x, digits, strip_zeros=False)


def kron(A, B):
    n, m = len(A), len(A[0])
    p, q = len(B), len(B[0])
    out = [[0] * (m * q) for _ in range(n * p)]
    for i in range(n):
        for j in range(m):
            for k in range(p):
                for l in range(q):
                    out[i * p + k][j * q + l] = A[i][j] * B[k][l]
    return out


def transpose(A):
    return [list(r) for r in zip(*A)]


def exterior_square(M):
    """15x15 second exterior power of a 6x6 sympy Matrix, lex 2-subset basis."""
    subs = list(itertools.combinations(range(6), 2))
    E = sp.zeros(15, 15)
    for a, (i, j) in enumerate(subs):
        for b, (k, l) in enumerate(subs):
            E[a, b] = M[i, k] * M[j, l] - M[i, l] * M[j, k]
    return E


def jordan_blocks(M):
    """Multiset of Jordan block sizes of a sympy rational matrix."""
    _, J = M.jordan_form()
    sizes = []
    n = J.rows
    i = 0
    while i < n:
        size = 1
        while i + size < n and J[i + size - 1, i + size] == 1:
            size += 1
        sizes.append(size)
        i += size
    return sorted(sizes, reverse=True)


def growth_fit_int(M_rows, n_max=500):
    """Numeric growth fit for an integer matrix using exact integer powers.

    Two regimes, chosen by the magnitude of the polynomial-regime estimate:

    * polynomial growth (rho == 1): solve d_n = L + a/n + b/n^2 for L at
      the three nodes n in {N/8, N/4, N/2}, where d_n = (log P_{2n} -
      log P_n)/n; the 1/n series of log P_n = n log rho + k log n + c +
      c1/n + ... is eliminated to third order.
    * spectral growth: telescoped endpoint ratio (log P_N - log P_{N-W})/W
      with the k log n drift removed exactly by selecting the integer k
      whose residual sum of squares over the trailing window is smallest;
      late-window data only, so slim spectral gaps stay harmless.

    Mirrors the scheme used by the library's growth fit (developed here
    first, independently of that code).
    """
    import math
    n = len(M_rows)
    cur = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    logp = {}
    for s in range(1, n_max + 1):
        cur = [[sum(cur[i][k] * M_rows[k][j] for k in range(n))
                for j in range(n)] for i in range(n)]
        mx = max(abs(e) for row in cur for e in row)
        if mx == 0:
            return 0.0, 0.0
        logp[s] = math.log(mx)
    N = n_max
    win = list(range(int(N * 0.6), N + 1))
    xs = [math.log(s) for s in win]
    # polynomial-regime estimator: 3x3 Vandermonde solve in 1/n
    nodes = [N // 8, N // 4, N // 2]
    A = [[1.0, 1.0 / nd, 1.0 / nd ** 2] for nd in nodes]
    b = [(logp[2 * nd] - logp[nd]) / nd for nd in nodes]
    det3 = lambda m: (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                      - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                      + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    dA = det3(A)
    A0 = [[b[i]] + A[i][1:] for i in range(3)]
    L_wide = det3(A0) / dA
    if abs(L_wide) < 0.05:
        L = L_wide
    else:
        W = N // 5
        D = (logp[N] - logp[N - W]) / W
        best = None
        for kc in range(0, min(n, 9)):
            Lk = D - kc * math.log(N / (N - W)) / W
            res = [logp[s] - Lk * s - kc * math.log(s) for s in win]
            c = sum(res) / len(res)
            rss = sum((r - c) ** 2 for r in res)
            if best is None or rss < best[0]:
                best = (rss, Lk)
        L = best[1]
    rho = math.exp(L)
    ys = [logp[s] - s * L for s in win]
    nw = len(xs)
    sx, sy = sum(xs), sum(ys)
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    k = (nw * sxy - sx * sy) / (nw * sxx - sx * sx)
    return rho, k


# ----------------------------------------------------------------------------
# torus polynomial analysis
# ----------------------------------------------------------------------------

def analyze_poly(name, coeffs):
    mp.mp.dps = 160
    P = poly_from_low(coeffs)
    assert P.degree() == 6 and coeffs[-1] == 1 and coeffs[0] == 1
    assert sp.gcd(P, P.diff(T)).degree() == 0, "not squarefree"
    assert len(P.real_roots()) == 0, "real roots present"

    roots = roots_mpmath(coeffs)
    betas = conjugate_order(roots)          # β1, β2, β3 by |.| desc, Im > 0
    m = [abs(b) ** 2 for b in betas]        # m1 >= m2 >= m3
    m1, m2, m3 = m
    assert abs(m1 * m2 * m3 - 1) < mp.mpf(10) ** -100

    lam1 = m1
    lam2 = 1 / m3

    # Q2: characteristic polynomial of the degree-2 action, from root products
    all6 = betas + [mp.conj(b) for b in betas]
    prods = [all6[i] * all6[j] for i, j in itertools.combinations(range(6), 2)]
    q2_low = int_poly_from_roots(prods)
    Q2 = poly_from_low(q2_low)
    q2_sqfree = sp.gcd(Q2, Q2.diff(T)).degree() == 0

    factors = [(sp.Poly(f, T), int(mult)) for f, mult in Q2.factor_list()[1]]
    factor_degrees = sorted(f.degree() for f, _ in factors)

    # factor membership of the three distinguished real positive eigenvalues
    def factor_of(value):
        best, bestd = None, None
        for idx, (f, _) in enumerate(factors):
            froots = roots_mpmath([int(c) for c in reversed(f.all_coeffs())])
            d = min(abs(r - value) for r in froots)
            if bestd is None or d < bestd:
                best, bestd = idx, d
        assert bestd < mp.mpf(10) ** -80
        return best

    # the three distinguished eigenvalues of the degree-2 action
    alphas = {"lambda1": m1, "lambda2inv": m3, "lambda1inv-lambda2": m2}
    alpha_factor = {k: factor_of(v) for k, v in alphas.items()}

    def is_cubic_no_real_conj(fidx):
        f = factors[fidx][0]
        return f.degree() == 3 and len(f.real_roots()) == 1

    # conjugacy pattern among the three distinguished eigenvalues
    fset = set(alpha_factor.values())
    if len(fset) == 1:
        pattern = "all-three-conjugate"
        case = 1
        deg = factors[alpha_factor["lambda1"]][0].degree()
        kpairs = (deg - 3) // 6
    elif len(fset) == 2:
        pattern = "one-cubic-two-conjugate"
        case = 2
        from collections import Counter
        cnt = Counter(alpha_factor.values())
        shared = [f for f, c in cnt.items() if c == 2][0]
        lone = [f for f, c in cnt.items() if c == 1][0]
        deg = factors[shared][0].degree()
        kpairs = (deg - 6) // 6
        assert is_cubic_no_real_conj(lone)
    else:
        pattern = "three-cubic"
        case = 3
        kpairs = 0
        assert all(is_cubic_no_real_conj(f) for f in alpha_factor.values())

    # moduli classes of the 15 eigenvalues
    mods2 = [abs(p) ** 2 for p in prods]
    classes = cluster(mods2)
    assert sum(c for _, c in classes) == 15

    # theorem-B data per class
    targets = {"one": mp.mpf(1), "lambda1": m1 ** 2,
               "lambda2inv": m3 ** 2, "lambda1inv-lambda2": m2 ** 2}

    def find_target(mu):
        for N in range(0, 13):
            v = mu ** ((-2) ** N)
            for tname, tv in targets.items():
                if abs(v - tv) < abs(tv) * mp.mpf(10) ** -60:
                    return N, tname
        raise AssertionError("no target found within N<=12")

    class_data = []
    class_reps = [v for v, _ in classes]
    for mu, count in classes:
        N, tname = find_target(mu)
        chain_ok = True
        for k in range(1, N + 1):
            v = mu ** ((-2) ** k)
            if not any(abs(v - r) < abs(r) * mp.mpf(10) ** -50 for r in class_reps):
                chain_ok = False
        class_data.append({
            "mod2": nstr(mu), "mult": count, "N": N, "target": tname,
            "chain_ok": chain_ok,
        })

    # weight rank via PSLQ on (log m1, log m3), confirmed at higher precision
    # and then proved exactly by a resultant computation on the factors.
    relation_exact = False
    if abs(m1 - 1) < mp.mpf(10) ** -100 and abs(m3 - 1) < mp.mpf(10) ** -100:
        rank, relation = 0, None
    else:
        rel = mp.pslq([mp.log(m1), mp.log(m3)], tol=mp.mpf(10) ** -120,
                      maxcoeff=10 ** 6)
        if rel is not None:
            with mp.workdps(400):
                r2 = roots_mpmath(coeffs, dps=400)
                b2 = conjugate_order(r2)
                mm1, mm3 = abs(b2[0]) ** 2, abs(b2[2]) ** 2
                resid = rel[0] * mp.log(mm1) + rel[1] * mp.log(mm3)
                assert abs(resid) < mp.mpf(10) ** -350, "PSLQ relation spurious"
            a, b = int(rel[0]), int(rel[1])
            if a < 0 or (a == 0 and b < 0):
                a, b = -a, -b
            # exact proof: m1^a * m3^b == 1 via resultant of the minimal
            # polynomials.  Res_y(f3(y), x^a y^b - 1) must vanish on f1.
            x, y = sp.symbols("oracle_x oracle_y")
            f1 = factors[alpha_factor["lambda1"]][0].as_expr().subs(T, x)
            f3 = factors[alpha_factor["lambda2inv"]][0].as_expr().subs(T, y)
            if b >= 0:
                curve = x ** a * y ** b - 1
            else:
                curve = x ** a - y ** (-b)
            res = sp.Poly(sp.expand(sp.resultant(f3, curve, y)), x)
            g = sp.gcd(res, sp.Poly(f1, x))
            assert g.degree() == sp.Poly(f1, x).degree(), \
                "relation not confirmed by resultant"
            relation_exact = True
            rank, relation = 1, [a, b]
        else:
            rank, relation = 2, None

    # rank-1 bullet classification; the three-subcase split presupposes
    # rank 2, so suppress it when a relation exists.
    bullet = None
    if rank == 1:
        case = None
        kpairs = None
        if (is_cubic_no_real_conj(alpha_factor["lambda1"])
                and is_cubic_no_real_conj(alpha_factor["lambda2inv"])):
            bullet = 1
        else:
            bullet = 2

    lam1_eq_lam2sq = abs(lam1 - lam2 ** 2) < lam1 * mp.mpf(10) ** -100
    lam2_eq_lam1sq = abs(lam2 - lam1 ** 2) < lam2 * mp.mpf(10) ** -100

    return {
        "coeffs": coeffs,
        "q2": [int(c) for c in q2_low],
        "q2_squarefree": bool(q2_sqfree),
        "factor_degrees": factor_degrees,
        "lambda1": nstr(lam1),
        "lambda2": nstr(lam2),
        "m": [nstr(v) for v in m],
        "lambda1_factor_degree": factors[alpha_factor["lambda1"]][0].degree(),
        "pattern": pattern,
        "case": case,
        "k_pairs": kpairs,
        "bullet": bullet,
        "moduli_classes": class_data,
        "n_moduli_classes": len(classes),
        "rank": rank,
        "relation": relation,
        "relation_exact": relation_exact,
        "lambda1_eq_lambda2_squared": bool(lam1_eq_lam2sq),
        "lambda2_eq_lambda1_squared": bool(lam2_eq_lam1sq),
    }


# ----------------------------------------------------------------------------
# matrix3 analysis
# ----------------------------------------------------------------------------

def analyze_matrix3(name, rows):
    M = sp.Matrix(rows)
    assert M.det() in (1, -1)
    Mt = M.T
    h11 = kron([[int(x) for x in r] for r in Mt.tolist()],
               [[int(x) for x in r] for r in Mt.tolist()])
    h1 = sp.Matrix(kron(rows, [[1, 0], [0, 1]]))
    e2 = exterior_square(h1)

    blocks9 = jordan_blocks(sp.Matrix(h11))
    blocks15 = jordan_blocks(e2)

    cp9 = sp.Poly(sp.Matrix(h11).charpoly(T).as_expr(), T)
    unipotent9 = cp9 == sp.Poly((T - 1) ** 9, T)

    rho9, k9 = growth_fit_int(h11, 500)
    rho15, k15 = growth_fit_int([[int(e2[i, j]) for j in range(15)]
                                 for i in range(15)], 500)

    return {
        "matrix": rows,
        "h11": h11,
        "blocks9": blocks9,
        "blocks15": blocks15,
        "unipotent9": bool(unipotent9),
        "growth_exponent9": max(blocks9) - 1,
        "growth_exponent15": max(blocks15) - 1,
        "growth_fit9": {"rho": rho9, "k": k9},
        "growth_fit15": {"rho": rho15, "k": k15},
    }


# ----------------------------------------------------------------------------
# Hodge form on H^2 of the triple product torus (standard Kaehler class)
# ----------------------------------------------------------------------------

def hodge_form():
    """Gram matrices of the index form on the real (1,1) and (2,0)+(0,2) blocks.

    Real coordinates x1,y1,x2,y2,x3,y3 (0..5); 2-forms as antisymmetric coeff
    dicts over ordered index pairs; integration = coefficient of the volume
    form dx1 dy1 dx2 dy2 dx3 dy3.
    """
    X = [0, 2, 4]
    Y = [1, 3, 5]

    def wedge2(i, j):
        return {(i, j): Fraction(1)}

    def add(a, b, s=1):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, Fraction(0)) + s * v
        return out

    def scale(a, s):
        return {k: v * s for k, v in a.items()}

    # omega = sum dx_k ^ dy_k
    omega = {}
    for k in range(3):
        omega = add(omega, wedge2(X[k], Y[k]))

    def perm_sign(p):
        s = 1
        p = list(p)
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    s = -s
        return s

    def triple_integral(a, b, c):
        """Coefficient of dx1dy1dx2dy2dx3dy3 in a^b^c (2-forms)."""
        total = Fraction(0)
        vol = (0, 1, 2, 3, 4, 5)
        for (i1, j1), v1 in a.items():
            for (i2, j2), v2 in b.items():
                for (i3, j3), v3 in c.items():
                    idx = (i1, j1, i2, j2, i3, j3)
                    if len(set(idx)) != 6:
                        continue
                    total += v1 * v2 * v3 * perm_sign(idx)
        return total

    # real (1,1) basis: dx_k^dy_k ; Re/Im of dz_j ^ conj(dz_k), j<k
    b11 = []
    for k in range(3):
        b11.append(wedge2(X[k], Y[k]))
    for j, k in itertools.combinations(range(3), 2):
        # Re(dz_j ^ conj(dz_k)) = dx_j^dx_k + dy_j^dy_k
        b11.append(add(wedge2(X[j], X[k]), wedge2(Y[j], Y[k])))
        # Im(dz_j ^ conj(dz_k)) = dy_j^dx_k - dx_j^dy_k
        b11.append(add(wedge2(Y[j], X[k]), wedge2(X[j], Y[k]), -1))

    # real (2,0)+(0,2) basis: Re/Im of dz_j ^ dz_k, j<k
    b20 = []
    for j, k in itertools.combinations(range(3), 2):
        b20.append(add(wedge2(X[j], X[k]), wedge2(Y[j], Y[k]), -1))
        b20.append(add(wedge2(X[j], Y[k]), wedge2(Y[j], X[k])))

    def gram(basis, sign):
        n = len(basis)
        return [[sign * triple_integral(basis[i], basis[j], omega)
                 for j in range(n)] for i in range(n)]

    g11 = gram(b11, 1)
    g20 = gram(b20, -1)       # index form negates the (2,0)+(0,2) part
    cross = [[triple_integral(a, b, omega) for b in b20] for a in b11]

    def signature(g):
        Mx = sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in row]
                        for row in g])
        evs = Mx.eigenvals()
        pos = sum(m for v, m in evs.items() if v > 0)
        neg = sum(m for v, m in evs.items() if v < 0)
        zero = sum(m for v, m in evs.items() if v == 0)
        return [int(pos), int(neg), int(zero)]

    return {
        "sig11": signature(g11),
        "sig20": signature(g20),
        "orthogonal": all(v == 0 for row in cross for v in row),
    }


# ----------------------------------------------------------------------------
# surfaces
# ----------------------------------------------------------------------------

def analyze_surface(name, fx):
    g = sp.Matrix(fx["g"])
    q = sp.Matrix(fx["q"])
    assert q.T == q
    assert g.T * q * g == q
    evs = q.eigenvals()
    pos = sum(m for v, m in evs.items() if v > 0)
    neg = sum(m for v, m in evs.items() if v < 0)
    assert pos == 1

    cp = sp.Poly(g.charpoly(T).as_expr(), T)
    exact_roots = []
    for r, mult in sp.roots(cp).items():
        exact_roots.extend([r] * mult)
    assert len(exact_roots) == g.rows
    roots = [complex(sp.N(r, 60)) for r in exact_roots]
    rho = max(abs(r) for r in roots)
    if rho > 1 + 1e-20:
        cls = "loxodromic"
        dom_deg = None
        for f, _ in sp.factor_list(cp)[1]:
            fr = [complex(sp.N(r, 60)) for r in sp.roots(sp.Poly(f, T)).keys()]
            if any(abs(abs(r) - rho) < 1e-30 for r in fr):
                dom_deg = sp.Poly(f, T).degree()
        extra = {"dominant_degree": int(dom_deg),
                 "lambda": mp.nstr(mp.mpf(rho), 40)}
    else:
        # all roots of unity?
        allcyc = all(abs(abs(r) - 1) < 1e-30 for r in roots)
        assert allcyc
        if (g ** 1) == sp.eye(g.rows) or g.is_diagonalizable():
            cls = "elliptic"
            extra = {}
        else:
            cls = "parabolic"
            blocks = jordan_blocks(g)
            rho_f, k_f = growth_fit_int(fx["g"], 500)
            extra = {"blocks": blocks, "growth_k_fit": k_f}
    return {"g": fx["g"], "q": fx["q"], "signature": [int(pos), int(neg)],
            "class": cls, **extra}


# ----------------------------------------------------------------------------
# mixed-case synthetic fixture
# ----------------------------------------------------------------------------

def mixed_fixture():
    rows = []
    data = sp.zeros(15, 15)
    data[0, 0], data[0, 1], data[1, 1] = 2, 1, 2
    data[2, 2], data[2, 3], data[3, 3] = sp.Rational(1, 2), 1, sp.Rational(1, 2)
    data[4, 4] = 2
    data[5, 5] = sp.Rational(1, 2)
    for i in range(6, 15):
        data[i, i] = 1
    cp = sp.Poly(data.charpoly(T).as_expr(), T)
    # reciprocity: T^15 cp(1/T) == +- cp(T) up to the constant normalization
    rev = sp.Poly((T ** 15 * cp.as_expr().subs(T, 1 / T)).simplify(), T)
    c0 = cp.all_coeffs()[-1]
    reciprocal = sp.simplify(rev.as_expr() * sp.Rational(1) / c0 - cp.as_expr()) == 0 or \
        sp.simplify(rev.as_expr() * sp.Rational(-1) / c0 - cp.as_expr()) == 0
    minpoly_sqfree = False  # J2 blocks present
    lam1 = 2
    lam2 = 2  # spectral radius of the inverse
    in_target = lam2 == sp.sqrt(lam1) or lam2 == lam1 ** 2
    return {
        "lambda1": str(lam1), "lambda2": str(lam2),
        "reciprocal": bool(reciprocal),
        "semisimple": minpoly_sqfree,
        "lambda2_in_targets": bool(in_target),
        "expected_status": "fail",
        "witness": "lambda2=2 not in {sqrt(2), 4}",
    }


# ----------------------------------------------------------------------------
# hunt boxes
# ----------------------------------------------------------------------------

def hunt_q_irreducible_bound1():
    """All monic degree-6 polys, constant 1, |a_i| <= 1, valid, Q2 irreducible."""
    hits = []
    mp.mp.dps = 80
    for vec in itertools.product([-1, 0, 1], repeat=5):
        coeffs = [1] + list(vec) + [1]           # lowest-first
        P = poly_from_low(coeffs)
        if sp.gcd(P, P.diff(T)).degree() != 0:
            continue
        if len(P.real_roots()) != 0:
            continue
        roots = roots_mpmath(coeffs)
        prods = [roots[i] * roots[j]
                 for i, j in itertools.combinations(range(6), 2)]
        try:
            q2_low = int_poly_from_roots(prods, tol_exp=-20)
        except AssertionError:
            continue
        Q2 = poly_from_low(q2_low)
        fl = Q2.factor_list()[1]
        if len(fl) == 1 and fl[0][1] == 1 and sp.Poly(fl[0][0], T).degree() == 15:
            hits.append(coeffs)
    return hits


def hunt_two_unit_modulus_bound2():
    """Monic deg-6, const 1, |a_i| <= 2, valid, irreducible, exactly two roots
    of modulus 1 (numeric screen at 80 digits)."""
    hits = []
    mp.mp.dps = 80
    for vec in itertools.product(range(-2, 3), repeat=5):
        coeffs = [1] + list(vec) + [1]
        P = poly_from_low(coeffs)
        if sp.gcd(P, P.diff(T)).degree() != 0:
            continue
        if len(P.real_roots()) != 0:
            continue
        if len(P.factor_list()[1]) != 1 or P.factor_list()[1][0][1] != 1:
            continue
        # exclude products of cyclotomics (all roots unit modulus)
        roots = roots_mpmath(coeffs)
        unit = sum(1 for r in roots if abs(abs(r) - 1) < mp.mpf(10) ** -40)
        if unit == 2:
            hits.append(coeffs)
    return hits


# ----------------------------------------------------------------------------
# main
# ----------------------------------------------------------------------------

def main():
    out = {"polys": {}, "matrix3": {}, "surfaces": {}, "hodge": None,
           "mixed": None, "hunt": {}}

    for name, coeffs in POLY_FIXTURES.items():
        print(f"[oracle] poly {name} ...", flush=True)
        out["polys"][name] = analyze_poly(name, coeffs)

    # the inverse-direction variant of caso2 (reversed coefficients)
    print("[oracle] poly caso2-inverse ...", flush=True)
    out["polys"]["caso2-inverse"] = analyze_poly(
        "caso2-inverse", list(reversed(POLY_FIXTURES["caso2"])))

    for name, rows in MATRIX3_FIXTURES.items():
        print(f"[oracle] matrix3 {name} ...", flush=True)
        out["matrix3"][name] = analyze_matrix3(name, rows)

    assert out["matrix3"]["unipotent-1"]["h11"] == PRINTED_H11_1, \
        "kron convention mismatch with frozen 9x9 #1"
    # The second frozen 9x9 does not equal kron(M2^t, M2^t): its outer factor
    # matches the first example's matrix instead, and its block structure
    # {4,3,2} cannot arise for any unipotent Kronecker square.  Freeze both
    # sides of the discrepancy for the test suite.
    out["matrix3"]["unipotent-2"]["printed_h11"] = PRINTED_H11_2
    out["matrix3"]["unipotent-2"]["printed_matches_kron"] = (
        out["matrix3"]["unipotent-2"]["h11"] == PRINTED_H11_2)
    out["matrix3"]["unipotent-2"]["printed_blocks"] = jordan_blocks(
        sp.Matrix(PRINTED_H11_2))
    out["matrix3"]["unipotent-1"]["printed_h11"] = PRINTED_H11_1
    out["matrix3"]["unipotent-1"]["printed_matches_kron"] = True

    print("[oracle] hodge form ...", flush=True)
    out["hodge"] = hodge_form()

    for name, fx in (("loxodromic", SURFACE_LOXODROMIC),
                     ("parabolic", SURFACE_PARABOLIC)):
        print(f"[oracle] surface {name} ...", flush=True)
        out["surfaces"][name] = analyze_surface(name, fx)

    print("[oracle] mixed synthetic ...", flush=True)
    out["mixed"] = mixed_fixture()

    print("[oracle] hunt box: q2-irreducible bound 1 ...", flush=True)
    out["hunt"]["q_irreducible_bound1"] = hunt_q_irreducible_bound1()
    print("[oracle] hunt box: two-unit-modulus bound 2 ...", flush=True)
    out["hunt"]["two_unit_modulus_bound2"] = hunt_two_unit_modulus_bound2()

    path = os.path.join(HERE, "expected.json")
    with open(path, "w") as fh:
        json.dump(out, fh, indent=1)
    print(f"[oracle] wrote {path}")


if __name__ == "__main__":
    main()
