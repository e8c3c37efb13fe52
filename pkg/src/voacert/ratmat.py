"""Exact dense linear algebra over the rationals, plus integer Smith normal form.

All matrices are lists of lists of Fraction; vectors are lists of Fraction.
Everything here is small and exact; no floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


def mat(rows):
    return [[Fraction(x) for x in row] for row in rows]


def identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    s = Fraction(s)
    return [[x * s for x in row] for row in a]


def mat_mul(a, b):
    rb = len(b)
    cb = len(b[0])
    out = zeros(len(a), cb)
    for i, row in enumerate(a):
        oi = out[i]
        for k in range(rb):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(cb):
                    if bk[j]:
                        oi[j] += x * bk[j]
    return out


def mat_vec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def trace(a):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def rref(a):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    if not a:
        return 0
    return len(rref(a)[1])


def kernel_basis(a):
    """Basis of the right null space of a."""
    if not a:
        return []
    cols = len(a[0])
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution of a x = b, or None if inconsistent."""
    aug = [row[:] + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(aug)
    cols = len(a[0])
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def charpoly(a):
    """Coefficients [1, c1, ..., cn] of det(xI - a) = x^n + c1 x^{n-1} + ... + cn.

    Faddeev-LeVerrier recursion; exact over Fraction.
    """
    n = len(a)
    coeffs = [Fraction(1)]
    mk = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, mk)
        ck = -trace(am) / k
        coeffs.append(ck)
        mk = mat_add(am, mat_scale(identity(n), ck))
    return coeffs


def poly_derivative(coeffs):
    """Derivative of a polynomial given as descending coefficients."""
    n = len(coeffs) - 1
    return [c * (n - i) for i, c in enumerate(coeffs[:-1])]


def rational_roots_quadratic(coeffs):
    """Rational roots of a polynomial of degree <= 2 (descending coefficients)."""
    cs = list(coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
    if not cs:
        return []
    den = 1
    for c in cs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    if len(ints) == 1:
        return []
    if len(ints) == 2:
        a, b = ints
        return [Fraction(-b, a)]
    a, b, c = ints
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    s = isqrt(disc)
    if s * s != disc:
        return []
    roots = {Fraction(-b + s, 2 * a), Fraction(-b - s, 2 * a)}
    return sorted(roots)


def smith_normal_form(a):
    """Invariant factors (non-negative, divisibility-ordered) of an integer matrix."""
    m = [[int(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    factors = []
    t = 0
    while t < min(rows, cols):
        # locate smallest nonzero entry in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        done = False
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for row in m:
                        row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        done = False
        # ensure divisibility of the remaining block by the pivot
        p = m[t][t]
        bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                    if m[i][j] % p), None)
        if bad is not None:
            for j in range(cols):
                m[t][j] += m[bad[0]][j]
            continue
        factors.append(abs(p))
        t += 1
    return factors
