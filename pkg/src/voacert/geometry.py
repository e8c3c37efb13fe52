"""Exact rank-one orbit and sheet geometry for traceless rational matrices.

The minimal orbit closure is the rank <= 1 locus; the containing sheet
closure consists of matrices of the form a Id + u v^T with trace zero, which
forces a to be an eigenvalue of multiplicity at least n - 1.  The space of
2x2 minors splits into the image of a coordinate map from rank-one tensors
and the kernel of an index contraction; only the kernel part vanishes on
sheet samples.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from . import ratmat

_ZERO = Fraction(0)


class NotTracelessError(ValueError):
    pass


class UnsupportedRankError(ValueError):
    pass


def check_traceless(z):
    if ratmat.trace(z):
        raise NotTracelessError(f"matrix has trace {ratmat.trace(z)}")


def in_min_orbit_closure(z):
    """True iff the traceless matrix has rank at most 1."""
    check_traceless(z)
    return ratmat.rank(z) <= 1


def minor_values(z):
    """All 2x2 minors of z, keyed by (i, k, j, l) with i < k rows, j < l cols."""
    n = len(z)
    out = {}
    for i, k in combinations(range(1, n + 1), 2):
        for j, l in combinations(range(1, n + 1), 2):
            out[(i, k, j, l)] = (
                z[i - 1][j - 1] * z[k - 1][l - 1] - z[k - 1][j - 1] * z[i - 1][l - 1]
            )
    return out


def sheet_matrix(y):
    """The representative with diagonal (Y1(n-1), -Y1, ..., -Y1) and first row Y2..Yn."""
    n = len(y)
    m = ratmat.zeros(n, n)
    m[0][0] = Fraction(y[0]) * (n - 1)
    for i in range(1, n):
        m[i][i] = -Fraction(y[0])
        m[0][i] = Fraction(y[i])
    return m


def random_sl_element(n, rng, factors=6, spread=3):
    """Product of integer elementary unipotent matrices; determinant 1 exactly."""
    r = ratmat.identity(n)
    rinv = ratmat.identity(n)
    for _ in range(factors):
        i = rng.randrange(n)
        j = rng.randrange(n)
        while j == i:
            j = rng.randrange(n)
        c = Fraction(rng.randint(-spread, spread))
        e = ratmat.identity(n)
        e[i][j] = c
        einv = ratmat.identity(n)
        einv[i][j] = -c
        r = ratmat.mat_mul(r, e)
        rinv = ratmat.mat_mul(einv, rinv)
    return r, rinv


def sample_sheet_element(n, seed):
    """A seeded sheet-closure element R M(Y) R^{-1} with rational Y.

    The seed may be an integer or a tuple of integers (base seed, index).
    """
    if n < 2:
        raise UnsupportedRankError(f"need n >= 2, got n={n}")
    if isinstance(seed, tuple):
        mixed = 0
        for part in seed:
            mixed = mixed * 1000003 + part
        seed = mixed
    rng = random.Random(seed)
    y = [Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3))) for _ in range(n)]
    r, rinv = random_sl_element(n, rng)
    return ratmat.mat_mul(r, ratmat.mat_mul(sheet_matrix(y), rinv))


def sheet_shift_candidates(z):
    """Rational a that can satisfy rank(z - a Id) <= 1.

    Such a is an eigenvalue of multiplicity >= n - 1, hence a root of the
    (n-2)-nd derivative of the characteristic polynomial, which is quadratic.
    Zero is always included.
    """
    n = len(z)
    coeffs = ratmat.charpoly(z)
    for _ in range(n - 2):
        coeffs = ratmat.poly_derivative(coeffs)
    candidates = {Fraction(0)}
    candidates.update(ratmat.rational_roots_quadratic(coeffs))
    return sorted(candidates)


def in_sheet_closure(z):
    """True iff z = a Id + (rank <= 1) for some rational a."""
    check_traceless(z)
    n = len(z)
    for a in sheet_shift_candidates(z):
        shifted = ratmat.mat_sub(z, ratmat.mat_scale(ratmat.identity(n), a))
        if ratmat.rank(shifted) <= 1:
            return True
    return False


# -- the minor space and its two summands ------------------------------


def minor_index_list(n):
    """Canonical ordering of the C(n,2)^2 minor coordinates."""
    rows = list(combinations(range(1, n + 1), 2))
    return [(i, k, j, l) for i, k in rows for j, l in rows]


def minor_generators(n, offset=0):
    """Every 2x2 minor as an EvenPolynomial over Z[i,j], optionally shifted.

    The offset addresses coordinate blocks living inside a larger index set,
    e.g. offset n targets indices n+1..2n.
    """
    from .zhu import EvenPolynomial

    if n < 2:
        raise UnsupportedRankError(f"need n >= 2, got n={n}")
    out = []
    for i, k, j, l in minor_index_list(n):
        p = EvenPolynomial()
        p.add_monomial(((i + offset, j + offset), (k + offset, l + offset)), Fraction(1))
        p.add_monomial(((k + offset, j + offset), (i + offset, l + offset)), Fraction(-1))
        out.append(p)
    return out


def _pair_index(pairs):
    return {p: a for a, p in enumerate(pairs)}


def v12_vectors(n):
    """Coordinates of the images of e_i^* x e_j in the minor basis.

    The image polynomial is sum_k Z[i,j]Z[k,k] - Z[k,j]Z[i,k]; each summand
    is, up to the sign of sorting its row and column pairs, one minor.
    """
    idx = {q: a for a, q in enumerate(minor_index_list(n))}
    vectors = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = [_ZERO] * len(idx)
            for k in range(1, n + 1):
                if k == i or k == j:
                    continue
                sgn = 1
                r1, r2 = i, k
                if r1 > r2:
                    r1, r2 = r2, r1
                    sgn = -sgn
                c1, c2 = j, k
                if c1 > c2:
                    c1, c2 = c2, c1
                    sgn = -sgn
                v[idx[(r1, r2, c1, c2)]] += sgn
            vectors[(i, j)] = v
    return vectors


def contraction_matrix(n):
    """The trace contraction from the minor space to single-index tensors.

    Sends e^j ^ e^l x e_i ^ e_k to
    d_{j,i} e^l x e_k - d_{j,k} e^l x e_i - d_{l,i} e^j x e_k + d_{l,k} e^j x e_i.
    """
    src = minor_index_list(n)
    tgt = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    tix = _pair_index(tgt)
    m = ratmat.zeros(len(tgt), len(src))
    for col, (i, k, j, l) in enumerate(src):
        # the minor labelled (i,k,j,l) is the tensor e^j ^ e^l x e_i ^ e_k
        for val, a, b in (
            (1, l, k) if j == i else (0, 0, 0),
            (-1, l, i) if j == k else (0, 0, 0),
            (-1, j, k) if l == i else (0, 0, 0),
            (1, j, i) if l == k else (0, 0, 0),
        ):
            if val:
                m[tix[(a, b)]][col] += val
    return m


def minor_decomposition(n):
    """Bases of the two summands of the minor space, as coordinate vectors.

    Returns (v12_basis, u22_basis); checks dim n^2 + (C(n,2)^2 - n^2) and
    directness of the sum.  Refuses n < 4, where the stated dimensions are
    inconsistent.
    """
    if n < 4:
        raise UnsupportedRankError(f"minor decomposition needs n >= 4, got n={n}")
    total = len(minor_index_list(n))
    v12 = list(v12_vectors(n).values())
    if ratmat.rank(v12) != n * n:
        raise AssertionError("coordinate images do not span an n^2-dimensional space")
    u22 = ratmat.kernel_basis(contraction_matrix(n))
    if len(u22) != total - n * n:
        raise AssertionError("contraction kernel has unexpected dimension")
    if ratmat.rank(v12 + u22) != total:
        raise AssertionError("summands are not independent")
    return v12, u22


def evaluate_minor_vector(vec, z):
    """Value at z of a coordinate vector over the minor basis."""
    vals = minor_values(z)
    order = minor_index_list(len(z))
    return sum((c * vals[q] for c, q in zip(vec, order) if c), _ZERO)


def sheet_vanishing_check(n, samples=100, seed=0):
    """Evaluate both summand bases on seeded sheet samples in one pass.

    Returns (u22_failures, v12_nonzero) where u22_failures lists (basis
    position, sample) pairs with a nonzero value, and v12_nonzero reports
    whether some coordinate-image generator is nonzero at the semisimple
    representative diag(n-1, -1, ..., -1).
    """
    v12, u22 = minor_decomposition(n)
    order = minor_index_list(n)
    failures = []
    for s in range(samples):
        z = sample_sheet_element(n, (seed, s))
        vals = [minor_values(z)[q] for q in order]
        for pos, vec in enumerate(u22):
            if sum((c * v for c, v in zip(vec, vals) if c), _ZERO):
                failures.append((pos, s))
    semisimple = sheet_matrix([Fraction(1)] + [Fraction(0)] * (n - 1))
    v12_nonzero = any(evaluate_minor_vector(vec, semisimple) for vec in v12)
    return failures, v12_nonzero


def vanishes_on_sheet(vec, n, samples=100, seed=0):
    """Exact evaluation of a minor-space vector on seeded sheet samples."""
    if n < 4:
        raise UnsupportedRankError(f"need n >= 4, got n={n}")
    for s in range(samples):
        z = sample_sheet_element(n, (seed, s))
        if evaluate_minor_vector(vec, z):
            return False
    return True
