"""Integer weight decomposition against the diagonal and its complement.

An integer weight splits as lam = rho(lam0) + rho_v(lam_v) where rho is the
all-ones column, rho_v the bidiagonal n x (n-1) matrix, lam0 the average of
the entries and lam_v the coroot coordinates.  Both components carry a class
in Z_n and the two classes must agree; the discriminant group of the Cartan
Gram matrix is the same Z_n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import ratmat

_ZERO = Fraction(0)


class SingularLatticeError(ValueError):
    pass


class InconsistentDecompositionError(ArithmeticError):
    pass


@dataclass
class IntegralLattice:
    rank: int
    gram: list


def cartan_matrix(n):
    """Cartan matrix of the rank n-1 root system of type A."""
    c = ratmat.zeros(n - 1, n - 1)
    for i in range(n - 1):
        c[i][i] = Fraction(2)
        if i + 1 < n - 1:
            c[i][i + 1] = Fraction(-1)
            c[i + 1][i] = Fraction(-1)
    return c


def cartan_lattice(n, sign=1):
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    gram = ratmat.mat_scale(cartan_matrix(n), sign)
    return IntegralLattice(n - 1, gram)


def discriminant_group(lat):
    """Invariant factors > 1 of the Gram matrix."""
    ints = []
    for row in lat.gram:
        out = []
        for x in row:
            if Fraction(x).denominator != 1:
                raise SingularLatticeError("gram matrix is not integral")
            out.append(int(x))
        ints.append(out)
    if ratmat.rank(lat.gram) < lat.rank:
        raise SingularLatticeError("gram matrix is degenerate")
    return [f for f in ratmat.smith_normal_form(ints) if f != 1]


def rho_matrix(n):
    """All-ones column."""
    return [[Fraction(1)] for _ in range(n)]


def rho_v_matrix(n):
    """n x (n-1) bidiagonal matrix with 1 on the diagonal and -1 below."""
    m = ratmat.zeros(n, n - 1)
    for k in range(n - 1):
        m[k][k] = Fraction(1)
        m[k + 1][k] = Fraction(-1)
    return m


def projections(n):
    """The complementary projections p (all entries 1/n) and Id - p."""
    p = [[Fraction(1, n)] * n for _ in range(n)]
    p_perp = ratmat.mat_sub(ratmat.identity(n), p)
    return p, p_perp


def coroot_coordinates(lam):
    """lam_v by the double-sum change of basis from entry differences."""
    n = len(lam)
    diffs = [Fraction(lam[i] - lam[i + 1]) for i in range(n - 1)]
    out = []
    for k in range(1, n):
        acc = _ZERO
        for i in range(1, k + 1):
            acc += i * (n - k) * diffs[i - 1]
        for i in range(k + 1, n):
            acc += k * (n - i) * diffs[i - 1]
        out.append(acc / n)
    return out


def class_of_lam0(lam0, n):
    """Z_n class of an element of (1/n)Z."""
    scaled = lam0 * n
    if scaled.denominator != 1:
        raise ValueError(f"{lam0} is not in (1/n)Z")
    return scaled.numerator % n


def class_of_lam_v(lam_v, n):
    """Z_n class of a coroot-coordinate vector, or None if not in the group.

    The class c is characterized by n lam_v[k] = -k c (mod n) for all k,
    which pins down the image of the index-n subgroup generated by the
    decomposition of the first unit weight.
    """
    for c in range(n):
        ok = True
        for k, v in enumerate(lam_v, start=1):
            scaled = v * n
            if scaled.denominator != 1 or (scaled.numerator + k * c) % n:
                ok = False
                break
        if ok:
            return c
    return None


def decompose_weight(lam):
    """Split an integer weight; returns (lam0, lam_v, j).

    j in {0..n-1} satisfies j = -sum(lam) mod n, so that the weight sits in
    the sum-(-mn-j) slice for some integer m.  Reconstruction and class
    agreement are verified exactly.
    """
    n = len(lam)
    lam = [Fraction(x) for x in lam]
    if any(x.denominator != 1 for x in lam):
        raise ValueError("weight entries must be integers")
    lam0 = sum(lam, _ZERO) / n
    lam_v = coroot_coordinates(lam)
    rebuilt = [
        a + b
        for a, b in zip(
            ratmat.mat_vec(rho_matrix(n), [lam0]),
            ratmat.mat_vec(rho_v_matrix(n), lam_v),
        )
    ]
    if rebuilt != lam:
        raise InconsistentDecompositionError(f"reconstruction failed for {lam}")
    c0 = class_of_lam0(lam0, n)
    cv = class_of_lam_v(lam_v, n)
    if c0 != cv:
        raise InconsistentDecompositionError(f"class mismatch for {lam}: {c0} != {cv}")
    j = (-int(sum(lam))) % n
    return lam0, lam_v, j


def enumerate_P(m, n, bound):
    """Integer n-tuples with entries in [-bound, bound] summing to m."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    out = []
    for tup in product(range(-bound, bound + 1), repeat=n):
        if sum(tup) == m:
            out.append(tup)
    return out
