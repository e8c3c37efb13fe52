"""Reduction of affine states to (super)commutative polynomials.

A state whose monomials hold any mode at depth -2 or deeper lies in the C2
subspace and maps to zero.  Depth -1 monomials map to products of variables
X_alpha, one per algebra basis element, with parities inherited; killing the
odd variables and expanding Cartan variables in matrix coordinates of the
lower diagonal block then lands in an ordinary polynomial ring, where the
images can be compared with 2x2 minors.
"""
from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)


def c2_member(mono):
    """True iff the PBW monomial has a mode at depth -2 or beyond."""
    return any(m <= -2 for m, _ in mono)


class SuperPolynomial:
    """Polynomial in variables indexed by algebra basis elements.

    Monomials are tuples of variable indices in ascending order; odd
    variables anticommute and square to zero, so normalization tracks the
    Koszul sign of the sort.
    """

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = dict(terms or {})

    def is_zero(self):
        return not self.terms

    def add_monomial(self, variables, coeff):
        mono, sign = normalize_monomial(variables, self.algebra.parity)
        if sign == 0 or not coeff:
            return
        c = self.terms.get(mono, _ZERO) + coeff * sign
        if c:
            self.terms[mono] = c
        elif mono in self.terms:
            del self.terms[mono]

    def __eq__(self, other):
        return isinstance(other, SuperPolynomial) and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            name = "*".join(f"X({self.algebra.label(v)})" for v in mono) or "1"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)


def normalize_monomial(variables, parity):
    """Sort variables ascending; return (tuple, koszul sign) or sign 0 if nil."""
    vs = list(variables)
    sign = 1
    # insertion sort so transpositions are explicit
    for i in range(1, len(vs)):
        j = i
        while j > 0 and vs[j - 1] > vs[j]:
            if parity[vs[j - 1]] and parity[vs[j]]:
                sign = -sign
            vs[j - 1], vs[j] = vs[j], vs[j - 1]
            j -= 1
    for a, b in zip(vs, vs[1:]):
        if a == b and parity[a]:
            return (), 0
    return tuple(vs), sign


def psi(state):
    """Image in the degree-graded quotient by the C2 subspace.

    Monomials with all modes at depth -1 map to the product of their
    variables; anything deeper maps to zero.
    """
    out = SuperPolynomial(state.algebra)
    for mono, c in state.terms.items():
        if c2_member(mono):
            continue
        out.add_monomial([x for _, x in mono], c)
    return out


class EvenPolynomial:
    """Commutative polynomial in matrix-coordinate variables Z[i,j]."""

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    def is_zero(self):
        return not self.terms

    def add_monomial(self, variables, coeff):
        mono = tuple(sorted(variables))
        c = self.terms.get(mono, _ZERO) + coeff
        if c:
            self.terms[mono] = c
        elif mono in self.terms:
            del self.terms[mono]

    def scale(self, c):
        c = Fraction(c)
        return EvenPolynomial({m: v * c for m, v in self.terms.items()} if c else {})

    def __eq__(self, other):
        return isinstance(other, EvenPolynomial) and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            name = "*".join(f"Z[{i},{j}]" for i, j in mono) or "1"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)


def _coordinate_image(alg, var):
    """Linear expansion of one even variable in lower-block coordinates Z[i,j].

    The chart restricts to the lower diagonal block: variables supported on
    the upper block map to zero, off-diagonal lower-block root variables map
    to single coordinates, and lower-block Cartan variables expand as
    differences of diagonal coordinates with Z[2n,2n] eliminated through the
    trace-zero relation.
    """
    n = alg.n
    b = alg.basis[var]
    out = {}

    def add_diag(a, coeff):
        if a == 2 * n:
            for r in range(n + 1, 2 * n):
                out[(r, r)] = out.get((r, r), _ZERO) - coeff
        else:
            out[(a, a)] = out.get((a, a), _ZERO) + coeff
        if (a, a) in out and not out[(a, a)]:
            del out[(a, a)]

    if b[0] == "E":
        _, i, j = b
        if i > n and j > n:
            out[(i, j)] = Fraction(1)
    else:
        a = b[1]
        if a > n:
            add_diag(a, Fraction(1))
            add_diag(a + 1, Fraction(-1))
    return out


def reduce_even(poly):
    """Kill odd variables and expand the rest in lower-block coordinates."""
    alg = poly.algebra
    out = EvenPolynomial()
    images = {}
    for mono, c in poly.terms.items():
        if any(alg.parity[v] for v in mono):
            continue
        expanded = [((), c)]
        for v in mono:
            if v not in images:
                images[v] = _coordinate_image(alg, v)
            nxt = []
            for vs, coeff in expanded:
                for zvar, zc in images[v].items():
                    nxt.append((vs + (zvar,), coeff * zc))
            expanded = nxt
        for vs, coeff in expanded:
            out.add_monomial(vs, coeff)
    return out


def psi_reduced(state):
    return reduce_even(psi(state))


def minor_polynomial(n, i, k, j, l):
    """Z[i,j]Z[k,l] - Z[k,j]Z[i,l] in the chart with Z[2n,2n] eliminated."""
    out = EvenPolynomial()
    for (a, b), (c, d), sgn in (((i, j), (k, l), 1), ((k, j), (i, l), -1)):
        factors = []
        for r, s in ((a, b), (c, d)):
            if r == s:
                factors.append(_diag_coordinate(n, r))
            else:
                factors.append({(r, s): Fraction(1)})
        for v1, c1 in factors[0].items():
            for v2, c2 in factors[1].items():
                out.add_monomial((v1, v2), sgn * c1 * c2)
    return out


def _diag_coordinate(n, r):
    if r == 2 * n:
        return {(a, a): Fraction(-1) for a in range(n + 1, 2 * n)}
    return {(r, r): Fraction(1)}


def minor_cover_check(alg):
    """Match the reduced images of every u-vector against the 2x2 minors.

    Returns (covered, problems) where problems lists quadruples whose image
    is not plus or minus the expected minor of the lower block.
    """
    from . import affine

    n = alg.n
    problems = []
    covered = []
    for i in range(n + 1, 2 * n + 1):
        for k in range(i + 1, 2 * n + 1):
            for j in range(n + 1, 2 * n + 1):
                for l in range(j + 1, 2 * n + 1):
                    u = affine.u_vector(alg, i, k, j, l)
                    image = psi_reduced(u)
                    expected = minor_polynomial(n, i, k, j, l)
                    if image == expected or image == expected.scale(-1):
                        covered.append((i, k, j, l))
                    else:
                        problems.append((i, k, j, l, str(image)))
    return covered, problems
