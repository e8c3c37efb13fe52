"""Symplectic boson and free fermion mode algebras with bilinear currents.

Generators come in conjugate pairs beta/gamma (even) and b/c (odd) with
central super-commutators

    [beta^i_(m), gamma^j_(r)] = delta_ij delta_{m+r,-1}
    {b^i_(m),    c^j_(r)}     = delta_ij delta_{m+r,-1}

and every other pair (super)commuting freely.  Charge currents are sums of
normal-ordered bilinears; the level pairing between two currents is read off
as the vacuum coefficient of J_(1) applied to the state of J', an explicit
mode computation rather than a contraction formula.
"""
from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)

_ODD = {"b", "c"}


def parity(gen):
    return 1 if gen[0] in _ODD else 0


def contraction(x, y):
    """Central value of the super-commutator [x_(m), y_(r)] at m + r = -1."""
    if x[1] != y[1]:
        return _ZERO
    pair = (x[0], y[0])
    if pair == ("beta", "gamma"):
        return Fraction(1)
    if pair == ("gamma", "beta"):
        return Fraction(-1)
    if pair in (("b", "c"), ("c", "b")):
        return Fraction(1)
    return _ZERO


def _add_term(out, mono, c):
    s = out.get(mono, _ZERO) + c
    if s:
        out[mono] = s
    elif mono in out:
        del out[mono]


def _apply(x, m, mono, coef, out):
    if not mono:
        if m < 0:
            _add_term(out, ((m, x),), coef)
        return
    r, y = mono[0]
    rest = mono[1:]
    if m < 0 and (m, x) <= (r, y):
        if (m, x) == (r, y) and parity(x):
            return
        _add_term(out, ((m, x),) + mono, coef)
        return
    sign = -1 if parity(x) and parity(y) else 1
    inner = {}
    _apply(x, m, rest, coef * sign, inner)
    for mono2, c2 in inner.items():
        _apply(y, r, mono2, c2, out)
    if m + r == -1:
        central = contraction(x, y)
        if central:
            _add_term(out, rest, coef * central)


def apply_gen_mode(x, m, terms):
    out = {}
    for mono, c in terms.items():
        _apply(x, m, mono, c, out)
    return out


class BilinearCurrent:
    """Finite rational combination of normal-ordered generator bilinears."""

    def __init__(self, terms=()):
        # terms: list of (coeff, genA, genB)
        self.terms = [(Fraction(c), a, b) for c, a, b in terms if c]

    def state(self):
        """J_(-1)|0> as a mode-monomial dict."""
        out = {}
        for c, a, b in self.terms:
            partial = apply_gen_mode(b, -1, {(): c})
            for mono, c2 in apply_gen_mode(a, -1, partial).items():
                _add_term(out, mono, c2)
        return out

    def apply(self, m, terms):
        """Image of the normal-ordered current mode J_(m) on a state."""
        depth = max((sum(-mm for mm, _ in mono) for mono in terms), default=0)
        bound = depth + abs(m) + 2
        out = {}
        for c, a, b in self.terms:
            sign = -1 if parity(a) and parity(b) else 1
            for r in range(-bound, 0):
                inner = apply_gen_mode(b, m - 1 - r, terms)
                for mono, c2 in apply_gen_mode(a, r, inner).items():
                    _add_term(out, mono, c * c2)
            for r in range(0, bound + 1):
                inner = apply_gen_mode(a, r, terms)
                for mono, c2 in apply_gen_mode(b, m - 1 - r, inner).items():
                    _add_term(out, mono, sign * c * c2)
        return out

    def boson_part(self):
        return BilinearCurrent(
            [(c, a, b) for c, a, b in self.terms if not parity(a)]
        )

    def fermion_part(self):
        return BilinearCurrent([(c, a, b) for c, a, b in self.terms if parity(a)])


def current_from_weights(rho):
    """Charge currents J^{rho,1..r} for an n x r integer weight matrix.

    Column j gives J^{rho,j} = sum_i rho[i][j] (:gamma^i beta^i: + :b^i c^i:).
    """
    if not rho:
        return []
    r = len(rho[0])
    currents = []
    for j in range(r):
        terms = []
        for i, row in enumerate(rho, start=1):
            w = Fraction(row[j])
            if w:
                terms.append((w, ("gamma", i), ("beta", i)))
                terms.append((w, ("b", i), ("c", i)))
        currents.append(BilinearCurrent(terms))
    return currents


def ope_level(a, b):
    """Second-order-pole coefficient between two currents."""
    image = a.apply(1, b.state())
    return image.get((), _ZERO)
