"""Mode calculus of the universal affine vertex superalgebra of a Lie superalgebra.

States are finite rational combinations of PBW monomials in negative modes
applied to the vacuum.  A monomial is a tuple of (m, basis_index) pairs sorted
ascending in m (deepest first), ties broken by basis order.  Mode application
uses the relation

    x_(m) y_(r) -/+ y_(r) x_(m)  =  [x, y]_(m+r) + m delta_{m+r,0} k (x, y)

with Koszul signs on every transposition of odd modes; odd squares rewrite via
x_(m) x_(m) = (1/2)[x, x]_(2m) + (1/2) m delta_{2m,0} k (x, x).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

_ZERO = Fraction(0)


class NonHomogeneousError(ValueError):
    """Raised when an operation requires a homogeneous state."""


@dataclass
class State:
    """Element of V^k(g) in canonical PBW form.  Treated as immutable."""

    algebra: object
    level: Fraction
    terms: dict = field(default_factory=dict)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, _ZERO) + c
            if s:
                out[mono] = s
            elif mono in out:
                del out[mono]
        return State(self.algebra, self.level, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return State(self.algebra, self.level, {})
        return State(self.algebra, self.level, {m: v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, State)
            and self.level == other.level
            and self.terms == other.terms
        )

    def degrees(self):
        return sorted({monomial_degree(m) for m in self.terms})

    def degree(self):
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            raise NonHomogeneousError(f"state mixes degrees {degs}")
        return degs[0]

    def proportional_to(self, other):
        """Rational c with self == c * other, or None (other must be nonzero)."""
        if other.is_zero():
            return None
        mono, ref = next(iter(other.terms.items()))
        c = self.terms.get(mono, _ZERO) / ref
        return c if self == other.scale(c) else None


def vacuum(algebra, level=Fraction(1)):
    return State(algebra, Fraction(level), {(): Fraction(1)})


def monomial_degree(mono):
    return sum(-m for m, _ in mono)


def _add_term(out, mono, c):
    s = out.get(mono, _ZERO) + c
    if s:
        out[mono] = s
    elif mono in out:
        del out[mono]


def _apply_basis_mode(alg, level, x, m, mono, coef, out):
    """Accumulate coef * x_(m) |mono> into out, in canonical PBW form."""
    if not mono:
        if m < 0:
            _add_term(out, ((m, x),), coef)
        return
    r, y = mono[0]
    rest = mono[1:]
    if m < 0 and (m, x) <= (r, y):
        if (m, x) == (r, y) and alg.parity[x]:
            # odd square: x_(m) x_(m) = (1/2)[x,x]_(2m) on the tail (m < 0)
            for w, cf in alg.table[x][x]:
                _apply_basis_mode(alg, level, w, 2 * m, rest, coef * cf / 2, out)
            return
        _add_term(out, ((m, x),) + mono, coef)
        return
    sign = -1 if alg.parity[x] and alg.parity[y] else 1
    inner = {}
    _apply_basis_mode(alg, level, x, m, rest, coef * sign, inner)
    for mono2, c2 in inner.items():
        _apply_basis_mode(alg, level, y, r, mono2, c2, out)
    for w, cf in alg.table[x][y]:
        _apply_basis_mode(alg, level, w, m + r, rest, coef * cf, out)
    if m and m + r == 0:
        k_term = coef * m * level * alg.form_mat[x][y]
        if k_term:
            _add_term(out, rest, k_term)


def apply_mode(x, m, state):
    """Normal-ordered image of x_(m) applied to a state (x a basis index)."""
    alg = state.algebra
    out = {}
    for mono, c in state.terms.items():
        _apply_basis_mode(alg, state.level, x, m, mono, c, out)
    return State(alg, state.level, out)


def apply_element(combo, m, state):
    """Apply the mode of a linear combination of basis elements."""
    alg = state.algebra
    out = {}
    for mono, c in state.terms.items():
        for x, cf in combo.items():
            _apply_basis_mode(alg, state.level, x, m, mono, c * cf, out)
    return State(alg, state.level, out)


def apply_T(state):
    """Translation operator: T(x_(-m) v) = m x_(-m-1) v + x_(-m) T(v), T|0> = 0."""
    alg = state.algebra
    out = {}
    for mono, c in state.terms.items():
        for i, (r, x) in enumerate(mono):
            seq = mono[:i] + ((r - 1, x),) + mono[i + 1 :]
            inner = {(): c * (-r)}
            # refold right-to-left; the shifted sequence may need reordering
            for mm, xx in reversed(seq):
                nxt = {}
                for mono2, c2 in inner.items():
                    _apply_basis_mode(alg, state.level, xx, mm, mono2, c2, nxt)
                inner = nxt
            for mono2, c2 in inner.items():
                _add_term(out, mono2, c2)
    return State(alg, state.level, out)


def monomial_state(alg, pairs, level=Fraction(1)):
    """State from modes listed left to right, e.g. [(x, -1), (y, -1)] -> x_(-1) y_(-1)|0>."""
    s = vacuum(alg, level)
    for x, m in reversed(pairs):
        s = apply_mode(x, m, s)
    return s


def canonicalize(state):
    """Re-normal-order every monomial; the identity on canonical states."""
    alg = state.algebra
    out = State(alg, state.level, {})
    for mono, c in state.terms.items():
        out = out + monomial_state(alg, [(x, m) for m, x in mono], state.level).scale(c)
    return out


# -- operator words ----------------------------------------------------

T_TOKEN = "T"


def apply_word(word, state):
    """Fold a word of tokens (basis_index, m) or "T" right-to-left over a state."""
    for tok in reversed(word):
        if tok == T_TOKEN:
            state = apply_T(state)
        else:
            x, m = tok
            state = apply_mode(x, m, state)
    return state


# -- singular vector check --------------------------------------------


def annihilator_modes(alg, degree):
    """The finite sufficient set of raising modes for states of a given degree.

    Zero modes of the n_+ root vectors first (basis order), then x_(m) for
    every basis element and 1 <= m <= degree; any deeper mode annihilates by
    the grading.
    """
    modes = [(x, 0) for x in alg.positive_root_indices()]
    for m in range(1, degree + 1):
        modes.extend((x, m) for x in range(alg.dim))
    return modes


def is_singular(state):
    """(True, None) if the state is singular, else (False, (x, m, image))."""
    d = state.degree()
    for x, m in annihilator_modes(state.algebra, d):
        image = apply_mode(x, m, state)
        if not image.is_zero():
            return False, (x, m, image)
    return True, None


# -- named vectors ------------------------------------------------------


def _e(alg, i, j):
    return alg.index[("E", i, j)]


def vector_chi(alg):
    """E^{1,2n-1}_(-1) E^{1,2n}_(-1) |0> in V^1(psl(n|n))."""
    n = alg.n
    return monomial_state(alg, [(_e(alg, 1, 2 * n - 1), -1), (_e(alg, 1, 2 * n), -1)])


def vector_chi_plus(alg):
    """(E^{1,n}_(-1))^2 |0>: image of the sl(n) singular vector at level 1."""
    n = alg.n
    return monomial_state(alg, [(_e(alg, 1, n), -1), (_e(alg, 1, n), -1)])


def vector_chi_minus(alg):
    """Image of the level -1 sl(n) singular vector; defined for n >= 4."""
    n = alg.n
    if n < 4:
        raise InvalidIndexError(f"chi_minus needs n >= 4, got n={n}")
    a = monomial_state(alg, [(_e(alg, n + 1, 2 * n), -1), (_e(alg, n + 2, 2 * n - 1), -1)])
    b = monomial_state(alg, [(_e(alg, n + 1, 2 * n - 1), -1), (_e(alg, n + 2, 2 * n), -1)])
    return a - b


class InvalidIndexError(ValueError):
    """Raised for out-of-range vector indices."""


def chi_plus_word(alg):
    n = alg.n
    return [(_e(alg, 2 * n - 1, n), 1), T_TOKEN, (_e(alg, 2 * n, n), 1), T_TOKEN]


def chi_minus_word(alg):
    n = alg.n
    return [(_e(alg, n + 2, 1), 1), T_TOKEN, (_e(alg, n + 1, 1), 1), T_TOKEN]


def chi_annihilation_cases(alg, max_mode=2):
    """Raising operators whose modes must kill chi, with the modes to test.

    These are the operators E^{i,j}, H^{i,j} with j = 1 or i in {2n-1, 2n},
    which suffice because every other raising operator commutes with both
    factors of chi.  Each entry is (label, element, modes); an element is a
    basis index or a combination dict.  Only modes that land the operator in
    the raising part are listed: m >= 0 for E^{i,j} with i < j, m >= 1
    otherwise.  H cases absent from the algebra (small n) are skipped.
    """
    n = alg.n
    cases = []

    def root_case(i, j):
        lo = 0 if i < j else 1
        modes = list(range(lo, max_mode + 1))
        cases.append((f"E[{i},{j}]", alg.index[("E", i, j)], modes))

    for j in range(2, 2 * n + 1):
        if j != 2 * n - 1:
            root_case(2 * n - 1, j)
    for j in range(2, 2 * n):
        root_case(2 * n, j)
    for i in range(2, 2 * n - 1):
        root_case(i, 1)
    root_case(2 * n - 1, 1)
    root_case(2 * n, 1)
    for i, j in ((2 * n - 2, 2 * n - 1), (2 * n - 1, 2 * n), (1, 2)):
        try:
            combo = alg.element_H(i, j)
        except ValueError:
            continue
        cases.append((f"H[{i},{j}]", combo, list(range(1, max_mode + 1))))
    return cases


def verify_chi_annihilation(alg, max_mode=2):
    """Apply every listed raising mode to chi; return (checked, failures)."""
    chi = vector_chi(alg)
    checked = 0
    failures = []
    for label, elem, modes in chi_annihilation_cases(alg, max_mode):
        for m in modes:
            if isinstance(elem, dict):
                image = apply_element(elem, m, chi)
            else:
                image = apply_mode(elem, m, chi)
            checked += 1
            if not image.is_zero():
                failures.append((label, m, image))
    return checked, failures


def u_vector(alg, i, k, j, l):
    """The minor-producing vectors in the submodule generated by chi.

    Index ranges: n+1 <= i < k <= 2n and n+1 <= j < l <= 2n.  The zero-mode
    factors for column indices l = 2n (resp. j = 2n-1) are omitted, which is
    the stated case split.
    """
    n = alg.n
    if not (n + 1 <= i < k <= 2 * n and n + 1 <= j < l <= 2 * n):
        raise InvalidIndexError(f"bad u-vector indices (i,k,j,l)=({i},{k},{j},{l}) for n={n}")
    s = vector_chi(alg)
    if j != 2 * n - 1:
        s = apply_mode(_e(alg, 2 * n - 1, j), 0, s)
    if l != 2 * n:
        s = apply_mode(_e(alg, 2 * n, l), 0, s)
    word = [(_e(alg, k, 1), 1), T_TOKEN, (_e(alg, i, 1), 1), T_TOKEN]
    return apply_word(word, s)
