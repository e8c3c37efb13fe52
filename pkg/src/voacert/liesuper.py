"""Finite-dimensional Lie superalgebras as exact structure-constant tables.

Built-ins:

* ``build_sl(n)`` -- sl(n) with the trace form of the defining representation.
* ``build_psl(n)`` -- psl(n|n) with the supertrace form; brackets are computed
  in gl(n|n) as matrix super-commutators and reduced to the unique coset
  representative with ordinary trace zero.

Basis order is Cartans first (ascending i), then root vectors E^{i,j} in
lexicographic (i, j) order.  All coefficients are exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

EVEN, ODD = 0, 1

_ZERO = Fraction(0)


class InvalidRankError(ValueError):
    """Raised when an algebra is requested at an unsupported rank."""


def _sparse_mul(a, b):
    out = {}
    brows = {}
    for (r, c), v in b.items():
        brows.setdefault(r, []).append((c, v))
    for (r, c), v in a.items():
        for c2, w in brows.get(c, ()):
            key = (r, c2)
            s = out.get(key, _ZERO) + v * w
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def _sparse_combine(*scaled):
    out = {}
    for coeff, m in scaled:
        for key, v in m.items():
            s = out.get(key, _ZERO) + coeff * v
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


@dataclass
class StructureReport:
    """Outcome of the exhaustive invariant check of an algebra table."""

    name: str
    passed: bool
    failures: list = field(default_factory=list)

    def summary(self):
        if self.passed:
            return f"{self.name}: all structure invariants hold"
        head = "; ".join(self.failures[:3])
        return f"{self.name}: {len(self.failures)} violation(s): {head}"


class LieSuperalgebra:
    """Immutable structure-constant table with an invariant bilinear form."""

    def __init__(self, name, kind, n, size, basis, parity, matrices, expand, form_fn):
        self.name = name
        self.kind = kind
        self.n = n
        self.size = size  # matrices act on C^size
        self.basis = basis
        self.parity = parity
        self.index = {b: i for i, b in enumerate(basis)}
        self.dim = len(basis)
        self.matrices = matrices
        self._expand = expand
        self.form_mat = [
            [form_fn(matrices[a], matrices[b]) for b in range(self.dim)]
            for a in range(self.dim)
        ]
        self.table = self._build_table()

    # -- construction ---------------------------------------------------

    def _build_table(self):
        table = []
        for a in range(self.dim):
            row = []
            ma, pa = self.matrices[a], self.parity[a]
            for b in range(self.dim):
                mb, pb = self.matrices[b], self.parity[b]
                sign = -1 if pa and pb else 1
                comm = _sparse_combine((1, _sparse_mul(ma, mb)), (-sign, _sparse_mul(mb, ma)))
                combo = self._expand(comm)
                row.append(tuple(sorted(combo.items())))
            table.append(row)
        return table

    # -- queries --------------------------------------------------------

    def bracket(self, a, b):
        """[x_a, x_b] as a dict basis-index -> Fraction."""
        return dict(self.table[a][b])

    def form(self, a, b):
        return self.form_mat[a][b]

    def label(self, idx):
        b = self.basis[idx]
        if b[0] == "h":
            return f"h[{b[1]}]"
        return f"E[{b[1]},{b[2]}]"

    def matrix_of(self, elem):
        """Dense matrix of a basis index or a dict basis-index -> coefficient."""
        if isinstance(elem, int):
            elem = {elem: Fraction(1)}
        out = [[_ZERO] * self.size for _ in range(self.size)]
        for idx, c in elem.items():
            for (r, col), v in self.matrices[idx].items():
                out[r - 1][col - 1] += c * v
        return out

    def positive_root_indices(self):
        """Basis indices of the root vectors spanning n_+ (E^{i,j} with i < j)."""
        return [i for i, b in enumerate(self.basis) if b[0] == "E" and b[1] < b[2]]

    def expand_matrix(self, m):
        """Write a sparse matrix dict {(r,c): coeff} in the basis, as {idx: coeff}."""
        return self._expand(dict(m))

    def element_H(self, i, j):
        """E^{i,i} - E^{j,j} as a basis combination; raises if not in the algebra."""
        combo = self.expand_matrix({(i, i): Fraction(1), (j, j): Fraction(-1)})
        check = self.matrix_of(combo)
        want = {(i, i): Fraction(1), (j, j): Fraction(-1)}
        for r in range(self.size):
            for c in range(self.size):
                if check[r][c] != want.get((r + 1, c + 1), _ZERO):
                    raise ValueError(f"H[{i},{j}] is not an element of {self.name}")
        return combo

    def element_D(self, i, j):
        """[E^{i,j}, E^{j,i}] as a basis combination."""
        return self.bracket(self.index[("E", i, j)], self.index[("E", j, i)])

    def to_json(self):
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": [self.label(i) for i in range(self.dim)],
            "parities": list(self.parity),
            "brackets": {
                f"{self.label(a)},{self.label(b)}": {
                    self.label(i): str(c) for i, c in self.table[a][b]
                }
                for a in range(self.dim)
                for b in range(self.dim)
                if self.table[a][b]
            },
            "form": {
                f"{self.label(a)},{self.label(b)}": str(self.form_mat[a][b])
                for a in range(self.dim)
                for b in range(self.dim)
                if self.form_mat[a][b]
            },
        }


def _telescope(diag_entries):
    """Coefficients on h_i = E^{i,i} - E^{i+1,i+1} for a trace-zero diagonal block.

    ``diag_entries`` maps local position (1-based) -> value; returns coefficient
    of h at local position i as the partial sum d_1 + ... + d_i.
    """
    size = max(diag_entries) if diag_entries else 0
    coeffs = {}
    acc = _ZERO
    for i in range(1, size):
        acc += diag_entries.get(i, _ZERO)
        if acc:
            coeffs[i] = acc
    return coeffs


def build_sl(n):
    """sl(n) with basis {h_i} + {E^{i,j}}, trace form, all parities even."""
    if n < 2:
        raise InvalidRankError(f"sl(n) needs n >= 2, got n={n}")
    basis = [("h", i) for i in range(1, n)]
    basis += [("E", i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    matrices = []
    for b in basis:
        if b[0] == "h":
            i = b[1]
            matrices.append({(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)})
        else:
            matrices.append({(b[1], b[2]): Fraction(1)})
    parity = [EVEN] * len(basis)
    index = {b: i for i, b in enumerate(basis)}

    def expand(m):
        combo = {}
        diag = {}
        for (r, c), v in m.items():
            if r == c:
                diag[r] = v
            else:
                combo[index[("E", r, c)]] = v
        for i, coeff in _telescope(diag).items():
            combo[index[("h", i)]] = coeff
        return combo

    def form_fn(ma, mb):
        prod = _sparse_mul(ma, mb)
        return sum((v for (r, c), v in prod.items() if r == c), _ZERO)

    return LieSuperalgebra(f"sl({n})", "sl", n, n, basis, parity, matrices, expand, form_fn)


def build_psl(n):
    """psl(n|n) on the paper-style Chevalley spanning set, supertrace form.

    Root vectors E^{i,j} are odd exactly when one of i, j exceeds n; the Cartan
    is spanned by h_i for 1 <= i <= n-1 and n+1 <= i <= 2n-1 (dimension 2n-2).
    Bracket values are reduced modulo the identity to the representative with
    ordinary trace zero.
    """
    if n < 2:
        raise InvalidRankError(f"psl(n|n) needs n >= 2, got n={n}")
    size = 2 * n
    basis = [("h", i) for i in list(range(1, n)) + list(range(n + 1, 2 * n))]
    basis += [("E", i, j) for i in range(1, size + 1) for j in range(1, size + 1) if i != j]
    matrices = []
    parity = []
    for b in basis:
        if b[0] == "h":
            i = b[1]
            matrices.append({(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)})
            parity.append(EVEN)
        else:
            matrices.append({(b[1], b[2]): Fraction(1)})
            parity.append(ODD if (b[1] <= n) != (b[2] <= n) else EVEN)
    index = {b: i for i, b in enumerate(basis)}

    def expand(m):
        tr = sum((v for (r, c), v in m.items() if r == c), _ZERO)
        shift = tr / size
        combo = {}
        top, bottom = {}, {}
        for (r, c), v in m.items():
            if r != c:
                combo[index[("E", r, c)]] = v
            elif r <= n:
                top[r] = v - shift
            else:
                bottom[r - n] = v - shift
        if shift:
            for r in range(1, size + 1):
                if r <= n:
                    top.setdefault(r, -shift)
                else:
                    bottom.setdefault(r - n, -shift)
        for i, coeff in _telescope(top).items():
            combo[index[("h", i)]] = coeff
        for i, coeff in _telescope(bottom).items():
            combo[index[("h", n + i)]] = coeff
        return combo

    def form_fn(ma, mb):
        prod = _sparse_mul(ma, mb)
        return sum(
            (v if r <= n else -v for (r, c), v in prod.items() if r == c), _ZERO
        )

    return LieSuperalgebra(
        f"psl({n}|{n})", "psl", n, size, basis, parity, matrices, expand, form_fn
    )


def algebra_by_name(name):
    """Resolve preset names of the shape "sl(n)" and "psl(n|n)"."""
    name = name.strip().replace(" ", "")
    if name.startswith("sl(") and name.endswith(")"):
        return build_sl(int(name[3:-1]))
    if name.startswith("psl(") and name.endswith(")"):
        body = name[4:-1]
        a, _, b = body.partition("|")
        if b and a != b:
            raise InvalidRankError(f"only psl(n|n) is supported, got {name}")
        return build_psl(int(a))
    raise ValueError(f"unknown algebra preset {name!r}")


def check_structure(alg, max_failures=10):
    """Exhaustively verify the four structure invariants of an algebra table.

    Checks: super-antisymmetry, the super-Jacobi identity over all basis
    triples, invariance ([x,y],z) = (x,[y,z]) over all triples, and
    supersymmetry/parity consistency of the form.  The inner loops run over an
    integer-rescaled copy of the table for speed.
    """
    failures = []
    dim = alg.dim
    par = alg.parity
    lab = alg.label

    den = 1
    for a in range(dim):
        for b in range(dim):
            for _, c in alg.table[a][b]:
                den = lcm(den, c.denominator)
            den = lcm(den, alg.form_mat[a][b].denominator)
    t = [
        [tuple((i, int(c * den)) for i, c in alg.table[a][b]) for b in range(dim)]
        for a in range(dim)
    ]
    f = [[int(alg.form_mat[a][b] * den) for b in range(dim)] for a in range(dim)]

    # antisymmetry and form symmetry
    for a in range(dim):
        for b in range(a, dim):
            sign = -1 if par[a] and par[b] else 1
            if dict(t[a][b]) != {i: -sign * c for i, c in t[b][a]}:
                failures.append(f"antisymmetry fails for ({lab(a)}, {lab(b)})")
            if f[a][b] != sign * f[b][a]:
                failures.append(f"form supersymmetry fails for ({lab(a)}, {lab(b)})")
            if par[a] != par[b] and f[a][b]:
                failures.append(f"form parity fails for ({lab(a)}, {lab(b)})")

    # Jacobi + invariance over all triples
    cols = [[t[c][a] for c in range(dim)] for a in range(dim)]
    rng = range(dim)
    for a in rng:
        ta = t[a]
        pa = par[a]
        col_a = cols[a]
        for b in rng:
            tab = ta[b]
            sab = -1 if pa and par[b] else 1
            fa = f[a]
            for c in rng:
                tbc = t[b][c]
                tca = col_a[c]
                if not (tbc or tca or tab):
                    continue
                pc = par[c]
                acc = {}
                if tbc:
                    s1 = -1 if pa and pc else 1
                    for w, cf in tbc:
                        for i, cf2 in ta[w]:
                            acc[i] = acc.get(i, 0) + s1 * cf * cf2
                if tca:
                    tb = t[b]
                    for w, cf in tca:
                        for i, cf2 in tb[w]:
                            acc[i] = acc.get(i, 0) + sab * cf * cf2
                if tab:
                    s3 = -1 if par[b] and pc else 1
                    tc = t[c]
                    for w, cf in tab:
                        for i, cf2 in tc[w]:
                            acc[i] = acc.get(i, 0) + s3 * cf * cf2
                if any(acc.values()):
                    failures.append(
                        f"super-Jacobi fails for ({lab(a)}, {lab(b)}, {lab(c)})"
                    )
                # invariance ([a,b],c) = (a,[b,c]); rescaled by den^2 on both sides
                lhs = sum(cf * f[w][c] for w, cf in tab)
                rhs = sum(cf * fa[w] for w, cf in tbc)
                if lhs != rhs:
                    failures.append(
                        f"form invariance fails for ({lab(a)}, {lab(b)}, {lab(c)})"
                    )
                if len(failures) >= max_failures:
                    return StructureReport(alg.name, False, failures)
    return StructureReport(alg.name, not failures, failures)
