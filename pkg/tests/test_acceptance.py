"""End-to-end acceptance gate: ten exact criteria, each printed pass/fail.

Everything here is rational arithmetic; there are no tolerances.  The three
budgeted criteria assert wall-clock ceilings on top of correctness.
"""
import random
import time
from fractions import Fraction
from itertools import product

from voacert import affine, freefield, geometry, lattice, liesuper, ratmat, zhu


def _announce(number, label, ok):
    print(f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {label}")
    assert ok, f"criterion {number} failed: {label}"


def _supercommutator(alg, a, b):
    ma, mb = alg.matrices[a], alg.matrices[b]
    sign = -1 if alg.parity[a] and alg.parity[b] else 1
    out = {}
    for (i, k), x in ma.items():
        for (kk, j), y in mb.items():
            if k == kk:
                out[(i, j)] = out.get((i, j), Fraction(0)) + x * y
    for (i, k), x in mb.items():
        for (kk, j), y in ma.items():
            if k == kk:
                out[(i, j)] = out.get((i, j), Fraction(0)) - sign * x * y
    return {k: v for k, v in out.items() if v}


def _oracle_matches(alg):
    size = alg.size
    for a in range(alg.dim):
        for b in range(alg.dim):
            want = _supercommutator(alg, a, b)
            if alg.kind == "psl":
                tr = sum(
                    (v for (i, j), v in want.items() if i == j), Fraction(0)
                )
                if tr:
                    shift = tr / size
                    for d in range(1, size + 1):
                        want[(d, d)] = want.get((d, d), Fraction(0)) - shift
                    want = {k: v for k, v in want.items() if v}
            got = alg.matrix_of(alg.bracket(a, b))
            got_sparse = {
                (i + 1, j + 1): v
                for i, row in enumerate(got)
                for j, v in enumerate(row)
                if v
            }
            if got_sparse != want:
                return False
    return True


def test_criterion_1_structure_soundness():
    start = time.monotonic()
    ok = True
    for n in range(2, 7):
        alg = liesuper.build_sl(n)
        ok = ok and liesuper.check_structure(alg).passed
    for n in range(2, 6):
        alg = liesuper.build_psl(n)
        ok = ok and liesuper.check_structure(alg).passed
        ok = ok and _oracle_matches(alg)
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 10
    _announce(1, f"structure soundness ({elapsed:.1f}s)", ok)


def test_criterion_2_annihilation_identities():
    start = time.monotonic()
    ok = True
    for n in range(2, 6):
        checked, failures = affine.verify_chi_annihilation(liesuper.build_psl(n))
        ok = ok and not failures and checked > 0
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 30
    _announce(2, f"annihilation identity replication ({elapsed:.1f}s)", ok)


def test_criterion_3_singularity():
    ok = True
    for n in range(2, 6):
        alg = liesuper.build_psl(n)
        singular, _ = affine.is_singular(affine.vector_chi(alg))
        ok = ok and singular
        bad, witness = affine.is_singular(affine.vector_chi_plus(alg))
        ok = ok and not bad
        x, m, _ = witness
        ok = ok and alg.basis[x] == ("E", n, n + 1) and m == 0
        if n >= 4:
            bad, witness = affine.is_singular(affine.vector_chi_minus(alg))
            ok = ok and not bad
            x, m, _ = witness
            ok = ok and alg.basis[x] == ("E", 1, n + 1) and m == 0
    _announce(3, "singular vector and witnesses", ok)


def test_criterion_4_word_membership():
    ok = True
    for n in range(2, 6):
        alg = liesuper.build_psl(n)
        chi = affine.vector_chi(alg)
        image = affine.apply_word(affine.chi_plus_word(alg), chi)
        scalar = image.proportional_to(affine.vector_chi_plus(alg))
        ok = ok and scalar is not None and abs(scalar) == 1
        if n >= 4:
            image = affine.apply_word(affine.chi_minus_word(alg), chi)
            scalar = image.proportional_to(affine.vector_chi_minus(alg))
            ok = ok and scalar is not None and abs(scalar) == 1
    _announce(4, "submodule membership words, |scalar| = 1", ok)


def test_criterion_5_minor_coverage():
    start = time.monotonic()
    ok = True
    for n in range(2, 5):
        covered, problems = zhu.minor_cover_check(liesuper.build_psl(n))
        expected = (n * (n - 1) // 2) ** 2
        ok = ok and not problems and len(covered) == expected
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 60
    _announce(5, f"2x2 minor coverage ({elapsed:.1f}s)", ok)


def test_criterion_6_sheet_vanishing():
    ok = True
    for n in (4, 5):
        _, u22 = geometry.minor_decomposition(n)
        expected = (n * (n - 1) // 2) ** 2 - n * n
        ok = ok and len(u22) == expected
        failures, v12_nonzero = geometry.sheet_vanishing_check(n, samples=100, seed=0)
        ok = ok and not failures and v12_nonzero
    _announce(6, "kernel summand vanishes on 100 sheet samples", ok)


def test_criterion_7_anomaly_cancellation():
    ok = True
    for n in range(1, 7):
        (j,) = freefield.current_from_weights([[1]] * n)
        ok = ok and freefield.ope_level(j, j) == 0
        ok = ok and freefield.ope_level(j.boson_part(), j.boson_part()) == -n
        ok = ok and freefield.ope_level(j.fermion_part(), j.fermion_part()) == n
    _announce(7, "anomaly cancellation with -n/+n split", ok)


def test_criterion_8_lattice_round_trip():
    ok = True
    for n in range(2, 6):
        rho = lattice.rho_matrix(n)
        rho_v = lattice.rho_v_matrix(n)
        for lam in product(range(-2, 3), repeat=n):
            lam0, lam_v, _ = lattice.decompose_weight(list(lam))
            rebuilt = [
                a + b
                for a, b in zip(
                    ratmat.mat_vec(rho, [lam0]), ratmat.mat_vec(rho_v, lam_v)
                )
            ]
            ok = ok and rebuilt == [Fraction(x) for x in lam]
            ok = ok and lattice.class_of_lam0(lam0, n) == lattice.class_of_lam_v(
                lam_v, n
            )
    for n in range(2, 7):
        ok = ok and lattice.discriminant_group(lattice.cartan_lattice(n)) == [n]
    _announce(8, "lattice round trip and discriminants", ok)


def test_criterion_9_property_suites():
    alg = liesuper.build_psl(2)
    level = Fraction(1)
    ok = True

    def rand_state(rng, max_depth=2):
        s = affine.State(alg, level, {})
        for _ in range(2):
            pairs = [
                (rng.randrange(alg.dim), -rng.randint(1, max_depth))
                for _ in range(rng.randint(1, 2))
            ]
            s = s + affine.monomial_state(alg, pairs).scale(rng.randint(-3, 3))
        return s

    rng = random.Random(101)
    for _ in range(200):  # super-commutator soundness
        s = rand_state(rng)
        x, y = rng.randrange(alg.dim), rng.randrange(alg.dim)
        m, r = rng.randint(-2, 2), rng.randint(-2, 2)
        sign = -1 if alg.parity[x] and alg.parity[y] else 1
        lhs = affine.apply_mode(x, m, affine.apply_mode(y, r, s)) - affine.apply_mode(
            y, r, affine.apply_mode(x, m, s)
        ).scale(sign)
        rhs = affine.apply_element(alg.bracket(x, y), m + r, s)
        if m + r == 0:
            rhs = rhs + s.scale(m * level * alg.form(x, y))
        ok = ok and lhs == rhs

    rng = random.Random(102)
    for _ in range(200):  # translation commutation
        s = rand_state(rng)
        x, m = rng.randrange(alg.dim), rng.randint(-2, 2)
        lhs = affine.apply_T(affine.apply_mode(x, m, s)) - affine.apply_mode(
            x, m, affine.apply_T(s)
        )
        ok = ok and lhs == affine.apply_mode(x, m - 1, s).scale(-m)

    rng = random.Random(103)
    for _ in range(200):  # normal-form idempotence
        s = rand_state(rng)
        ok = ok and affine.canonicalize(s) == s

    rng = random.Random(104)
    for _ in range(200):  # the polynomial map kills deep modes
        pairs = [
            (rng.randrange(alg.dim), -rng.randint(2, 4))
            for _ in range(rng.randint(1, 3))
        ]
        ok = ok and zhu.psi(affine.monomial_state(alg, pairs)).is_zero()

    rng = random.Random(105)
    for _ in range(200):  # orbit membership: rank test vs minor vanishing
        n = rng.choice((3, 4))
        z = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        z[0][0] -= ratmat.trace(z)
        by_rank = geometry.in_min_orbit_closure(z)
        by_minors = all(v == 0 for v in geometry.minor_values(z).values())
        ok = ok and by_rank == by_minors

    _announce(9, "five property suites, 200 seeded instances each", ok)


def test_criterion_10_geometry_containment():
    ok = True
    rng = random.Random(106)
    for _ in range(50):
        n = rng.choice((3, 4, 5))
        u = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        if all(x == 0 for x in u):
            u[0] = Fraction(1)
        pivot = next(i for i, x in enumerate(u) if x)
        v = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        v[pivot] = 0
        v[pivot] = -sum(a * b for a, b in zip(u, v)) / u[pivot]
        z = [[u[i] * v[j] for j in range(n)] for i in range(n)]
        ok = ok and geometry.in_min_orbit_closure(z)
        ok = ok and geometry.in_sheet_closure(z)
    for n in (4, 5):
        semisimple = geometry.sheet_matrix([Fraction(1)] + [Fraction(0)] * (n - 1))
        ok = ok and not geometry.in_min_orbit_closure(semisimple)
        ok = ok and geometry.in_sheet_closure(semisimple)
    _announce(10, "orbit closure inside sheet closure, strictly", ok)
