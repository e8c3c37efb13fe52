"""Certification suite: runs every check group and emits deterministic reports.

The suite is a flat list of named checks, each ending in pass, fail or skip.
Reports are byte-identical across runs with the same inputs and seed; wall
clock timing is only recorded when explicitly requested.  When an output
directory is given, the suite writes the JSON report, a delimited results
table and a summary figure side by side.
"""
from __future__ import annotations

import csv
import json
import time
from itertools import product
from pathlib import Path

from . import affine, freefield, geometry, lattice, liesuper, zhu


def _row(name, n, status, detail=""):
    return {"name": name, "n": n, "status": status, "detail": detail}


class SuiteRunner:
    def __init__(self, n_range=(2, 5), seed=0, sample_count=100, timing=False):
        self.n_range = tuple(n_range)
        self.seed = seed
        self.sample_count = sample_count
        self.timing = timing
        self.rows = []

    def _run(self, name, n, fn):
        t0 = time.monotonic()
        try:
            detail = fn()
            row = _row(name, n, "pass", detail or "")
        except _Skip as skip:
            row = _row(name, n, "skip", str(skip))
        except _Failure as failure:
            row = _row(name, n, "fail", str(failure))
        if self.timing:
            row["seconds"] = round(time.monotonic() - t0, 3)
        self.rows.append(row)

    def run(self):
        lo, hi = self.n_range
        ns = range(lo, hi + 1)
        for n in range(2, 7):
            self._run("structure/sl", n, lambda n=n: _check_structure(liesuper.build_sl(n)))
        for n in ns:
            self._run("structure/psl", n, lambda n=n: _check_structure(liesuper.build_psl(n)))
        for n in ns:
            self._run("chi-annihilation", n, lambda n=n: _check_annihilation(n))
        for n in ns:
            self._run("chi-singular", n, lambda n=n: _check_chi_singular(n))
            self._run("chi-plus-witness", n, lambda n=n: _check_witness(n, plus=True))
            self._run("chi-minus-witness", n, lambda n=n: _check_witness(n, plus=False))
            self._run("chi-plus-word", n, lambda n=n: _check_word(n, plus=True))
            self._run("chi-minus-word", n, lambda n=n: _check_word(n, plus=False))
        for n in ns:
            self._run("minor-cover", n, lambda n=n: _check_minor_cover(n))
        for n in ns:
            self._run(
                "sheet-vanishing",
                n,
                lambda n=n: _check_sheet(n, self.sample_count, self.seed),
            )
        for n in range(1, 7):
            self._run("anomaly", n, lambda n=n: _check_anomaly(n))
        for n in ns:
            self._run("lattice-roundtrip", n, lambda n=n: _check_lattice(n))
        for n in range(2, 7):
            self._run("discriminant", n, lambda n=n: _check_discriminant(n))
        return self.report()

    def report(self):
        statuses = [r["status"] for r in self.rows]
        rep = {
            "suite": {
                "n_range": list(self.n_range),
                "seed": self.seed,
                "sample_count": self.sample_count,
            },
            "checks": sorted(self.rows, key=lambda r: (r["name"], r["n"])),
            "counts": {
                "pass": statuses.count("pass"),
                "fail": statuses.count("fail"),
                "skip": statuses.count("skip"),
            },
            "passed": "fail" not in statuses,
        }
        return rep


class _Skip(Exception):
    pass


class _Failure(Exception):
    pass


def _check_structure(alg):
    rep = liesuper.check_structure(alg)
    if not rep.passed:
        raise _Failure(rep.summary())
    return f"dim {alg.dim}"


def _check_annihilation(n):
    alg = liesuper.build_psl(n)
    checked, failures = affine.verify_chi_annihilation(alg)
    if failures:
        label, m, _ = failures[0]
        raise _Failure(f"{label} mode {m} does not annihilate chi")
    return f"{checked} modes checked"


def _check_chi_singular(n):
    alg = liesuper.build_psl(n)
    ok, witness = affine.is_singular(affine.vector_chi(alg))
    if not ok:
        x, m, _ = witness
        raise _Failure(f"chi not singular: {alg.label(x)} mode {m}")
    return "singular"


def _check_witness(n, plus):
    alg = liesuper.build_psl(n)
    if plus:
        vec = affine.vector_chi_plus(alg)
        expected = ("E", n, n + 1)
    else:
        if n < 4:
            raise _Skip("requires n >= 4")
        vec = affine.vector_chi_minus(alg)
        expected = ("E", 1, n + 1)
    ok, witness = affine.is_singular(vec)
    if ok:
        raise _Failure("vector is unexpectedly singular")
    x, m, _ = witness
    if alg.basis[x] != expected or m != 0:
        raise _Failure(f"witness {alg.label(x)} mode {m}")
    return f"witness {alg.label(x)}(0)"


def _check_word(n, plus):
    alg = liesuper.build_psl(n)
    chi = affine.vector_chi(alg)
    if plus:
        word = affine.chi_plus_word(alg)
        target = affine.vector_chi_plus(alg)
    else:
        if n < 4:
            raise _Skip("requires n >= 4")
        word = affine.chi_minus_word(alg)
        target = affine.vector_chi_minus(alg)
    image = affine.apply_word(word, chi)
    scalar = image.proportional_to(target)
    if scalar is None or abs(scalar) != 1:
        raise _Failure(f"scalar {scalar}")
    return f"scalar {scalar}"


def _check_minor_cover(n):
    if n > 4:
        raise _Skip("covered for n <= 4")
    alg = liesuper.build_psl(n)
    covered, problems = zhu.minor_cover_check(alg)
    if problems:
        raise _Failure(f"{len(problems)} images off, first {problems[0][:4]}")
    return f"{len(covered)} minors covered"


def _check_sheet(n, samples, seed):
    if n < 4:
        raise _Skip("requires n >= 4")
    failures, v12_nonzero = geometry.sheet_vanishing_check(n, samples=samples, seed=seed)
    if failures:
        raise _Failure(f"kernel element nonzero at {failures[0]}")
    if not v12_nonzero:
        raise _Failure("no coordinate image separates the semisimple sample")
    return f"{samples} samples"


def _check_anomaly(n):
    (current,) = freefield.current_from_weights([[1]] * n)
    level = freefield.ope_level(current, current)
    boson = freefield.ope_level(current.boson_part(), current.boson_part())
    fermion = freefield.ope_level(current.fermion_part(), current.fermion_part())
    if level != 0 or boson != -n or fermion != n:
        raise _Failure(f"levels {level}, {boson}, {fermion}")
    return f"split {boson}/{fermion}"


def _check_lattice(n, bound=2):
    count = 0
    for lam in product(range(-bound, bound + 1), repeat=n):
        lattice.decompose_weight(list(lam))
        count += 1
    return f"{count} weights"


def _check_discriminant(n):
    factors = lattice.discriminant_group(lattice.cartan_lattice(n))
    if factors != [n]:
        raise _Failure(f"invariant factors {factors}")
    return f"Z_{n}"


def write_outputs(rep, out_dir):
    """Write report.json, results.csv and summary.png next to each other."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(json.dumps(rep, indent=2, sort_keys=True) + "\n")
    with open(out / "results.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["name", "n", "status", "detail"])
        for row in rep["checks"]:
            writer.writerow([row["name"], row["n"], row["status"], row["detail"]])
    _render_figure(rep, out / "summary.png")
    return out


def _render_figure(rep, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    groups = sorted({r["name"] for r in rep["checks"]})
    counts = {s: [0] * len(groups) for s in ("pass", "skip", "fail")}
    for row in rep["checks"]:
        counts[row["status"]][groups.index(row["name"])] += 1
    fig, ax = plt.subplots(figsize=(10, 4.5))
    bottom = [0] * len(groups)
    for status, color in (("pass", "#2a9d4e"), ("skip", "#c9c9c9"), ("fail", "#d63b2f")):
        ax.bar(groups, counts[status], bottom=bottom, label=status, color=color)
        bottom = [a + b for a, b in zip(bottom, counts[status])]
    ax.set_ylabel("checks")
    ax.set_title("certification suite results")
    ax.legend()
    plt.setp(ax.get_xticklabels(), rotation=45, ha="right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def run_suite(n_range=(2, 5), seed=0, sample_count=100, timing=False, out_dir=None):
    rep = SuiteRunner(n_range, seed, sample_count, timing).run()
    if out_dir is not None:
        write_outputs(rep, out_dir)
    return rep
