"""Command line driver.

Every subcommand reads plain-text or JSON literals, dispatches to the
library, and prints either JSON or a short text rendering.  A JSON config
file can preset the n range, seed, sample count and resource limits.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import affine, freefield, geometry, lattice, liesuper, parsing, report, zhu

DEFAULT_CONFIG = {
    "default_n_range": [2, 5],
    "seed": 0,
    "sample_count": 100,
    "resource_limits": {"max_n": 6},
}


def load_config(path):
    cfg = dict(DEFAULT_CONFIG)
    if path:
        cfg.update(json.loads(Path(path).read_text()))
    return cfg


def _add_global_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--n", type=int, default=default(2), help="rank parameter")
    parser.add_argument("--seed", type=int, default=default(None), help="base random seed")
    parser.add_argument("--format", choices=("json", "text"), default=default("json"))
    parser.add_argument("--out", default=default(None), help="output file or directory")
    parser.add_argument("--config", default=default(None), help="JSON config file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="voacert",
        description="Exact-arithmetic certification toolkit for affine superalgebra identities.",
    )
    _add_global_flags(parser, suppress=False)
    # global flags are accepted after the subcommand as well
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[common], **kw))

    p = sub.add_parser("structure-check", help="verify all structure invariants")
    p.add_argument("--algebra", default=None, help='preset name, e.g. "psl(3|3)"')
    p.add_argument("--dump", action="store_true", help="include the JSON table")

    p = sub.add_parser("singular-check", help="test a state against all raising modes")
    p.add_argument("--state", required=True)

    p = sub.add_parser("apply-word", help="apply an operator word to a state")
    p.add_argument("--word", required=True)
    p.add_argument("--state", required=True)

    p = sub.add_parser("c2-reduce", help="reduce a state to a polynomial")
    p.add_argument("--state", required=True)
    p.add_argument("--even", action="store_true", help="also kill odd variables")

    p = sub.add_parser("minor-cover", help="match u-vector images against minors")

    p = sub.add_parser("orbit-member", help="rank test for the minimal orbit closure")
    p.add_argument("--matrix", required=True)

    p = sub.add_parser("sheet-sample", help="draw seeded sheet-closure samples")
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("sheet-vanish", help="evaluate the kernel summand on samples")
    p.add_argument("--samples", type=int, default=None)

    p = sub.add_parser("anomaly-check", help="level matrix of the charge currents")
    p.add_argument("--rho", required=True, help="JSON integer matrix, n rows")

    p = sub.add_parser("lattice-decompose", help="split an integer weight")
    p.add_argument("--lambda", dest="lam", required=True, help="JSON integer array")

    p = sub.add_parser("discriminant", help="invariant factors of the Cartan Gram matrix")

    p = sub.add_parser("suite", help="run the full certification suite")
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="record wall-clock timing")
    return parser


def _algebra(args):
    name = getattr(args, "algebra", None)
    if name:
        return liesuper.algebra_by_name(name)
    return liesuper.build_psl(args.n)


def cmd_structure_check(args, cfg):
    alg = _algebra(args)
    rep = liesuper.check_structure(alg)
    payload = {
        "algebra": alg.name,
        "passed": rep.passed,
        "failures": rep.failures,
        "summary": rep.summary(),
    }
    if args.dump:
        payload["table"] = alg.to_json()
    return payload, rep.passed


def cmd_singular_check(args, cfg):
    alg = _algebra(args)
    state = parsing.parse_state(args.state, alg)
    ok, witness = affine.is_singular(state)
    payload = {"input": args.state, "is_singular": ok, "witness": None}
    if witness is not None:
        x, m, image = witness
        payload["witness"] = {
            "mode": f"{alg.label(x)}({m})",
            "image": parsing.print_state(image),
        }
    return payload, True


def cmd_apply_word(args, cfg):
    alg = _algebra(args)
    state = parsing.parse_state(args.state, alg)
    word = parsing.parse_word(args.word, alg)
    image = affine.apply_word(word, state)
    payload = {
        "input": {"word": args.word, "state": args.state},
        "result_state": parsing.print_state(image),
        "is_zero": image.is_zero(),
    }
    return payload, True


def cmd_c2_reduce(args, cfg):
    alg = _algebra(args)
    state = parsing.parse_state(args.state, alg)
    poly = zhu.psi(state)
    payload = {"input": args.state, "polynomial": str(poly)}
    if args.even:
        payload["even_polynomial"] = str(zhu.psi_reduced(state))
    return payload, True


def cmd_minor_cover(args, cfg):
    alg = liesuper.build_psl(args.n)
    covered_list, problems = zhu.minor_cover_check(alg)
    payload = {
        "n": args.n,
        "covered": not problems,
        "count": len(covered_list),
        "missing": [list(p[:4]) for p in problems],
    }
    return payload, not problems


def cmd_orbit_member(args, cfg):
    z = parsing.parse_matrix(args.matrix)
    member = geometry.in_min_orbit_closure(z)
    payload = {
        "matrix": parsing.print_matrix(z),
        "in_min_orbit_closure": member,
        "in_sheet_closure": geometry.in_sheet_closure(z),
    }
    return payload, True


def cmd_sheet_sample(args, cfg):
    seed = args.seed if args.seed is not None else cfg["seed"]
    samples = [
        geometry.sample_sheet_element(args.n, (seed, i)) for i in range(args.count)
    ]
    payload = {
        "n": args.n,
        "seed": seed,
        "samples": [[[str(x) for x in row] for row in z] for z in samples],
    }
    return payload, True


def cmd_sheet_vanish(args, cfg):
    seed = args.seed if args.seed is not None else cfg["seed"]
    samples = args.samples if args.samples is not None else cfg["sample_count"]
    failures, v12_nonzero = geometry.sheet_vanishing_check(args.n, samples, seed)
    payload = {
        "n": args.n,
        "samples": samples,
        "kernel_vanishes": not failures,
        "failures": [list(f) for f in failures],
        "complement_nonzero_on_semisimple": v12_nonzero,
    }
    return payload, not failures and v12_nonzero


def cmd_anomaly_check(args, cfg):
    rho = [[int(x) for x in row] for row in json.loads(args.rho)]
    currents = freefield.current_from_weights(rho)
    matrix = [
        [str(freefield.ope_level(a, b)) for b in currents] for a in currents
    ]
    is_zero = all(x == "0" for row in matrix for x in row)
    payload = {"rho": rho, "level_matrix": matrix, "is_zero": is_zero}
    return payload, True


def cmd_lattice_decompose(args, cfg):
    lam = parsing.parse_weight(args.lam)
    lam0, lam_v, j = lattice.decompose_weight(lam)
    payload = {
        "lambda": lam,
        "lambda0": str(lam0),
        "lambda_v": [str(x) for x in lam_v],
        "class": lattice.class_of_lam0(lam0, len(lam)),
        "j": j,
    }
    return payload, True


def cmd_discriminant(args, cfg):
    factors = lattice.discriminant_group(lattice.cartan_lattice(args.n))
    payload = {"n": args.n, "invariant_factors": factors}
    return payload, True


def cmd_suite(args, cfg):
    lo = args.n_min if args.n_min is not None else cfg["default_n_range"][0]
    hi = args.n_max if args.n_max is not None else cfg["default_n_range"][1]
    max_n = cfg.get("resource_limits", {}).get("max_n", 6)
    hi = min(hi, max_n)
    seed = args.seed if args.seed is not None else cfg["seed"]
    rep = report.run_suite(
        n_range=(lo, hi),
        seed=seed,
        sample_count=cfg["sample_count"],
        timing=args.timing,
        out_dir=args.out,
    )
    return rep, rep["passed"]


HANDLERS = {
    "structure-check": cmd_structure_check,
    "singular-check": cmd_singular_check,
    "apply-word": cmd_apply_word,
    "c2-reduce": cmd_c2_reduce,
    "minor-cover": cmd_minor_cover,
    "orbit-member": cmd_orbit_member,
    "sheet-sample": cmd_sheet_sample,
    "sheet-vanish": cmd_sheet_vanish,
    "anomaly-check": cmd_anomaly_check,
    "lattice-decompose": cmd_lattice_decompose,
    "discriminant": cmd_discriminant,
    "suite": cmd_suite,
}


def _render_text(payload, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{payload}")
    return "\n".join(lines)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        payload, ok = HANDLERS[args.command](args, cfg)
    except (
        parsing.StateSyntaxError,
        parsing.UnknownGeneratorError,
        liesuper.InvalidRankError,
        affine.InvalidIndexError,
        affine.NonHomogeneousError,
        geometry.NotTracelessError,
        geometry.UnsupportedRankError,
        lattice.SingularLatticeError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = (
        json.dumps(payload, indent=2, sort_keys=True)
        if args.format == "json"
        else _render_text(payload)
    )
    if args.out and args.command != "suite":
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
