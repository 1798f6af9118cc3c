"""Command-line front end.

Three subcommands:

  generate  emit a constructed object (bases, sign matrices, coordinate
            matrices) as JSON, LaTeX, or CSV
  convert   exact multivector <-> coordinate-matrix conversion through a
            named spectral basis, JSON on stdin/stdout
  verify    run named identity suites and print a report

Exit codes: 0 pass, 1 verification failure, 2 bad input, 3 unsupported
conversion.  CONFLICT entries in reports never affect the exit code.
The default seed for randomized checks is 0; the WITTKIT_SEED environment
variable overrides it when --seed is absent.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .dirac import (dirac_frame, dirac_spectral_new, dirac_spectral_standard,
                    new_rep_extra_matrices, pauli_spectral)
from .errors import (ExtractorUnavailableError, RangeError,
                     SignatureMismatchError, UnsupportedError)
from .ga import Multivector
from .omega import omega
from .verify import SUITES, run_all, run_suite
from .witt_global import MvMatrix, make_global_witt, spectral_basis_nn
from .witt_local import c8_complex_table, hadamard_identification, make_local_witt

_GENERATE_OBJECTS = ("global-witt", "local-witt", "spectral", "omega",
                     "dirac-standard", "dirac-new", "pauli", "frame-map",
                     "c8-table")
_ALGEBRAS = ("g11", "g22", "g33", "g44", "g13", "g13new")
_VARIANTS = ("plain", "minus", "complex-plain", "complex-minus")


def _basis(name: str):
    if name in ("g11", "g22", "g33", "g44"):
        return spectral_basis_nn(int(name[1]))
    if name == "g13":
        return dirac_spectral_standard()[0]
    return dirac_spectral_new().basis


def _print_csv(rows) -> None:
    w = csv.writer(sys.stdout)
    for row in rows:
        w.writerow(row)


def _labeled_family(labels_mvs) -> tuple[dict, list[str], list]:
    """Shared json/latex/csv shapes for a list of (label, multivector)."""
    payload = [{"label": lab, "multivector": mv.to_json()}
               for lab, mv in labels_mvs]
    latex_lines = [f"{lab} = {mv.latex()}" for lab, mv in labels_mvs]
    csv_rows = [["label", "multivector"]] + \
               [[lab, str(mv)] for lab, mv in labels_mvs]
    return payload, latex_lines, csv_rows


def _matrix_family(labels_mats):
    payload = [{"label": lab, "matrix": m.to_json()} for lab, m in labels_mats]
    latex_lines = [f"[{lab}] = {m.latex()}" for lab, m in labels_mats]
    csv_rows = []
    for lab, m in labels_mats:
        for row in m.entries:
            csv_rows.append([lab] + [str(e) for e in row])
    return payload, latex_lines, csv_rows


def cmd_generate(args) -> int:
    fmt = args.format
    obj = args.object
    if obj == "global-witt":
        w = make_global_witt(args.n)
        pairs = [(f"a{i+1}", g) for i, g in enumerate(w.a)] + \
                [(f"b{i+1}", g) for i, g in enumerate(w.b)]
        payload, latex_lines, csv_rows = _labeled_family(pairs)
        data = {"n": w.n, "signature": list(w.sig.squares), "family": payload}
    elif obj == "local-witt":
        w = make_local_witt(args.m)
        pairs = [(f"c{i+1}", g) for i, g in enumerate(w.c)]
        payload, latex_lines, csv_rows = _labeled_family(pairs)
        data = {"m": w.m, "signature": list(w.sig.squares), "family": payload}
    elif obj == "spectral":
        sb = _basis(args.algebra)
        data = sb.to_json()
        latex_lines = [sb.latex()]
        csv_rows = [[str(e) for e in row] for row in sb.E]
    elif obj == "omega":
        w = omega(args.k, args.variant)
        data = w.to_json()
        latex_lines = [w.latex()]
        if fmt == "csv":
            sys.stdout.write(w.to_csv())
            return 0
        csv_rows = []
    elif obj == "dirac-standard":
        sb, mats = dirac_spectral_standard()
        fr = dirac_frame()
        named = [(f"gamma{mu}", mats[mu]) for mu in range(4)]
        named += [(f"e{k+1}", sb.mv_to_matrix(fr.rest[k])) for k in range(3)]
        named.append(("e123", sb.mv_to_matrix(fr.pseudoscalar)))
        payload, latex_lines, csv_rows = _matrix_family(named)
        data = {"algebra": "g13", "representation": "standard",
                "matrices": payload}
    elif obj == "dirac-new":
        nd = dirac_spectral_new()
        extra = new_rep_extra_matrices(nd)
        named = [(f"gamma{mu}", nd.gamma_mats[mu]) for mu in range(4)]
        named += [(lab, extra[lab]) for lab in
                  ("a1", "a2", "b1", "b2", "e1", "e2", "e3")]
        payload, latex_lines, csv_rows = _matrix_family(named)
        data = {"algebra": "g13", "representation": "new", "matrices": payload}
    elif obj == "pauli":
        sb, mats = pauli_spectral()
        payload = [{"label": f"e{k+1}", "matrix": m.to_json()}
                   for k, m in enumerate(mats)]
        latex_lines = [f"[e_{k+1}] = " +
                       m.latex(unit_symbol="\\iota", unit_mask=0b111)
                       for k, m in enumerate(mats)]
        csv_rows = []
        for k, m in enumerate(mats):
            for row in m.entries:
                csv_rows.append([f"e{k+1}"] + [str(e) for e in row])
        data = {"algebra": "g3", "matrices": payload}
    elif obj == "frame-map":
        fm = hadamard_identification(args.k)
        data = fm.to_json()
        latex_lines = [fm.latex()]
        csv_rows = [["scales"] + [str(s) for s in fm.scales]]
        for row in fm.signs:
            csv_rows.append(["sign-row"] + [str(e) for e in row])
        csv_rows += [[lab, str(t)] for lab, t in zip(fm.target_labels, fm.targets)]
    else:  # c8-table
        tab = c8_complex_table()
        payload, latex_lines, csv_rows = _labeled_family(tab.rows())
        data = {"m": 8, "signature": list(tab.witt.sig.squares),
                "entries": payload}

    if fmt == "json":
        json.dump(data, sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif fmt == "latex":
        sys.stdout.write("\n".join(latex_lines) + "\n")
    else:
        _print_csv(csv_rows)
    return 0


def cmd_convert(args) -> int:
    raw = sys.stdin.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        print(f"wittkit: invalid JSON input: {exc}", file=sys.stderr)
        return 2
    sb = _basis(args.algebra)
    if args.direction == "mv2mat":
        mv = Multivector.from_json(data, sig=sb.sig)
        out = sb.mv_to_matrix(mv)
    else:
        mat = MvMatrix.from_json(data)
        if mat.dim != sb.dim:
            raise ValueError(
                f"matrix dim {mat.dim} does not match basis dim {sb.dim}")
        out = sb.matrix_to_mv(mat)
    json.dump(out.to_json(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("WITTKIT_SEED")
    if env is not None:
        return int(env)
    return 0


def cmd_verify(args) -> int:
    seed = _resolve_seed(args)
    if args.suite == "all":
        reports = run_all(seed=seed, samples=args.samples)
    else:
        reports = [run_suite(args.suite, seed=seed, samples=args.samples)]
    if args.format == "json":
        summary = {"pass": sum(r.n_pass for r in reports),
                   "fail": sum(r.n_fail for r in reports),
                   "conflict": sum(r.n_conflict for r in reports)}
        json.dump({"seed": seed, "samples": args.samples,
                   "reports": [r.to_json() for r in reports],
                   "summary": summary}, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for r in reports:
            print(r.format_text())
        total_fail = sum(r.n_fail for r in reports)
        total = sum(len(r.checks) for r in reports)
        print(f"TOTAL {total} checks: "
              f"{sum(r.n_pass for r in reports)} pass, {total_fail} fail, "
              f"{sum(r.n_conflict for r in reports)} conflict")
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="wittkit",
        description="Exact Witt/spectral basis toolkit for Clifford algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a constructed object")
    gen.add_argument("object", choices=_GENERATE_OBJECTS)
    gen.add_argument("--format", choices=("json", "latex", "csv"),
                     default="json")
    gen.add_argument("--algebra", choices=_ALGEBRAS, default="g11")
    gen.add_argument("--k", type=int, default=2,
                     help="recursion depth for omega / frame-map")
    gen.add_argument("--n", type=int, default=2,
                     help="pair count for global-witt")
    gen.add_argument("--m", type=int, default=4,
                     help="generator count for local-witt")
    gen.add_argument("--variant", choices=_VARIANTS, default="plain")

    conv = sub.add_parser("convert",
                          help="multivector <-> matrix JSON conversion")
    conv.add_argument("direction", choices=("mv2mat", "mat2mv"))
    conv.add_argument("--algebra", choices=_ALGEBRAS, default="g11")

    ver = sub.add_parser("verify", help="run identity suites")
    ver.add_argument("--suite", choices=("all",) + tuple(SUITES),
                     default="all")
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--samples", type=int, default=100)
    ver.add_argument("--format", choices=("text", "json"), default="text")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "convert":
            return cmd_convert(args)
        return cmd_verify(args)
    except (ExtractorUnavailableError, UnsupportedError) as exc:
        if args.command == "convert":
            print(f"wittkit: unsupported conversion: {exc}", file=sys.stderr)
            return 3
        print(f"wittkit: {exc}", file=sys.stderr)
        return 2
    except (RangeError, SignatureMismatchError, ValueError, KeyError) as exc:
        print(f"wittkit: bad input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
