"""Command-line interface: analyze, reduce, chambers, boundary, numdim, sweep, render.

Human-readable summaries go to stdout; machine-readable JSON goes to the
--out / --report paths.  Exit codes: 0 success, 1 domain error (with the
violated condition spelled out), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import cones, numdim, render, sweep, variety
from .coxeter import (
    involution_matrix,
    is_lorentzian,
    reflection_rep,
    restrict_to_J,
    signature,
)
from .errors import MovconeError


def _write_json(path, data):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")


def _load(args) -> variety.ValidatedVariety:
    return variety.load(args.config)


def _word_str(word) -> str:
    return " ".join(f"s{j}" for j in word.letters) if len(word) else "(identity)"


def _cmd_analyze(args) -> int:
    v = _load(args)
    print(f"variety: {v.name or args.config}")
    print(f"factors: {list(v.spec.factors)}  degrees: {[list(r) for r in v.spec.degrees]}")
    print(f"n = {v.n}   J = {set(v.J)}   dim X = {v.dimX}   codim = {v.codim}")
    data = {
        "name": v.name,
        "factors": list(v.spec.factors),
        "degrees": [list(r) for r in v.spec.degrees],
        "n": v.n,
        "J": list(v.J),
        "dimX": v.dimX,
        "codim": v.codim,
        "subcritical": v.subcritical,
    }
    if v.subcritical:
        print("subcritical (codim < n): Mov(X) = Nef(X); birational automorphisms act trivially")
    else:
        rep = reflection_rep(v)
        print("b coefficients (pairs meeting J):")
        for j in rep.J:
            vals = ", ".join(
                f"b_{i}{j} = {rep.b_value(i, j)}" for i in range(1, rep.l + 1) if i != j
            )
            print(f"  column {j}: {vals}")
        print("bilinear form B:")
        print(rep.gram)
        for j in rep.J:
            print(f"involution iota_{j}^*:")
            for row in involution_matrix(rep, j):
                print("  " + " ".join(f"{x:4d}" for x in row))
        gram_j = restrict_to_J(rep.gram, rep.J)
        sig = signature(gram_j)
        verdict = is_lorentzian(gram_j) if gram_j.size >= 2 else False
        print(f"signature of B_J: {sig}   Lorentzian: {verdict}")
        data.update(
            {
                "carrier2": {str(j): i for j, i in sorted(v.carrier2.items())},
                "b": {f"{i},{j}": rep.b_value(i, j)
                      for j in rep.J for i in range(1, rep.l + 1) if i != j},
                "gram": rep.gram.to_json(),
                "involutions": {str(j): [list(r) for r in involution_matrix(rep, j)]
                                for j in rep.J},
                "signatureJ": list(sig),
                "lorentzian": verdict,
            }
        )
    if args.out:
        _write_json(args.out, data)
    return 0


def _parse_class(text: str):
    try:
        return tuple(Fraction(tok) for tok in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise MovconeError(f"bad --class value {text!r}: {exc}") from exc


def _cmd_reduce(args) -> int:
    v = _load(args)
    rep = reflection_rep(v)
    beta = _parse_class(args.divisor_class)
    if len(beta) != rep.l:
        raise MovconeError(f"--class needs {rep.l} coordinates, got {len(beta)}")
    result = cones.reduce_to_nef(beta, rep, max_steps=args.max_steps)
    print(f"verdict: {result.verdict}")
    print(f"word:    {_word_str(result.word)}")
    print(f"final:   {','.join(str(x) for x in result.final.beta)}")
    print(f"s trace: {', '.join(str(step.s) for step in result.trace)}")
    if result.witness:
        print(f"witness: {result.witness.kind} at {result.witness.indices}")
    if args.out:
        _write_json(args.out, result.to_json())
    return 0


def _cmd_chambers(args) -> int:
    v = _load(args)
    rep = reflection_rep(v)
    orbit = cones.chamber_orbit(rep, args.depth)
    print(f"chambers of word length <= {args.depth}: {len(orbit)}")
    if args.out:
        _write_json(
            args.out,
            {
                "depth": args.depth,
                "count": len(orbit),
                "chambers": [
                    {"word": list(word.letters), "matrix": [list(r) for r in mat]}
                    for word, mat in orbit
                ],
            },
        )
    return 0


def _cmd_boundary(args) -> int:
    v = _load(args)
    rep = reflection_rep(v)
    result = cones.boundary_cones(rep, depth=args.depth)
    fam1 = sum(1 for c in result if c.kind == "face-outside-J")
    print(
        f"boundary cones up to word length {args.depth}: {len(result)} "
        f"({fam1} face-type, {len(result) - fam1} pair-eigenvector)"
    )
    if args.out:
        _write_json(args.out, {"depth": args.depth, "cones": [c.to_json() for c in result]})
    return 0


def _cmd_numdim(args) -> int:
    v = _load(args)
    rep = reflection_rep(v)
    word = tuple(int(tok) for tok in args.word.split(","))
    report = numdim.spectral_report(rep, word, tol=args.tol)
    value = numdim.nu_vol(rep, v, report)
    certified = report.unit_others and report.certified_equal
    print(f"word:       {_word_str(report.word)}")
    print(f"lambda1:    {report.lambda1!r} (+- {report.lambda1_bound!r})")
    print(f"mu1:        {report.mu1!r} (+- {report.mu1_bound!r})")
    print(f"unitOthers: {report.unit_others}   sumInterior: {report.sum_interior}")
    print(f"nu_vol:     {value}   certified: {certified}")
    if args.out:
        data = report.to_json()
        data["nuVol"] = str(value) if isinstance(value, Fraction) else value
        data["certified"] = certified
        _write_json(args.out, data)
    return 0


def _cmd_sweep(args) -> int:
    report = sweep.sweep(
        (2, args.n_max),
        (2, args.j_max),
        parallelism=args.threads,
        checkpoint_path=args.checkpoint,
    )
    print(
        f"checked {report.tasks} partition tasks over n in [2,{args.n_max}], "
        f"|J| in [2,{args.j_max}] in {report.seconds:.2f}s"
    )
    if report.counterexamples:
        print(f"COUNTEREXAMPLES FOUND: {len(report.counterexamples)}")
        for record in report.counterexamples:
            print(f"  n={record['n']} partition={record['partition']} "
                  f"signature={record['signature']}")
    else:
        print("all signatures are (|J|-1, 1): no counterexamples")
    if args.report:
        _write_json(args.report, report.to_json())
    return 0


def _parse_size(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)x(\d+)", text)
    if not m:
        raise MovconeError(f"bad --size {text!r}, expected WxH like 640x640")
    return int(m.group(1)), int(m.group(2))


def _cmd_render(args) -> int:
    v = _load(args)
    rep = reflection_rep(v)
    options = render.RenderOptions(size=_parse_size(args.size), layers=args.layers)
    scene = render.render_variety(rep, args.depth, options)
    render.emit_svg(scene, args.out)
    print(f"wrote {args.out}: {len(scene.chambers)} chambers, "
          f"{len(scene.segments)} boundary segments")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="movcone",
        description="Movable cones of Calabi-Yau complete intersections "
        "in products of projective spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="invariants, b-matrix, form, involutions")
    p.add_argument("config")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("reduce", help="descend a divisor class to the nef chamber")
    p.add_argument("config")
    p.add_argument("--class", dest="divisor_class", required=True,
                   help="comma-separated coordinates; integers or p/q")
    p.add_argument("--max-steps", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("chambers", help="enumerate the chamber orbit")
    p.add_argument("config")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_chambers)

    p = sub.add_parser("boundary", help="boundary cones of the movable cone")
    p.add_argument("config")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_boundary)

    p = sub.add_parser("numdim", help="spectral report and numerical dimension")
    p.add_argument("config")
    p.add_argument("--word", required=True, help="comma-separated letters, e.g. 2,3")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_numdim)

    p = sub.add_parser("sweep", help="Lorentzian verification over (n, |J|) ranges")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--j-max", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--checkpoint")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("render", help="SVG slice figure (3-factor varieties)")
    p.add_argument("config")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--size", default="640x640")
    p.add_argument("--layers", choices=["orbit", "boundary", "both"], default="both")
    p.set_defaults(func=_cmd_render)

    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except MovconeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
