"""Command line interface: center, tensor, graded, verify and plot.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .center import (
    GRADED,
    ROZHKOVSKAYA,
    TILDE,
    center_components,
    center_ideal_rank1,
    change_presentation,
    fiber_dimension,
    graded_medium,
)
from .characters import invariant_generators
from .plots import FIGURES, make_series, render_series, series_to_csv
from .roots import EnumerationBoundError, Weight, parse_algebra
from .tensor import linkage_decomposition_sl2, tensor_characters
from .verify import render_report, report, run_suite

COORD_CHOICES = (TILDE, ROZHKOVSKAYA, GRADED, "components")


def _parse_mu(text: str, rank: int) -> Weight:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rank:
        raise ValueError(f"expected {rank} weight coordinates, got {len(parts)}")
    return Weight(tuple(Fraction(int(p)) for p in parts))


def _parse_lambda(text: str, rank: int) -> Weight:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != rank:
        raise ValueError(f"expected {rank} weight coordinates, got {len(parts)}")
    return Weight(tuple(Fraction(p) for p in parts))


def _parse_range(text: str) -> tuple[Fraction, Fraction]:
    lo, _, hi = text.partition(":")
    if not _:
        raise ValueError("range must look like lo:hi")
    return Fraction(lo), Fraction(hi)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _presentation_payload(args) -> str:
    rs = parse_algebra(args.algebra)
    mu = _parse_mu(args.mu, rs.rank)
    coords = args.coords
    if coords == "components":
        basis = invariant_generators(rs)
        comps = center_components(rs, mu, basis)
        fdim = fiber_dimension(rs, mu)
        if args.format == "json":
            payload = {
                "algebra": rs.name,
                "mu": [str(c) for c in mu.coords],
                "fiber_dimension": fdim,
                "components": [
                    {
                        "rep": [str(c) for c in comp.rep.coords],
                        "orbit_size": len(comp.orbit),
                        "stabilizer_order": comp.stabilizer_order,
                    }
                    for comp in comps
                ],
            }
            return json.dumps(payload, indent=2, sort_keys=True) + "\n"
        lines = [f"algebra {rs.name}, mu = ({args.mu}): {len(comps)} component(s)"]
        for comp in comps:
            rep = ",".join(str(c) for c in comp.rep.coords)
            lines.append(
                f"  component [{rep}]: orbit size {len(comp.orbit)},"
                f" stabilizer order {comp.stabilizer_order},"
                f" parametrized by t -> (chi(t), chi(t + ({rep})))"
            )
        lines.append(f"generic fiber dimension: {fdim}")
        return "\n".join(lines) + "\n"

    if rs.name != "A1":
        raise ValueError(
            "closed-form presentations exist in rank one only; "
            "use --coords components for higher rank"
        )
    k = int(mu.coords[0])
    pres = center_ideal_rank1(k)
    if coords in (ROZHKOVSKAYA, GRADED):
        pres = change_presentation(pres, ROZHKOVSKAYA)
    if coords == GRADED:
        pres = graded_medium(pres)
    if args.format == "json":
        return json.dumps(pres.to_jsonable(), indent=2, sort_keys=True) + "\n"
    return pres.to_text() + "\n"


def cmd_center(args) -> int:
    _emit(_presentation_payload(args), args.out)
    return 0


def cmd_tensor(args) -> int:
    rs = parse_algebra(args.algebra)
    mu = _parse_mu(args.mu, rs.rank)
    lam = _parse_lambda(args.lam, rs.rank)
    if rs.name == "A1" and lam.is_integral():
        dec = linkage_decomposition_sl2(int(lam.coords[0]), int(mu.coords[0]))
        if args.format == "json":
            payload = dec.to_jsonable()
            payload["k"] = int(mu.coords[0])
            return _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out) or 0
        if all(b.label for b in dec.blocks):
            terms = " (+) ".join(b.label.replace(":", "") for b in dec.blocks)
        else:
            terms = " (+) ".join(
                "{" + ", ".join(str(w.coords[0]) for w in b.weights) + "}" for b in dec.blocks
            )
        chars = ", ".join(str(b.character.values[0]) for b in dec.blocks)
        text = f"{terms}\ncharacters: {chars}\n"
        return _emit(text, args.out) or 0
    blocks = tensor_characters(rs, lam, mu)
    if args.format == "json":
        payload = {
            "lambda": [str(c) for c in lam.coords],
            "mu": [str(c) for c in mu.coords],
            "blocks": [
                {"character": chi.to_jsonable(), "mult": m} for chi, m in blocks
            ],
        }
        return _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out) or 0
    lines = [
        f"character ({', '.join(str(v) for v in chi.values)}) with multiplicity {m}"
        for chi, m in blocks
    ]
    return _emit("\n".join(lines) + "\n", args.out) or 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.seed)
    data = report(args.suite, args.seed, checks)
    _emit(render_report(data, args.format), args.out)
    return 0 if data["failed"] == 0 else 1


def cmd_plot(args) -> int:
    lo, hi = _parse_range(args.range)
    series = make_series(
        args.figure, lo, hi, args.samples, k=args.mu_level, cutoff=args.cutoff
    )
    text = series_to_csv(series)
    _emit(text, args.out)
    if args.figure == "hc-category":
        sys.stderr.write(
            "note: color_index is the least odd weight whose component contains the point\n"
        )
    if args.out and not args.no_render:
        target = Path(args.out).with_suffix(f".{args.render_format}")
        render_series(series, target)
        sys.stderr.write(f"figure written to {target}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kostantcenter",
        description="Exact computation of the center of the strongly commuting algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--algebra", default="A1", help="simple type, e.g. A1, A2, B2")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")
        p.add_argument("--seed", type=int, default=0)

    p_center = sub.add_parser("center", help="defining ideal or components of the center")
    common(p_center)
    p_center.add_argument("--mu", required=True, help="dominant weight, comma separated integers")
    p_center.add_argument("--coords", choices=COORD_CHOICES, default=TILDE)
    p_center.set_defaults(func=cmd_center)

    p_graded = sub.add_parser("graded", help="graded presentation (center --coords graded)")
    common(p_graded)
    p_graded.add_argument("--mu", required=True)
    p_graded.set_defaults(func=cmd_center, coords=GRADED)

    p_tensor = sub.add_parser("tensor", help="linkage blocks of a Verma tensor product")
    common(p_tensor)
    p_tensor.add_argument("--mu", required=True)
    p_tensor.add_argument("--lambda", dest="lam", required=True, help="highest weight, rationals allowed")
    p_tensor.set_defaults(func=cmd_tensor)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    common(p_verify)
    p_verify.add_argument("--suite", choices=("paper", "properties"), required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_plot = sub.add_parser("plot", help="emit exact plot data as CSV, rendering a figure alongside")
    common(p_plot)
    p_plot.add_argument("--figure", choices=FIGURES, required=True)
    p_plot.add_argument("--range", default="-8:8", help="parameter range lo:hi")
    p_plot.add_argument("--samples", type=int, default=65)
    p_plot.add_argument("--mu", dest="mu_level", type=int, default=5, help="rank-one twisting weight")
    p_plot.add_argument("--cutoff", type=int, default=7, help="odd weight cutoff for hc-category")
    p_plot.add_argument("--no-render", action="store_true", help="skip the rendered figure")
    p_plot.add_argument("--render-format", choices=("svg", "png"), default="svg")
    p_plot.set_defaults(func=cmd_plot)
    return parser


def _normalize_argv(argv: list[str]) -> list[str]:
    # let values like -8:8 or -1,2 follow their flag without being read as options
    glued = []
    it = iter(argv)
    for a in it:
        if a in ("--range", "--lambda", "--mu"):
            value = next(it, None)
            glued.append(a if value is None else f"{a}={value}")
        else:
            glued.append(a)
    return glued


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_normalize_argv(list(argv)))
    try:
        return args.func(args)
    except EnumerationBoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def entrypoint() -> None:
    sys.exit(main())
