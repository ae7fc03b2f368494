"""Command-line front end.

Every subcommand prints JSON except polygon-svg, which prints an SVG
document. Exit status: 0 on success, 1 when a verification finds violations,
2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .chopin import chopin_check
from .dft import dft, recover_generators_via_dft, seminorm
from .errors import GenScaleError, HypothesisViolated, TrivialScale
from .generation import classify, enumerate_generators
from .intervals import interval_vector
from .realgen import (
    RationalPoint,
    alpha_stability_interval,
    format_rational,
    j_sequence,
    j_set,
    p_generators_finite,
    p_infinite_generators,
    p_set,
    parse_rational,
)
from .scale import Scale, format_scale, parse_scale
from .svg import render_polygon_svg
from .verify import (
    DEFAULT_CMAX,
    verify_chopin,
    verify_classification,
    verify_dft_maximality,
    verify_totient_theorem,
)


class UsageError(GenScaleError):
    pass


def _real(x: float, digits: int = 12) -> float:
    # fixed rounding keeps output byte-stable; "+ 0.0" turns -0.0 into 0.0
    return round(x, digits) + 0.0


def _nonempty(text: str) -> Scale:
    s = parse_scale(text)
    if len(s) == 0:
        raise UsageError("the empty scale is not analysed")
    return s


def generators_json(s: Scale) -> dict:
    rep = enumerate_generators(s)
    return {
        "steps": list(rep.steps),
        "count": rep.count,
        "starts": {str(f): list(rep.starts(f)) for f in rep.steps},
    }


def classify_json(s: Scale) -> dict:
    cl = classify(s)
    return {"kind": cl.kind.value, "predicted": cl.predicted_count, "m": cl.m}


def dft_json(s: Scale, tolerance: float) -> dict:
    spec = dft(s)
    out = {
        "c": s.c,
        "coeffs": [[_real(z.real), _real(z.imag)] for z in spec.coeffs],
        "magnitudes": [_real(m) for m in spec.magnitudes],
        "seminorm": None,
    }
    if s.c >= 2:
        value, argmax = seminorm(s, tolerance)
        out["seminorm"] = {"value": _real(value), "argmax": sorted(argmax)}
    return out


def analyze_json(s: Scale, tolerance: float = 1e-9) -> dict:
    spectrum = dft_json(s, tolerance)
    try:
        recovered = sorted(recover_generators_via_dft(s, tolerance))
    except HypothesisViolated:
        recovered = None
    try:
        chopin = chopin_check(s).to_dict()
    except TrivialScale:
        chopin = None
    return {
        "scale": format_scale(s),
        "c": s.c,
        "d": len(s),
        "classification": classify_json(s),
        "generators": generators_json(s),
        "interval_vector": interval_vector(s).to_list(),
        "magnitudes": spectrum["magnitudes"],
        "seminorm": spectrum["seminorm"],
        "dft_recovery": recovered,
        "chopin": chopin,
    }


def _cmd_analyze(args) -> dict:
    return analyze_json(_nonempty(args.scale), args.tolerance)


def _cmd_generators(args) -> dict:
    return generators_json(_nonempty(args.scale))


def _cmd_classify(args) -> dict:
    return classify_json(_nonempty(args.scale))


def _cmd_ivec(args) -> dict:
    s = parse_scale(args.scale)
    return {"c": s.c, "vector": interval_vector(s).to_list()}


def _cmd_dft(args) -> dict:
    return dft_json(parse_scale(args.scale), args.tolerance)


def _cmd_complement(args) -> dict:
    return chopin_check(_nonempty(args.scale)).to_dict()


def _cmd_jset(args) -> dict:
    alpha = parse_rational(args.alpha)
    out = {
        "alpha": format_rational(alpha),
        "c": args.c,
        "d": args.d,
        "sequence": list(j_sequence(alpha, args.c, args.d)),
        "scale": format_scale(j_set(alpha, args.c, args.d)),
        "stability": None,
    }
    if args.d >= 2:
        lo, hi = alpha_stability_interval(alpha, args.c, args.d)
        out["stability"] = [format_rational(lo), format_rational(hi)]
    return out


def _cmd_pset(args) -> dict:
    x = RationalPoint(parse_rational(args.x))
    ps = p_set(x, args.d)
    try:
        finite = sorted(p_generators_finite(ps))
        finite = [str(p) for p in finite]
    except HypothesisViolated:
        finite = None
    return {
        "x": str(x),
        "d": args.d,
        "points": [str(p) for p in ps.points],
        "finite_generators": finite,
        "infinite_generators": [str(p) for p in sorted(p_infinite_generators(x))],
    }


def _cmd_verify(args, out) -> int:
    if args.theorem == "dft":
        report = verify_dft_maximality(args.c, args.d, args.tolerance)
    else:
        fn = {
            "totient": verify_totient_theorem,
            "classification": verify_classification,
            "chopin": verify_chopin,
        }[args.theorem]
        report = fn(args.cmax, workers=args.workers)
    out.write(report.to_jsonl(rows=not args.summary_only))
    print(f"violations: {len(report.violations)}", file=sys.stderr)
    return 0 if report.ok else 1


def _cmd_polygon_svg(args, out) -> int:
    s = parse_scale(args.scale)
    out.write(render_polygon_svg(s, args.generator))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-pretty", action="store_true", default=argparse.SUPPRESS,
                        help="indent JSON output")

    p = argparse.ArgumentParser(prog="genscale", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--json-pretty", action="store_true", help="indent JSON output")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def scale_cmd(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help, parents=[common])
        sp.add_argument("scale", help='scale as "c:p1,p2,..." e.g. "12:0,2,4,5,7,9,11"')
        return sp

    sp = scale_cmd("analyze", "combined JSON report for a scale")
    sp.add_argument("--tolerance", type=float, default=1e-9)
    scale_cmd("generators", "all generator steps with their starting points")
    scale_cmd("classify", "kind of generated scale and predicted generator count")
    scale_cmd("ivec", "oriented interval vector")
    sp = scale_cmd("dft", "discrete Fourier transform and coprime seminorm")
    sp.add_argument("--tolerance", type=float, default=1e-9, help="argmax tie tolerance")
    scale_cmd("complement", "complement check: shared generators and embedding")

    sp = sub.add_parser("jset", help="J_alpha set floor(k*alpha) mod c", parents=[common])
    sp.add_argument("alpha", help='exact rational "p/q"')
    sp.add_argument("c", type=int)
    sp.add_argument("d", type=int)

    sp = sub.add_parser("pset", help="P_x set {k*x mod 1} and its generators", parents=[common])
    sp.add_argument("x", help='exact rational "p/q"')
    sp.add_argument("d", type=int)

    sp = sub.add_parser("verify", help="exhaustive theorem checks (JSON lines)", parents=[common])
    sp.add_argument("theorem", choices=["totient", "classification", "chopin", "dft"])
    sp.add_argument("--cmax", type=int, default=DEFAULT_CMAX)
    sp.add_argument("--c", type=int, default=12, help="modulus for the dft sweep")
    sp.add_argument("--d", type=int, default=7, help="scale size for the dft sweep")
    sp.add_argument("--tolerance", type=float, default=1e-9)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--summary-only", action="store_true", help="print only the trailer line")

    sp = scale_cmd("polygon-svg", "draw the scale on a c-gon as SVG")
    sp.add_argument("--generator", type=int, default=None,
                    help="draw the generation path for this step")
    return p


_JSON_COMMANDS = {
    "analyze": _cmd_analyze,
    "generators": _cmd_generators,
    "classify": _cmd_classify,
    "ivec": _cmd_ivec,
    "dft": _cmd_dft,
    "complement": _cmd_complement,
    "jset": _cmd_jset,
    "pset": _cmd_pset,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = sys.stdout
    try:
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "polygon-svg":
            return _cmd_polygon_svg(args, out)
        result = _JSON_COMMANDS[args.command](args)
    except (GenScaleError, ValueError) as exc:
        print(f"genscale: error: {exc}", file=sys.stderr)
        return 2
    indent = 2 if getattr(args, "json_pretty", False) else None
    out.write(json.dumps(result, indent=indent) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
