"""Command-line front end: report, sweep, verify, algebra, export

Exit codes: 0 success, 1 verification failure, 2 argument error, 3 I/O error.
"""

import argparse
import json
import logging
import math
import sys
from typing import List, Optional

from liecurve.config.manager import ConfigManager
from liecurve.core import hypersurface as hs
from liecurve.core.chn_model import build_chn
from liecurve.core.lie_algebra import ricci_matrix, scalar_curvature, spectrum, validate
from liecurve.core.verification import (
    DEFAULT_N_LIST,
    DEFAULT_PLANES,
    DEFAULT_SAMPLES,
    DEFAULT_SEARCH_TOL,
    DEFAULT_THETA_SAMPLES,
    DEFAULT_TOL,
    run_verification,
)
from liecurve.exceptions import LieCurveError
from liecurve.io.algebra_json import export_algebra, export_hypersurface, load_algebra
from liecurve.io.reports import render_json, render_text, render_verification, summarize_checks, write_sweep_csv
from liecurve.models.enums import OutputFormat
from liecurve.utils.logging import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

DEFAULT_SWEEP_SAMPLES = 101
DEG_PREFIX = 'deg:'


def parse_theta(value: str) -> float:
    """Radians, or degrees with a 'deg:' prefix"""
    text = value.strip()
    try:
        if text.lower().startswith(DEG_PREFIX):
            return math.radians(float(text[len(DEG_PREFIX):]))
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid theta '{value}': expected radians or deg:<degrees>") from None


def _seed(value: str) -> int:
    try:
        seed = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed '{value}'") from None
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def _search_config(args):
    config = ConfigManager()
    cfg = config.get_search_config()
    return cfg.with_seed(args.seed) if args.seed is not None else cfg


def _workers(args) -> int:
    return args.workers if args.workers is not None else ConfigManager().get_workers()


def _emit(text: str, out: Optional[str] = None):
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text + '\n')
        logger.info("Wrote %s", out)
    else:
        print(text)


def cmd_report(args) -> int:
    frame = hs.build_hypersurface(args.n, args.theta)
    config = ConfigManager()
    report = hs.curvature_report(
        frame,
        cfg=_search_config(args),
        cluster_tol=args.cluster_tol,
        hopf_tol=config.get_hopf_tol(),
        workers=_workers(args),
    )
    if OutputFormat(args.format) is OutputFormat.TEXT:
        print(render_text(report))
    else:
        print(render_json(report))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.samples < 2:
        raise ValueError(f"--samples must be at least 2, got {args.samples}")
    rows = hs.sweep(args.n, args.samples, _search_config(args), workers=_workers(args))
    write_sweep_csv(rows, args.out)
    print(f"Wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_verification(
        n_list=args.n_list,
        theta_samples=args.theta_samples,
        tol=args.tol,
        search_tol=args.search_tol,
        cfg=_search_config(args),
        samples=args.samples,
        cluster_tol=ConfigManager().get_cluster_tol(),
        workers=_workers(args),
        planes=args.planes,
    )
    if OutputFormat(args.format) is OutputFormat.JSON:
        print(render_json({
            'summary': summarize_checks(results),
            'failures': [r.to_dict() for r in results if not r.passed],
        }))
    else:
        print(render_verification(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def cmd_algebra(args) -> int:
    """Validate an algebra document and print its Ricci spectrum and scalar curvature"""
    alg = load_algebra(args.file)
    diagnostics = validate(alg)
    cluster_tol = args.cluster_tol if args.cluster_tol is not None else ConfigManager().get_cluster_tol()

    payload = {
        'dim': alg.dim,
        'labels': list(alg.labels),
        'valid': not diagnostics,
        'diagnostics': [str(d) for d in diagnostics],
    }
    if not diagnostics:
        payload['ricci_spectrum'] = spectrum(ricci_matrix(alg), cluster_tol).to_dict()
        payload['scalar'] = scalar_curvature(alg)

    if OutputFormat(args.format) is OutputFormat.TEXT:
        lines = [f"{alg.dim}-dimensional algebra ({', '.join(alg.labels)})"]
        if diagnostics:
            lines += ["invalid:"] + [f"  {d}" for d in payload['diagnostics']]
        else:
            lines.append("Ricci spectrum: " + ', '.join(
                f"{c['value']:.12g} (x{c['multiplicity']})" for c in payload['ricci_spectrum']))
            lines.append(f"scalar curvature: {payload['scalar']:.12g}")
        print('\n'.join(lines))
    else:
        print(render_json(payload))
    return EXIT_FAILED if diagnostics else EXIT_OK


def cmd_export(args) -> int:
    if args.theta is None:
        document = export_algebra(build_chn(args.n))
    else:
        document = export_hypersurface(hs.build_hypersurface(args.n, args.theta))
    _emit(json.dumps(document, indent=2), args.out)
    return EXIT_OK


def _add_search_flags(parser):
    parser.add_argument("--seed", type=_seed, default=None,
                        help="Plane search seed (default: LIECURVE_SEED or settings)")
    parser.add_argument("--workers", type=int, default=None, help="Worker threads")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liecurve",
        description="Curvature of Lie hypersurfaces in the complex hyperbolic space",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    sub = parser.add_subparsers(dest="command", required=True)
    formats = [f.value for f in OutputFormat]

    report = sub.add_parser("report", help="Single-point curvature report")
    report.add_argument("--n", type=int, required=True, help="Complex dimension, at least 2")
    report.add_argument("--theta", type=parse_theta, required=True, help="Radians or deg:<degrees>")
    report.add_argument("--format", choices=formats, default=OutputFormat.JSON.value)
    report.add_argument("--cluster-tol", type=float, default=None,
                        help="Cluster eigenvalues numerically instead of the exact split")
    _add_search_flags(report)
    report.set_defaults(handler=cmd_report)

    sweep = sub.add_parser("sweep", help="Theta sweep to CSV")
    sweep.add_argument("--n", type=int, required=True)
    sweep.add_argument("--samples", type=int, default=DEFAULT_SWEEP_SAMPLES)
    sweep.add_argument("--out", required=True, help="CSV output path")
    _add_search_flags(sweep)
    sweep.set_defaults(handler=cmd_sweep)

    verify = sub.add_parser("verify", help="Run the oracle-vs-closed-form suite")
    verify.add_argument("--n-list", type=int, nargs="+", default=list(DEFAULT_N_LIST))
    verify.add_argument("--theta-samples", type=int, default=DEFAULT_THETA_SAMPLES)
    verify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    verify.add_argument("--search-tol", type=float, default=DEFAULT_SEARCH_TOL)
    verify.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                        help="Random vectors per ambient check")
    verify.add_argument("--planes", type=int, default=DEFAULT_PLANES,
                        help="Random tangent planes per (n, theta) for the sectional checks")
    verify.add_argument("--format", choices=formats, default=OutputFormat.TEXT.value)
    _add_search_flags(verify)
    verify.set_defaults(handler=cmd_verify)

    algebra = sub.add_parser("algebra", help="Inspect an algebra JSON document")
    algebra.add_argument("--file", required=True)
    algebra.add_argument("--format", choices=formats, default=OutputFormat.JSON.value)
    algebra.add_argument("--cluster-tol", type=float, default=None)
    algebra.set_defaults(handler=cmd_algebra)

    export = sub.add_parser("export", help="Write CH^n or s(theta) as an algebra document")
    export.add_argument("--n", type=int, required=True)
    export.add_argument("--theta", type=parse_theta, default=None)
    export.add_argument("--out", default=None, help="Output path (default: stdout)")
    export.set_defaults(handler=cmd_export)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.log_level)
    try:
        return args.handler(args)
    except (LieCurveError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
