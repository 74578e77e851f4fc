"""Rendering of curvature reports, verification summaries and sweep CSVs"""

import json
import logging
from collections import OrderedDict
from typing import Dict, Iterable, List

import pandas as pd

from liecurve.models.reports import CheckResult, SweepRow

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    'theta', 'lambda1', 'lambda2', 'lambda3', 'mean',
    'alpha1', 'alpha2', 'alpha3', 'scalar', 'k_max', 'k_min', 'C', 'D',
]
# 17 significant digits round-trip every double
FLOAT_FORMAT = '%.17g'


def render_json(report: Dict) -> str:
    return json.dumps(report, indent=2)


def _format_spectrum(clusters) -> str:
    return ', '.join(f"{c['value']:.12g} (x{c['multiplicity']})" for c in clusters)


def _format_value(value) -> str:
    if value is None:
        return '-'
    return f"{value:.12g}"


def render_text(report: Dict) -> str:
    """Human-readable table of a curvature report"""
    sectional = report['sectional']
    flags = report['flags']
    intrinsic = report.get('intrinsic_flags', {})
    lines = [
        f"Lie hypersurface S(theta) in CH^{report['n']}, theta = {report['theta']:.12g}",
        "",
        "Extrinsic",
        f"  principal curvatures : {_format_spectrum(report['principal_curvatures'])}",
        f"  mean curvature       : {_format_value(report['mean_curvature'])}",
        f"  minimal              : {flags['minimal']}",
        f"  austere              : {flags['austere']}",
        f"  hopf                 : {flags['hopf']} (defect {flags['hopf_defect']:.3e})",
        "",
        "Intrinsic",
        f"  principal Ricci      : {_format_spectrum(report['principal_ricci'])}",
        f"  scalar curvature     : {_format_value(report['scalar'])}",
        f"  max sectional        : {_format_value(sectional['max_closed'])} closed, "
        f"{_format_value(sectional['max_search'])} search",
        f"  min sectional        : {_format_value(sectional['min_closed'])} closed, "
        f"{_format_value(sectional['min_search'])} search ({sectional['min_method']})",
        f"  C, D                 : {_format_value(sectional['C'])}, {_format_value(sectional['D'])}",
    ]
    for key, value in intrinsic.items():
        lines.append(f"  {key.replace('_', ' '):<21}: {value}")
    degeneration = report.get('degeneration')
    if degeneration:
        lines += [
            "",
            "Algebra",
            f"  lower central series : {degeneration['lower_central_series']}",
            f"  derived series       : {degeneration['derived_series']}",
            f"  nilpotent            : {degeneration['nilpotent']}",
        ]
    return '\n'.join(lines)


def summarize_checks(results: Iterable[CheckResult]) -> Dict[str, Dict]:
    """Largest deviation per check name, in first-seen order"""
    summary: Dict[str, Dict] = OrderedDict()
    for result in results:
        entry = summary.setdefault(result.check, {'max_deviation': 0.0, 'tolerance': result.tolerance,
                                                  'count': 0, 'failed': 0})
        entry['max_deviation'] = max(entry['max_deviation'], result.deviation)
        entry['tolerance'] = min(entry['tolerance'], result.tolerance)
        entry['count'] += 1
        entry['failed'] += 0 if result.passed else 1
    return summary


def render_verification(results: List[CheckResult]) -> str:
    lines = [f"{'check':<22} {'max deviation':>14} {'tolerance':>10} {'status':>7}"]
    for name, entry in summarize_checks(results).items():
        status = 'ok' if entry['failed'] == 0 else f"FAIL {entry['failed']}"
        lines.append(f"{name:<22} {entry['max_deviation']:>14.3e} {entry['tolerance']:>10.1e} {status:>7}")

    failures = [r for r in results if not r.passed]
    if failures:
        lines += ["", "Failures (n, theta, check, deviation):"]
        for r in failures:
            n = '-' if r.n is None else r.n
            theta = '-' if r.theta is None else f"{r.theta:.12g}"
            lines.append(f"  {n}, {theta}, {r.check}, {r.deviation:.3e}")
    lines += ["", f"{len(results) - len(failures)}/{len(results)} checks passed"]
    return '\n'.join(lines)


def sweep_frame(rows: Iterable[SweepRow]) -> pd.DataFrame:
    return pd.DataFrame([row.to_record() for row in rows], columns=SWEEP_COLUMNS)


def write_sweep_csv(rows: Iterable[SweepRow], path: str) -> pd.DataFrame:
    """Write the sweep table with fixed 17-digit formatting and LF line endings"""
    df = sweep_frame(rows)
    df.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    logger.info("Wrote %d sweep rows to %s", len(df), path)
    return df
