"""Oracle-vs-closed-form check suite

Every check compares a closed formula against the generic engine of
liecurve.core.lie_algebra (or against the plane search) and yields one
CheckResult carrying the largest deviation seen. A structural failure (wrong
multiplicities, a flag with the wrong value) is reported as an infinite
deviation.
"""

import logging
import math
from typing import Iterable, List, Optional

import numpy as np

from liecurve.core import hypersurface as hs
from liecurve.core.chn_model import (
    build_chn,
    connection_closed,
    curvature_closed,
    sectional_closed,
)
from liecurve.core.lie_algebra import (
    derived_algebra,
    levi_civita,
    ricci_matrix,
    riemann,
    scalar_curvature,
    sectional,
)
from liecurve.core.plane_search import random_plane
from liecurve.exceptions import InvalidDimension
from liecurve.models.algebra import SpectrumReport
from liecurve.models.geometry import AmbientModel, HypersurfaceFrame
from liecurve.models.reports import CheckResult
from liecurve.models.search import SearchConfig

logger = logging.getLogger(__name__)

DEFAULT_N_LIST = (2, 3, 4)
DEFAULT_THETA_SAMPLES = 5
DEFAULT_TOL = 1e-9
DEFAULT_SEARCH_TOL = 1e-6
DEFAULT_SAMPLES = 1000
DEFAULT_PLANES = 500
COMPARISON_GRID = 101
EXTREMA_GRID_N2 = 9
# closed-form matrix identities hold to rounding
STRICT_TOL = 1e-12
FAILED = math.inf


def theta_grid(samples: int) -> List[float]:
    """samples uniform points in [0, pi/2], both endpoints exact"""
    if samples < 2:
        raise ValueError(f"need at least 2 theta samples, got {samples}")
    return [float(t) for t in np.linspace(0.0, hs.HALF_PI, samples)]


def _is_endpoint(theta: float, endpoint: float) -> bool:
    return abs(theta - endpoint) <= hs.THETA_SNAP


def _spectrum_deviation(numeric: np.ndarray, closed: SpectrumReport) -> float:
    expected = np.sort(np.asarray(closed.expanded()))
    actual = np.sort(np.asarray(numeric))
    if expected.shape != actual.shape:
        return FAILED
    return float(np.max(np.abs(expected - actual)))


# -- ambient model -----------------------------------------------------------

def check_ambient(model: AmbientModel, rng: np.random.Generator, samples: int, tol: float) -> List[CheckResult]:
    n, m = model.n, model.dim
    conn_dev = curv_dev = sect_dev = 0.0
    for _ in range(samples):
        x, y, z = rng.standard_normal((3, m))
        conn_dev = max(conn_dev, float(np.max(np.abs(levi_civita(model.alg, x, y) - connection_closed(model, x, y)))))
        curv_dev = max(curv_dev, float(np.max(np.abs(riemann(model.alg, x, y, z) - curvature_closed(model, x, y, z)))))

        plane = random_plane(m, rng)
        oracle = sectional(model.alg, plane)
        sect_dev = max(sect_dev, abs(oracle - sectional_closed(model, plane)))
        if not -1.0 - tol <= oracle <= -0.25 + tol:
            sect_dev = FAILED

    ric = ricci_matrix(model.alg)
    einstein_dev = float(np.max(np.abs(ric + (n + 1) / 2 * np.eye(m))))

    derived = derived_algebra(model.alg)
    # [s, s] = v + z: dimension 2n - 1 and no A0 component
    a0 = model.index_map['A0']
    derived_dev = float(np.max(np.abs(derived[:, a0]))) if derived.shape[0] == m - 1 else FAILED

    return [
        CheckResult('ambient_connection', n, None, conn_dev, tol),
        CheckResult('ambient_curvature', n, None, curv_dev, tol),
        CheckResult('ambient_sectional', n, None, sect_dev, tol),
        CheckResult('einstein', n, None, einstein_dev, tol),
        CheckResult('derived_algebra', n, None, derived_dev, tol),
    ]


# -- hypersurface ------------------------------------------------------------

def check_extrinsic(frame: HypersurfaceFrame, tol: float, cluster_tol: float,
                    hopf_tol: float = hs.HOPF_TOL) -> List[CheckResult]:
    n, theta = frame.n, frame.theta
    strict = min(tol, STRICT_TOL)
    closed = hs.shape_operator_closed(frame)
    basis = frame.tangent_basis
    oracle = np.array([[hs.second_fundamental_form_oracle(frame, basis[b], basis[a])
                        for b in range(frame.dim)] for a in range(frame.dim)])

    numeric = hs.principal_curvatures(frame, cluster_tol)
    expected = hs.principal_curvatures_closed(frame)
    curvature_dev = _spectrum_deviation(np.linalg.eigvalsh(hs.shape_operator(frame)), expected)
    if numeric.multiplicities != expected.multiplicities:
        curvature_dev = FAILED

    flags = hs.classify_extrinsic(frame, hopf_tol)
    at_zero, at_horosphere = _is_endpoint(theta, 0.0), _is_endpoint(theta, hs.HALF_PI)
    flags_ok = (flags.minimal == at_zero and flags.austere == at_zero and flags.hopf == at_horosphere)

    return [
        CheckResult('shape_operator', n, theta, float(np.max(np.abs(hs.shape_operator(frame) - closed))), strict),
        CheckResult('shape_operator_oracle', n, theta, float(np.max(np.abs(oracle - closed))), tol),
        CheckResult('principal_curvatures', n, theta, curvature_dev, strict),
        CheckResult('mean_curvature', n, theta, abs(hs.mean_curvature(frame) - hs.mean_curvature_closed(frame)), strict),
        CheckResult('flags', n, theta, 0.0 if flags_ok else FAILED, 0.0),
        CheckResult('hopf_defect', n, theta, abs(hs.hopf_defect(frame) - 0.5 * frame.cos_theta ** 3), strict),
    ]


def check_intrinsic(frame: HypersurfaceFrame, rng: np.random.Generator, samples: int, tol: float,
                    cluster_tol: float) -> List[CheckResult]:
    n, theta = frame.n, frame.theta
    strict = min(tol, STRICT_TOL)
    oracle = hs.intrinsic_ricci_oracle(frame)
    ricci_dev = float(np.max(np.abs(oracle - hs.intrinsic_ricci(frame))))

    expected = hs.principal_ricci_closed(frame)
    principal_dev = _spectrum_deviation(np.linalg.eigvalsh(oracle), expected)
    if hs.principal_ricci(frame, cluster_tol).multiplicities != expected.multiplicities:
        principal_dev = FAILED
    a1, a2, a3 = hs.principal_ricci_values(n, theta)
    if frame.cos_theta == 0.0:
        ordered = abs(a1 - a2) <= strict and a2 < a3
    else:
        ordered = a1 < a2 < a3
    if not ordered:
        principal_dev = FAILED

    scalar = hs.intrinsic_scalar(frame)
    scalar_dev = max(abs(float(np.trace(oracle)) - scalar), abs(scalar_curvature(frame.sub) - scalar))
    if scalar >= 0:
        scalar_dev = FAILED

    sect_dev = 0.0
    for _ in range(samples):
        plane = frame.plane_to_ambient(random_plane(frame.dim, rng))
        closed = hs.intrinsic_sectional(frame, plane)
        sect_dev = max(sect_dev,
                       abs(closed - hs.oracle_sectional(frame, plane)),
                       abs(closed - hs.gauss_sectional(frame, plane)))
        x, y, z, w = (frame.to_ambient(v) for v in rng.standard_normal((4, frame.dim)))
        tx, ty, tz, tw = (frame.to_tangent(v) for v in (x, y, z, w))
        intrinsic = float(riemann(frame.sub, tx, ty, tz) @ tw)
        sect_dev = max(sect_dev, abs(intrinsic - hs.gauss_curvature(frame, x, y, z, w)))

    argmax, argmin = hs.extremal_planes(frame)
    sect_dev = max(sect_dev, abs(hs.oracle_sectional(frame, argmax) - hs.max_sectional_value(n, theta)))
    if argmin is not None:
        sect_dev = max(sect_dev, abs(hs.oracle_sectional(frame, argmin) - hs.min_sectional_value(n, theta)))

    return [
        CheckResult('ricci', n, theta, ricci_dev, tol),
        CheckResult('principal_ricci', n, theta, principal_dev, tol),
        CheckResult('scalar', n, theta, scalar_dev, strict),
        CheckResult('sectional', n, theta, sect_dev, tol),
    ]


def check_extrema(frame: HypersurfaceFrame, cfg: SearchConfig, rng: np.random.Generator, samples: int,
                  tol: float, search_tol: float, workers: int = 1) -> List[CheckResult]:
    """Plane search against the closed-form extrema, plus a sampled range check"""
    n, theta = frame.n, frame.theta
    report = hs.sectional_extrema(frame, cfg, workers)
    results = [CheckResult('extrema_max', n, theta, abs(report.max_search - report.max_closed), search_tol)]
    if report.min_closed is not None:
        results.append(CheckResult('extrema_min', n, theta, abs(report.min_search - report.min_closed), search_tol))

    objective = hs.sectional_objective(frame)
    values = np.array([objective(random_plane(frame.dim, rng)) for _ in range(samples)])
    bound_dev = max(
        0.0,
        float(values.max()) - report.max_closed,
        float(values.max()) - report.max_search,
        report.min_search - float(values.min()),
        report.max_search - report.max_closed,
    )
    results.append(CheckResult('extrema_bound', n, theta, bound_dev, tol))
    return results


def check_comparison(theta: float, tol: float) -> CheckResult:
    """(C - D)/8 is the n > 2 minus n = 2 gap, non-negative and zero only at the endpoints"""
    report = hs.compare_extrema(theta)
    gap = hs.max_sectional_value(3, theta) - hs.max_sectional_value(2, theta)
    _, c, s = hs.normalize_theta(theta)
    identity = (3 * c * c - 4 * s * s) ** 2 + 64 * s * s * c * c
    deviation = max(abs(report.max_gap - gap), abs(identity - report.D ** 2))
    endpoint = _is_endpoint(report.theta, 0.0) or _is_endpoint(report.theta, hs.HALF_PI)
    # interior gaps decay like cos^6 near pi/2; only their sign is tested
    if report.max_gap < -STRICT_TOL or (abs(report.max_gap) > tol if endpoint else report.max_gap <= 0.0):
        deviation = FAILED
    return CheckResult('comparison', None, report.theta, deviation, tol)


def check_degeneration(frame: HypersurfaceFrame) -> CheckResult:
    info = hs.degeneration(frame)
    expected = _is_endpoint(frame.theta, hs.HALF_PI)
    ok = info['nilpotent'] == expected and info['solvable']
    return CheckResult('degeneration', frame.n, frame.theta, 0.0 if ok else FAILED, 0.0)


def run_verification(n_list: Iterable[int] = DEFAULT_N_LIST, theta_samples: int = DEFAULT_THETA_SAMPLES,
                     tol: float = DEFAULT_TOL, search_tol: float = DEFAULT_SEARCH_TOL,
                     cfg: Optional[SearchConfig] = None, samples: int = DEFAULT_SAMPLES,
                     cluster_tol: float = 1e-6, workers: int = 1, planes: int = DEFAULT_PLANES,
                     comparison_samples: int = COMPARISON_GRID) -> List[CheckResult]:
    """Run the full suite; random sampling is seeded from cfg.seed

    samples counts random vectors per ambient check, planes the random tangent
    planes per (n, theta) for the intrinsic sectional checks.
    """
    cfg = cfg or SearchConfig()
    n_list = list(n_list)
    for n in n_list:
        if int(n) != n or n < 2:
            raise InvalidDimension(f"complex dimension must be an integer >= 2, got {n}")

    rng = np.random.default_rng(cfg.seed)
    grid = theta_grid(theta_samples)
    results: List[CheckResult] = []

    for n in n_list:
        logger.info("Verifying CH^%d", n)
        results.extend(check_ambient(build_chn(n), rng, samples, tol))
        extrema_grid = grid
        if n == 2:
            extrema_grid = sorted(set(grid) | set(theta_grid(EXTREMA_GRID_N2)))
        for theta in sorted(set(grid) | set(extrema_grid)):
            frame = hs.build_hypersurface(n, theta)
            if theta in grid:
                results.extend(check_extrinsic(frame, tol, cluster_tol))
                results.extend(check_intrinsic(frame, rng, planes, tol, cluster_tol))
                results.append(check_degeneration(frame))
            if theta in extrema_grid:
                results.extend(check_extrema(frame, cfg, rng, max(1, samples // 10), tol, search_tol, workers))
            logger.debug("n=%d theta=%.17g checked", n, theta)

    results.extend(check_comparison(theta, tol) for theta in theta_grid(comparison_samples))

    failed = [r for r in results if not r.passed]
    logger.info("Verification finished: %d checks, %d failed", len(results), len(failed))
    return results
