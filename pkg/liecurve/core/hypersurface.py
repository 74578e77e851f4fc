"""Lie hypersurfaces S(theta) of CH^n: extrinsic and intrinsic curvature

s(theta) is the orthogonal complement of the unit normal
xi = cos(theta) X1 + sin(theta) A0 in the solvable model, with the orthonormal
tangent frame (T, Y1, X2, Y2, ..., X_{n-1}, Y_{n-1}, Z0) where
T = cos(theta) A0 - sin(theta) X1. theta runs over [0, pi/2]: theta = 0 is the
ruled minimal hypersurface, theta = pi/2 the horosphere.

Every quantity has a closed-form path (the *_closed functions and the plain
formula functions) and an oracle path through liecurve.core.lie_algebra.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from liecurve.core.chn_model import build_chn
from liecurve.core.lie_algebra import (
    PLANE_TOL,
    RANK_TOL,
    derived_series,
    levi_civita,
    lower_central_series,
    ricci_matrix,
    riemann,
    sectional,
    spectrum,
)
from liecurve.core.plane_search import search_extrema
from liecurve.exceptions import InvalidTheta, NotSubalgebra, NotTangent
from liecurve.models.algebra import MetricLieAlgebra, Plane, SpectrumReport, Vector
from liecurve.models.enums import ExtremumMethod
from liecurve.models.geometry import HypersurfaceFrame
from liecurve.models.reports import ComparisonReport, ExtremaReport, ExtrinsicFlags, IntrinsicFlags, SweepRow
from liecurve.models.search import SearchConfig

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2
# theta within this distance of an endpoint is treated as the endpoint itself
THETA_SNAP = 1e-15
TANGENT_TOL = 1e-8
CLOSURE_TOL = 1e-12
HOPF_TOL = 1e-9
EINSTEIN_TOL = 1e-9


def normalize_theta(theta: float) -> Tuple[float, float, float]:
    """Validate theta and return (theta, cos(theta), sin(theta)), exact at the endpoints"""
    theta = float(theta)
    if not math.isfinite(theta) or theta < -THETA_SNAP or theta > HALF_PI + THETA_SNAP:
        raise InvalidTheta(f"theta must lie in [0, pi/2], got {theta!r}")
    if abs(theta) <= THETA_SNAP:
        return 0.0, 1.0, 0.0
    if abs(theta - HALF_PI) <= THETA_SNAP:
        return HALF_PI, 0.0, 1.0
    return theta, math.cos(theta), math.sin(theta)


def tangent_labels(n: int) -> Tuple[str, ...]:
    labels = ['T', 'Y1']
    for i in range(2, n):
        labels += [f'X{i}', f'Y{i}']
    labels.append('Z0')
    return tuple(labels)


def build_hypersurface(n: int, theta: float) -> HypersurfaceFrame:
    """Construct s(theta) inside the solvable model of CH^n"""
    ambient = build_chn(n)
    theta, c, s = normalize_theta(theta)
    e = ambient.e

    xi = c * e('X1') + s * e('A0')
    T = c * e('A0') - s * e('X1')
    labels = tangent_labels(ambient.n)
    rows = [T] + [e(label) for label in labels[1:]]
    basis = np.vstack(rows)
    basis.setflags(write=False)

    brackets = np.einsum('ijk,ai,bj->abk', ambient.alg.structure, basis, basis)
    leak = float(np.max(np.abs(brackets @ xi)))
    if leak > CLOSURE_TOL:
        raise NotSubalgebra(f"s(theta) is not closed under the bracket (normal leak {leak:.3e})")
    sub = MetricLieAlgebra(brackets @ basis.T, labels)

    logger.debug("Built s(theta) for n=%d, theta=%.17g (dim %d)", ambient.n, theta, sub.dim)
    return HypersurfaceFrame(ambient, theta, c, s, xi, T, basis, sub)


def _require_tangent(frame: HypersurfaceFrame, v) -> Vector:
    v = frame.ambient.alg.check_vector(v)
    normal = frame.normal_component(v)
    if abs(normal) > TANGENT_TOL:
        raise NotTangent(f"vector has normal component {normal:.3e}")
    return v


def _require_tangent_plane(frame: HypersurfaceFrame, plane: Plane) -> Plane:
    plane.require_orthonormal(PLANE_TOL)
    _require_tangent(frame, plane.x)
    _require_tangent(frame, plane.y)
    return plane


def tangent_coefficients(frame: HypersurfaceFrame, x) -> Tuple[float, float, Vector, float]:
    """Split a tangent vector as a1 T + a2 Y1 + V + a3 Z0 with V in v0"""
    x = _require_tangent(frame, x)
    a1 = float(frame.T @ x)
    a2 = float(frame.e('Y1') @ x)
    a3 = float(frame.e('Z0') @ x)
    V = x - a1 * frame.T - a2 * frame.e('Y1') - a3 * frame.e('Z0')
    return a1, a2, V, a3


def structure_vector(frame: HypersurfaceFrame) -> Vector:
    """J xi = cos(theta) Y1 + sin(theta) Z0"""
    return frame.ambient.apply_J(frame.xi)


# -- second fundamental form and shape operator ------------------------------

def second_fundamental_form(frame: HypersurfaceFrame, x, y) -> float:
    """xi-coefficient of h(x, y)

    2h = (<x,y> + a3 b3) sin(theta) + (a2 b3 + a3 b2) cos(theta)
    """
    _, a2, _, a3 = tangent_coefficients(frame, x)
    _, b2, _, b3 = tangent_coefficients(frame, y)
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    return 0.5 * ((x @ y + a3 * b3) * frame.sin_theta + (a2 * b3 + a3 * b2) * frame.cos_theta)


def second_fundamental_form_oracle(frame: HypersurfaceFrame, x, y) -> float:
    """<nabla^s_x y, xi> from the generic connection of the ambient algebra"""
    x, y = _require_tangent(frame, x), _require_tangent(frame, y)
    return float(levi_civita(frame.ambient.alg, x, y) @ frame.xi)


def shape_operator(frame: HypersurfaceFrame) -> np.ndarray:
    """Matrix of A_xi in the tangent frame, from <A_xi x, y> = h(x, y)"""
    basis = frame.tangent_basis
    d = frame.dim
    A = np.empty((d, d))
    for a in range(d):
        for b in range(d):
            A[a, b] = second_fundamental_form(frame, basis[b], basis[a])
    return A


def shape_operator_closed(frame: HypersurfaceFrame) -> np.ndarray:
    """A_xi written down entry by entry

    A T = s/2 T,  A Y1 = s/2 Y1 + c/2 Z0,  A V = s/2 V,  A Z0 = c/2 Y1 + s Z0
    """
    c, s = frame.cos_theta, frame.sin_theta
    d = frame.dim
    y1, z0 = frame.sub.index('Y1'), frame.sub.index('Z0')
    A = 0.5 * s * np.eye(d)
    A[z0, z0] = s
    A[z0, y1] = A[y1, z0] = 0.5 * c
    return A


def principal_curvature_values(theta: float) -> Tuple[float, float, float]:
    """(lambda1, lambda2, lambda3); lambda1 = lambda2 exactly at theta = pi/2"""
    _, c, s = normalize_theta(theta)
    root = math.sqrt(1 + 3 * c * c)
    return 0.75 * s - 0.25 * root, 0.5 * s, 0.75 * s + 0.25 * root


def principal_curvatures(frame: HypersurfaceFrame, cluster_tol: float) -> SpectrumReport:
    """Clustered eigenvalues of the shape operator"""
    return spectrum(shape_operator(frame), cluster_tol)


def principal_curvatures_closed(frame: HypersurfaceFrame) -> SpectrumReport:
    """Principal curvatures with the exact multiplicity split at theta = pi/2"""
    n = frame.n
    l1, l2, l3 = principal_curvature_values(frame.theta)
    if frame.cos_theta == 0.0:
        # lambda1 and lambda2 merge into 1/2; lambda3 = 1
        return SpectrumReport(((l2, 2 * n - 2), (l3, 1)), 0.0)
    return SpectrumReport(((l1, 1), (l2, 2 * n - 3), (l3, 1)), 0.0)


def mean_curvature(frame: HypersurfaceFrame) -> float:
    return float(np.trace(shape_operator(frame))) / frame.dim


def mean_curvature_closed(frame: HypersurfaceFrame) -> float:
    return frame.n / (2 * frame.n - 1) * frame.sin_theta


def hopf_defect(frame: HypersurfaceFrame) -> float:
    """Norm of the component of A_xi(J xi) orthogonal to J xi; equals cos^3(theta) / 2"""
    u = frame.to_tangent(structure_vector(frame))
    w = shape_operator(frame) @ u
    return float(np.linalg.norm(w - (w @ u) * u))


def classify_extrinsic(frame: HypersurfaceFrame, tol: float = HOPF_TOL) -> ExtrinsicFlags:
    """Minimal, austere and Hopf tests from the shape operator"""
    eigenvalues = np.linalg.eigvalsh(shape_operator(frame))
    austere_gap = float(np.max(np.abs(eigenvalues + eigenvalues[::-1])))
    defect = hopf_defect(frame)
    return ExtrinsicFlags(
        minimal=abs(mean_curvature(frame)) <= tol,
        austere=austere_gap <= tol,
        hopf=defect <= tol,
        hopf_defect=defect,
    )


# -- induced connection ------------------------------------------------------

def induced_connection(frame: HypersurfaceFrame, x, y) -> Vector:
    """nabla_x y = nabla^s_x y - h(x, y) xi, in ambient coordinates"""
    x, y = _require_tangent(frame, x), _require_tangent(frame, y)
    ambient = levi_civita(frame.ambient.alg, x, y)
    return ambient - (ambient @ frame.xi) * frame.xi


# -- Ricci and scalar curvature ----------------------------------------------

def intrinsic_ricci(frame: HypersurfaceFrame) -> np.ndarray:
    """Ricci operator of s(theta) in the tangent frame, closed form"""
    n, c, s = frame.n, frame.cos_theta, frame.sin_theta
    d = frame.dim
    y1, z0 = frame.sub.index('Y1'), frame.sub.index('Z0')
    ric = -0.25 * (2 + (2 * n - 1) * c * c) * np.eye(d)
    ric[y1, y1] = -0.25 * (2 + (2 * n - 3) * c * c)
    ric[z0, z0] = 0.5 * ((n - 1) - 2 * n * c * c)
    ric[y1, z0] = ric[z0, y1] = 0.5 * n * s * c
    return ric


def intrinsic_ricci_oracle(frame: HypersurfaceFrame) -> np.ndarray:
    return ricci_matrix(frame.sub)


def principal_ricci_values(n: int, theta: float) -> Tuple[float, float, float]:
    """(alpha1, alpha2, alpha3); alpha1 = alpha2 exactly at theta = pi/2"""
    _, c, _ = normalize_theta(theta)
    c2 = c * c
    disc = 4 * n * n + 4 * n * (2 * n - 3) * c2 - 3 * (2 * n + 1) * (2 * n - 3) * c2 * c2
    base = (n - 2) / 4 - (6 * n - 3) / 8 * c2
    root = math.sqrt(disc) / 8
    return base - root, -0.5 - (2 * n - 1) / 4 * c2, base + root


def principal_ricci(frame: HypersurfaceFrame, cluster_tol: float) -> SpectrumReport:
    return spectrum(intrinsic_ricci(frame), cluster_tol)


def principal_ricci_closed(frame: HypersurfaceFrame) -> SpectrumReport:
    n = frame.n
    if frame.cos_theta == 0.0:
        return SpectrumReport(((-0.5, 2 * n - 2), ((n - 1) / 2, 1)), 0.0)
    a1, a2, a3 = principal_ricci_values(n, frame.theta)
    return SpectrumReport(((a1, 1), (a2, 2 * n - 3), (a3, 1)), 0.0)


def scalar_value(n: int, theta: float) -> float:
    """sc = -(n-1)/2 - (n(2n-1)/2) cos^2(theta), negative for every theta"""
    _, c, _ = normalize_theta(theta)
    return -(n - 1) / 2 - n * (2 * n - 1) / 2 * c * c


def intrinsic_scalar(frame: HypersurfaceFrame) -> float:
    return scalar_value(frame.n, frame.theta)


# -- sectional curvature -----------------------------------------------------

def intrinsic_sectional(frame: HypersurfaceFrame, plane: Plane) -> float:
    """Sectional curvature of a tangent plane (ambient coordinates), closed form"""
    _require_tangent_plane(frame, plane)
    c, s = frame.cos_theta, frame.sin_theta
    _, a2, _, a3 = tangent_coefficients(frame, plane.x)
    _, b2, _, b3 = tangent_coefficients(frame, plane.y)
    kahler = float(frame.ambient.apply_J(plane.x) @ plane.y)
    return (
        -0.25 - 0.75 * kahler ** 2
        + 0.25 * (1 + a3 * a3 + b3 * b3) * s * s
        + 0.5 * (a2 * a3 + b2 * b3) * s * c
        - 0.25 * (a2 * b3 - a3 * b2) ** 2 * c * c
    )


def gauss_sectional(frame: HypersurfaceFrame, plane: Plane) -> float:
    """K^s + h(X,X) h(Y,Y) - h(X,Y)^2 with every term from the ambient oracle"""
    _require_tangent_plane(frame, plane)
    hxx = second_fundamental_form_oracle(frame, plane.x, plane.x)
    hyy = second_fundamental_form_oracle(frame, plane.y, plane.y)
    hxy = second_fundamental_form_oracle(frame, plane.x, plane.y)
    return sectional(frame.ambient.alg, plane) + hxx * hyy - hxy * hxy


def oracle_sectional(frame: HypersurfaceFrame, plane: Plane) -> float:
    """Sectional curvature from the structure constants of s(theta) itself"""
    _require_tangent_plane(frame, plane)
    return sectional(frame.sub, frame.plane_to_tangent(plane))


def gauss_curvature(frame: HypersurfaceFrame, x, y, z, w) -> float:
    """<R(x,y)z, w> of s(theta) through the Gauss equation"""
    x, y, z, w = (_require_tangent(frame, v) for v in (x, y, z, w))
    h = lambda u, v: second_fundamental_form_oracle(frame, u, v)  # noqa: E731
    ambient = float(riemann(frame.ambient.alg, x, y, z) @ w)
    return ambient + h(x, z) * h(y, w) - h(y, z) * h(x, w)


def comparison_terms(theta: float) -> Tuple[float, float]:
    """(C, D) with 8 max K = -2 - 3cos^2 + C for n > 2 and -2 - 3cos^2 + D for n = 2"""
    _, c, s = normalize_theta(theta)
    s2, c2 = s * s, c * c
    C = 3 + s * math.sqrt(s2 + 4 * c2)
    D = math.sqrt(16 * s2 * s2 + 9 * c2 * c2 + 40 * s2 * c2)
    return C, D


def max_sectional_value(n: int, theta: float) -> float:
    """Closed-form maximum of the sectional curvature of S(theta) in CH^n"""
    _, c, _ = normalize_theta(theta)
    C, D = comparison_terms(theta)
    return (-2 - 3 * c * c + (D if n == 2 else C)) / 8


def min_sectional_value(n: int, theta: float) -> Optional[float]:
    """Closed-form minimum, known only for n = 2"""
    if n != 2:
        return None
    _, c, _ = normalize_theta(theta)
    _, D = comparison_terms(theta)
    return -0.25 - 0.375 * c * c - D / 8


def extremal_planes(frame: HypersurfaceFrame) -> Tuple[Plane, Optional[Plane]]:
    """Tangent planes attaining the closed-form maximum (and the n = 2 minimum)"""
    c, s = frame.cos_theta, frame.sin_theta
    Y1, Z0 = frame.e('Y1'), frame.e('Z0')
    if frame.n == 2:
        t = 0.5 * math.atan2(8 * s * c, 3 * c * c - 4 * s * s)
        argmax = Plane(frame.T, math.cos(t) * Y1 + math.sin(t) * Z0)
        t_min = t + HALF_PI
        argmin = Plane(frame.T, math.cos(t_min) * Y1 + math.sin(t_min) * Z0)
        return argmax, argmin
    t = 0.5 * math.atan2(2 * c, -s)
    return Plane(math.cos(t) * Y1 + math.sin(t) * Z0, frame.e('X2')), None


def sectional_extrema_closed(frame: HypersurfaceFrame) -> ExtremaReport:
    """Closed-form extrema with witness planes; search fields left empty"""
    C, D = comparison_terms(frame.theta)
    argmax, argmin = extremal_planes(frame)
    return ExtremaReport(
        theta=frame.theta,
        n=frame.n,
        max_closed=max_sectional_value(frame.n, frame.theta),
        min_closed=min_sectional_value(frame.n, frame.theta),
        C=C,
        D=D,
        argmax=argmax,
        argmin=argmin,
        min_method=ExtremumMethod.CLOSED if frame.n == 2 else ExtremumMethod.SEARCH,
    )


def sectional_objective(frame: HypersurfaceFrame) -> Callable[[Plane], float]:
    """Sectional curvature on planes given in tangent-frame coordinates"""
    return lambda plane: sectional(frame.sub, plane)


def sectional_extrema(frame: HypersurfaceFrame, cfg: Optional[SearchConfig] = None,
                      workers: int = 1) -> ExtremaReport:
    """Closed-form extrema plus the plane search; argmax/argmin become the searched witnesses"""
    closed = sectional_extrema_closed(frame)
    result = search_extrema(sectional_objective(frame), frame.dim, cfg or SearchConfig(), workers=workers)
    if result.max > closed.max_closed + 1e-9:
        logger.warning("Searched max %.17g exceeds closed form %.17g (n=%d, theta=%.17g)",
                       result.max, closed.max_closed, frame.n, frame.theta)
    return replace(
        closed,
        max_search=result.max,
        min_search=result.min,
        argmax=frame.plane_to_ambient(result.argmax),
        argmin=frame.plane_to_ambient(result.argmin),
    )


def comparison_gap(theta: float) -> float:
    """(C - D) / 8 without cancellation

    Equals 3 s c^6 / ((sqrt(s^2 + 4c^2) + s(1 + 2c^2)) (C + D)); near pi/2 it
    decays like c^6 and the plain difference C - D cancels.
    """
    _, c, s = normalize_theta(theta)
    C, D = comparison_terms(theta)
    c2 = c * c
    return 3 * s * c2 * c2 * c2 / ((math.sqrt(s * s + 4 * c2) + s * (1 + 2 * c2)) * (C + D))


def compare_extrema(theta: float) -> ComparisonReport:
    """Gap between the n > 2 and n = 2 maxima; zero only at theta = 0 and pi/2"""
    theta, _, _ = normalize_theta(theta)
    C, D = comparison_terms(theta)
    return ComparisonReport(theta=theta, C=C, D=D, max_gap=comparison_gap(theta))


# -- classification and degeneration -----------------------------------------

def classify_intrinsic(frame: HypersurfaceFrame) -> IntrinsicFlags:
    ric = intrinsic_ricci_oracle(frame)
    mean = float(np.trace(ric)) / frame.dim
    einstein = float(np.max(np.abs(ric - mean * np.eye(frame.dim)))) <= EINSTEIN_TOL
    return IntrinsicFlags(
        einstein=einstein,
        negative_ricci=principal_ricci_closed(frame).values[-1] < 0,
        negative_scalar=intrinsic_scalar(frame) < 0,
        negative_sectional=max_sectional_value(frame.n, frame.theta) < 0,
    )


def degeneration(frame: HypersurfaceFrame, tol: float = RANK_TOL) -> Dict[str, object]:
    """Lower central and derived series of s(theta); nilpotent exactly at theta = pi/2"""
    lower = lower_central_series(frame.sub, tol)
    derived = derived_series(frame.sub, tol)
    return {
        'lower_central_series': lower,
        'derived_series': derived,
        'nilpotent': lower[-1] == 0,
        'solvable': derived[-1] == 0,
    }


def curvature_report(frame: HypersurfaceFrame, cfg: Optional[SearchConfig] = None,
                     cluster_tol: Optional[float] = None, hopf_tol: float = HOPF_TOL,
                     workers: int = 1) -> Dict[str, object]:
    """Full single-point report

    Without cluster_tol the multiplicities follow the exact theta = pi/2 case
    split; with it they come from clustering the numerical spectra.
    """
    if cluster_tol is None:
        curvatures = principal_curvatures_closed(frame)
        ricci = principal_ricci_closed(frame)
    else:
        curvatures = principal_curvatures(frame, cluster_tol)
        ricci = principal_ricci(frame, cluster_tol)

    logger.info("Building curvature report for n=%d, theta=%.17g", frame.n, frame.theta)
    return {
        'n': frame.n,
        'theta': frame.theta,
        'principal_curvatures': curvatures.to_dict(),
        'mean_curvature': mean_curvature_closed(frame),
        'flags': classify_extrinsic(frame, hopf_tol).to_dict(),
        'principal_ricci': ricci.to_dict(),
        'scalar': intrinsic_scalar(frame),
        'sectional': sectional_extrema(frame, cfg, workers).to_dict(),
        'intrinsic_flags': classify_intrinsic(frame).to_dict(),
        'degeneration': degeneration(frame),
    }


# -- sweeps ------------------------------------------------------------------

def sweep_row(n: int, theta: float, cfg: Optional[SearchConfig] = None) -> SweepRow:
    """One sweep sample; k_min comes from the plane search when n > 2"""
    frame = build_hypersurface(n, theta)
    l1, l2, l3 = principal_curvature_values(frame.theta)
    a1, a2, a3 = principal_ricci_values(n, frame.theta)
    C, D = comparison_terms(frame.theta)
    k_min = min_sectional_value(n, frame.theta)
    if k_min is None:
        k_min = search_extrema(sectional_objective(frame), frame.dim, cfg or SearchConfig()).min
    return SweepRow(
        theta=frame.theta,
        lambda1=l1, lambda2=l2, lambda3=l3,
        mean=mean_curvature_closed(frame),
        alpha1=a1, alpha2=a2, alpha3=a3,
        scalar=intrinsic_scalar(frame),
        k_max=max_sectional_value(n, frame.theta),
        k_min=k_min,
        c_cmp=C, d_cmp=D,
    )


def sweep(n: int, samples: int, cfg: Optional[SearchConfig] = None, workers: int = 1) -> List[SweepRow]:
    """Rows at samples uniform theta values in [0, pi/2], in theta order"""
    if samples < 2:
        raise ValueError(f"a sweep needs at least 2 samples, got {samples}")
    build_chn(n)
    thetas = [float(t) for t in np.linspace(0.0, HALF_PI, samples)]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(lambda t: sweep_row(n, t, cfg), thetas))
    else:
        rows = [sweep_row(n, t, cfg) for t in thetas]
    logger.info("Swept %d theta samples for n=%d", samples, n)
    return rows
