"""Generic curvature engine for metric Lie algebras

Everything here is computed from structure constants alone, in an orthonormal
basis. Sign conventions:

    nabla_x y   = (1/2)[x, y] + U(x, y)
    2<U(x,y),z> = <[z, x], y> + <x, [z, y]>
    R(x, y)     = nabla_[x,y] - nabla_x nabla_y + nabla_y nabla_x
    Ric(x)      = sum_i R(e_i, x) e_i
    K(x, y)     = <R(x, y) x, y>
"""

import logging
from functools import lru_cache
from typing import List

import numpy as np
from sklearn.cluster import AgglomerativeClustering

from liecurve.exceptions import NonSymmetric
from liecurve.models.algebra import Diagnostic, MetricLieAlgebra, Plane, SpectrumReport, Vector

logger = logging.getLogger(__name__)

ALGEBRA_TOL = 1e-12
SYMMETRY_TOL = 1e-8
PLANE_TOL = 1e-8
RANK_TOL = 1e-10
DEFAULT_CLUSTER_TOL = 1e-6


def validate(alg: MetricLieAlgebra, tol: float = ALGEBRA_TOL) -> List[Diagnostic]:
    """Report antisymmetry and Jacobi violations; empty list when the algebra is valid"""
    c = alg.structure
    m = alg.dim
    diagnostics = []

    sym = c + c.transpose(1, 0, 2)
    for i, j, k in zip(*np.nonzero(np.abs(sym) > tol)):
        if i <= j:
            diagnostics.append(Diagnostic('antisymmetry', (int(i), int(j), int(k)), float(abs(sym[i, j, k]))))

    jac = (np.einsum('ijl,lkm->ijkm', c, c)
           + np.einsum('jkl,lim->ijkm', c, c)
           + np.einsum('kil,ljm->ijkm', c, c))
    for i, j, k, mm in zip(*np.nonzero(np.abs(jac) > tol)):
        # totally antisymmetric in (i, j, k) once antisymmetry holds
        if i < j < k:
            diagnostics.append(Diagnostic('jacobi', (int(i), int(j), int(k), int(mm)), float(abs(jac[i, j, k, mm]))))

    if diagnostics:
        logger.debug("Algebra of dim %d has %d invariant violations", m, len(diagnostics))
    return diagnostics


def bracket(alg: MetricLieAlgebra, x, y) -> Vector:
    """[x, y] contracted with the structure tensor"""
    x, y = alg.check_vector(x), alg.check_vector(y)
    return np.einsum('ijk,i,j->k', alg.structure, x, y)


def koszul_U(alg: MetricLieAlgebra, x, y) -> Vector:
    """Symmetric part U(x, y) of the Levi-Civita connection"""
    x, y = alg.check_vector(x), alg.check_vector(y)
    c = alg.structure
    return 0.5 * (np.einsum('kil,i,l->k', c, x, y) + np.einsum('kil,i,l->k', c, y, x))


@lru_cache(maxsize=128)
def connection_tensor(alg: MetricLieAlgebra) -> np.ndarray:
    """G[i, j, k] = k-th component of nabla_{e_i} e_j"""
    c = alg.structure
    gamma = 0.5 * c + 0.5 * (np.einsum('kij->ijk', c) + np.einsum('kji->ijk', c))
    gamma.setflags(write=False)
    return gamma


@lru_cache(maxsize=128)
def curvature_tensor(alg: MetricLieAlgebra) -> np.ndarray:
    """R[i, j, a, b] = a-th component of R(e_i, e_j) e_b"""
    c = alg.structure
    # L[i] is the matrix of nabla_{e_i}: L[i][k, j] = G[i, j, k]
    L = connection_tensor(alg).transpose(0, 2, 1)
    LL = np.einsum('iab,jbc->ijac', L, L)
    R = np.einsum('ijk,kab->ijab', c, L) - LL + LL.transpose(1, 0, 2, 3)
    R.setflags(write=False)
    logger.debug("Curvature tensor built for algebra of dim %d", alg.dim)
    return R


def levi_civita(alg: MetricLieAlgebra, x, y) -> Vector:
    """nabla_x y for left-invariant fields x, y"""
    x, y = alg.check_vector(x), alg.check_vector(y)
    return np.einsum('ijk,i,j->k', connection_tensor(alg), x, y)


def riemann(alg: MetricLieAlgebra, x, y, z) -> Vector:
    """R(x, y) z"""
    x, y, z = alg.check_vector(x), alg.check_vector(y), alg.check_vector(z)
    return np.einsum('ijab,i,j,b->a', curvature_tensor(alg), x, y, z)


def ricci_matrix(alg: MetricLieAlgebra) -> np.ndarray:
    """Matrix of the Ricci operator; column b is Ric(e_b)"""
    ric = np.einsum('ibai->ab', curvature_tensor(alg))
    asym = float(np.max(np.abs(ric - ric.T)))
    if asym > 1e-10:
        logger.warning("Ricci matrix is not symmetric (deviation %.3e); is the algebra valid?", asym)
    return ric


def scalar_curvature(alg: MetricLieAlgebra) -> float:
    return float(np.trace(ricci_matrix(alg)))


def sectional(alg: MetricLieAlgebra, plane: Plane) -> float:
    """<R(x, y) x, y> for an orthonormal pair"""
    plane.require_orthonormal(PLANE_TOL)
    x, y = alg.check_vector(plane.x), alg.check_vector(plane.y)
    return float(np.einsum('ijab,i,j,b,a->', curvature_tensor(alg), x, y, x, y))


def cluster_values(values, cluster_tol: float = DEFAULT_CLUSTER_TOL):
    """Single-linkage clusters of real values as sorted (mean, size) pairs"""
    values = np.sort(np.asarray(values, dtype=float))
    if values.size == 0:
        return ()
    if values.size == 1:
        return ((float(values[0]), 1),)

    model = AgglomerativeClustering(
        n_clusters=None,
        distance_threshold=max(float(cluster_tol), np.finfo(float).tiny),
        linkage='single',
    )
    labels = model.fit_predict(values.reshape(-1, 1))
    clusters = []
    for label in np.unique(labels):
        members = values[labels == label]
        clusters.append((float(members.mean()), int(members.size)))
    return tuple(sorted(clusters))


def spectrum(matrix, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> SpectrumReport:
    """Clustered eigenvalues of a real symmetric matrix"""
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetric(f"expected a square matrix, got shape {a.shape}")
    asym = float(np.max(np.abs(a - a.T))) if a.size else 0.0
    if asym > SYMMETRY_TOL:
        raise NonSymmetric(f"matrix is not symmetric (deviation {asym:.3e})")
    eigenvalues = np.linalg.eigvalsh(0.5 * (a + a.T))
    return SpectrumReport(cluster_values(eigenvalues, cluster_tol), cluster_tol)


def span_basis(vectors, tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal basis (rows) of the span of the given row vectors"""
    vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
    if vectors.shape[0] == 0:
        return np.zeros((0, vectors.shape[1]))
    _, s, vt = np.linalg.svd(vectors, full_matrices=False)
    rank = int(np.sum(s > tol))
    return vt[:rank]


def bracket_space(alg: MetricLieAlgebra, A: np.ndarray, B: np.ndarray, tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal basis of [span A, span B]"""
    if A.shape[0] == 0 or B.shape[0] == 0:
        return np.zeros((0, alg.dim))
    brackets = np.einsum('ijk,ai,bj->abk', alg.structure, A, B).reshape(-1, alg.dim)
    return span_basis(brackets, tol)


def derived_algebra(alg: MetricLieAlgebra, tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal basis of [g, g]"""
    full = np.eye(alg.dim)
    return bracket_space(alg, full, full, tol)


def lower_central_series(alg: MetricLieAlgebra, tol: float = RANK_TOL) -> List[int]:
    """Dimensions of g, [g, g], [g, [g, g]], ... until the series stabilises"""
    full = np.eye(alg.dim)
    current = full
    dims = [alg.dim]
    while True:
        current = bracket_space(alg, full, current, tol)
        if current.shape[0] == dims[-1]:
            return dims
        dims.append(current.shape[0])
        if current.shape[0] == 0:
            return dims


def derived_series(alg: MetricLieAlgebra, tol: float = RANK_TOL) -> List[int]:
    """Dimensions of g, [g, g], [[g, g], [g, g]], ... until the series stabilises"""
    current = np.eye(alg.dim)
    dims = [alg.dim]
    while True:
        current = bracket_space(alg, current, current, tol)
        if current.shape[0] == dims[-1]:
            return dims
        dims.append(current.shape[0])
        if current.shape[0] == 0:
            return dims


def is_nilpotent(alg: MetricLieAlgebra, tol: float = RANK_TOL) -> bool:
    return lower_central_series(alg, tol)[-1] == 0


def is_solvable(alg: MetricLieAlgebra, tol: float = RANK_TOL) -> bool:
    return derived_series(alg, tol)[-1] == 0
