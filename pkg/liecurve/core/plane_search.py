"""Seeded multi-start search for extrema of a function of 2-planes

Planes are orthonormal pairs in R^dim. Each restart owns an independent PCG64
stream derived from (seed, restart, stream), so serial and threaded runs give
bit-identical results. The winning plane of each stream is then refined by a
deterministic compass search. Minimisation maximises the negated objective.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Tuple

import numpy as np

from liecurve.exceptions import DegeneratePlane, DimensionMismatch, InvalidDimension
from liecurve.models.algebra import Plane
from liecurve.models.search import SearchConfig, SearchResult

logger = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-10
MAX_STREAM = 0
MIN_STREAM = 1
POLISH_SWEEPS = 20
POLISH_DIRECTION_TOL = 1e-6

Objective = Callable[[Plane], float]


def orthonormal_pair(x, y) -> Plane:
    """Gram-Schmidt on (x, y)"""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise DimensionMismatch(f"cannot pair vectors of shapes {x.shape} and {y.shape}")

    norm_x = float(np.linalg.norm(x))
    if norm_x < RESIDUAL_TOL:
        raise DegeneratePlane("first spanning vector is zero")
    x = x / norm_x
    residual = y - (x @ y) * x
    norm_r = float(np.linalg.norm(residual))
    if norm_r < RESIDUAL_TOL:
        raise DegeneratePlane(f"spanning vectors are parallel (residual {norm_r:.3e})")
    return Plane(x, residual / norm_r)


def random_plane(dim: int, rng: np.random.Generator) -> Plane:
    """Plane spanned by two standard normal draws; O(dim)-invariant in distribution"""
    if dim < 2:
        raise InvalidDimension(f"planes need dim >= 2, got {dim}")
    while True:
        x, y = rng.standard_normal((2, dim))
        try:
            return orthonormal_pair(x, y)
        except DegeneratePlane:
            logger.debug("Degenerate random draw in dim %d, redrawing", dim)


def restart_rng(seed: int, restart: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), restart, stream]))


def _tangent_direction(plane: Plane, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """Random perturbation of both spanning vectors, orthogonal to the plane"""
    basis = np.vstack([plane.x, plane.y])
    d = rng.standard_normal((2, plane.dim))
    d -= (d @ basis.T) @ basis
    norm = float(np.linalg.norm(d))
    if norm < RESIDUAL_TOL:
        # dim 2: the plane is the whole space
        return np.zeros(plane.dim), np.zeros(plane.dim)
    d /= norm
    return d[0], d[1]


def _climb(objective: Objective, dim: int, cfg: SearchConfig, restart: int,
           stream: int) -> Tuple[float, Plane, int]:
    """One restart of perturb-and-reorthonormalise hill climbing"""
    rng = restart_rng(cfg.seed, restart, stream)
    plane = random_plane(dim, rng)
    best = objective(plane)
    evaluations = 1
    step = cfg.step_init

    for _ in range(cfg.max_iters):
        if step < cfg.step_min:
            break
        dx, dy = _tangent_direction(plane, rng)
        if not dx.any() and not dy.any():
            break

        improved = False
        for sign in (1.0, -1.0):
            try:
                candidate = orthonormal_pair(plane.x + sign * step * dx, plane.y + sign * step * dy)
            except DegeneratePlane:
                continue
            value = objective(candidate)
            evaluations += 1
            if value > best + cfg.tol:
                plane, best, improved = candidate, value, True
                break

        step = min(2 * step, cfg.step_init) if improved else step / 2

    return best, plane, evaluations


def _coordinate_directions(plane: Plane) -> List[np.ndarray]:
    """Unit parts of the standard basis orthogonal to the plane"""
    basis = np.vstack([plane.x, plane.y])
    directions = []
    for k in range(plane.dim):
        u = -(basis[:, k] @ basis)
        u[k] += 1.0
        norm = float(np.linalg.norm(u))
        if norm > POLISH_DIRECTION_TOL:
            directions.append(u / norm)
    return directions


def _polish(objective: Objective, plane: Plane, best: float, cfg: SearchConfig) -> Tuple[float, Plane, int]:
    """Deterministic compass refinement of a climbed plane

    Tilts x and y along the coordinate directions normal to the plane, accepting
    any strict improvement, and halves the step from step_init down to step_min.
    """
    evaluations = 0
    step = cfg.step_init
    while step >= cfg.step_min:
        for _ in range(POLISH_SWEEPS):
            improved = False
            for u in _coordinate_directions(plane):
                for dx, dy in ((u, 0.0), (-u, 0.0), (0.0, u), (0.0, -u)):
                    try:
                        candidate = orthonormal_pair(plane.x + step * dx, plane.y + step * dy)
                    except DegeneratePlane:
                        continue
                    value = objective(candidate)
                    evaluations += 1
                    if value > best:
                        plane, best, improved = candidate, value, True
            if not improved:
                break
        step /= 2
    return best, plane, evaluations


def _best_over_restarts(objective: Objective, dim: int, cfg: SearchConfig, stream: int,
                        executor) -> Tuple[float, Plane, int]:
    restarts = range(cfg.restarts)
    if executor is None:
        results: List[Tuple[float, Plane, int]] = [_climb(objective, dim, cfg, r, stream) for r in restarts]
    else:
        results = list(executor.map(lambda r: _climb(objective, dim, cfg, r, stream), restarts))

    # ties go to the lowest restart index, independent of scheduling
    best_index = max(range(len(results)), key=lambda i: (results[i][0], -i))
    value, plane, _ = results[best_index]
    value, plane, polished = _polish(objective, plane, value, cfg)
    evaluations = sum(r[2] for r in results) + polished
    logger.debug("Stream %d: best %.17g from restart %d of %d", stream, value, best_index, cfg.restarts)
    return value, plane, evaluations


def search_extrema(objective: Objective, dim: int, cfg: SearchConfig = None, workers: int = 1) -> SearchResult:
    """Maximum and minimum of objective over 2-planes of R^dim

    The reported values are the objective re-evaluated at the returned planes.
    """
    cfg = cfg or SearchConfig()
    if dim < 2:
        raise InvalidDimension(f"planes need dim >= 2, got {dim}")
    negated = lambda plane: -objective(plane)  # noqa: E731

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            _, argmax, n_max = _best_over_restarts(objective, dim, cfg, MAX_STREAM, executor)
            _, argmin, n_min = _best_over_restarts(negated, dim, cfg, MIN_STREAM, executor)
    else:
        _, argmax, n_max = _best_over_restarts(objective, dim, cfg, MAX_STREAM, None)
        _, argmin, n_min = _best_over_restarts(negated, dim, cfg, MIN_STREAM, None)

    result = SearchResult(
        max=float(objective(argmax)),
        argmax=argmax,
        min=float(objective(argmin)),
        argmin=argmin,
        evaluations=n_max + n_min + 2,
    )
    logger.debug("Plane search in dim %d: max %.17g, min %.17g (%d evaluations)",
                 dim, result.max, result.min, result.evaluations)
    return result
