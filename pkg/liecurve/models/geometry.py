"""Ambient CH^n model and Lie hypersurface frame"""

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from liecurve.models.algebra import MetricLieAlgebra, Plane, Vector


@dataclass(frozen=True, eq=False)
class AmbientModel:
    """Solvable model s = a + v + z of the complex hyperbolic space CH^n

    Basis order is (A0, X1, Y1, ..., X_{n-1}, Y_{n-1}, Z0).
    """
    n: int
    alg: MetricLieAlgebra
    J: np.ndarray
    index_map: Dict[str, int]
    subspaces: Dict[str, Tuple[int, ...]]

    @property
    def dim(self) -> int:
        return self.alg.dim

    def e(self, label: str) -> Vector:
        return self.alg.basis_vector(label)

    def apply_J(self, v) -> Vector:
        return self.J @ np.asarray(v, dtype=float)

    def project(self, v, subspace: str) -> Vector:
        """Orthogonal projection onto 'a', 'v' or 'z'"""
        out = np.zeros(self.dim)
        idx = list(self.subspaces[subspace])
        out[idx] = np.asarray(v, dtype=float)[idx]
        return out


@dataclass(frozen=True, eq=False)
class HypersurfaceFrame:
    """Lie hypersurface algebra s(theta) = s minus R(cos(theta) X1 + sin(theta) A0)

    tangent_basis rows are ambient coordinates of (T, Y1, X2, Y2, ..., Z0);
    sub holds the structure constants of s(theta) in that basis.
    """
    ambient: AmbientModel
    theta: float
    cos_theta: float
    sin_theta: float
    xi: Vector
    T: Vector
    tangent_basis: np.ndarray
    sub: MetricLieAlgebra

    @property
    def n(self) -> int:
        return self.ambient.n

    @property
    def dim(self) -> int:
        return self.sub.dim

    def e(self, label: str) -> Vector:
        """Ambient coordinates of a tangent basis element ('T', 'Y1', 'X2', ..., 'Z0')"""
        return self.tangent_basis[self.sub.index(label)].copy()

    def normal_component(self, v) -> float:
        return float(self.xi @ np.asarray(v, dtype=float))

    def to_tangent(self, v) -> Vector:
        """Ambient coordinates -> coordinates in the tangent basis (normal part dropped)"""
        return self.tangent_basis @ np.asarray(v, dtype=float)

    def to_ambient(self, coords) -> Vector:
        return np.asarray(coords, dtype=float) @ self.tangent_basis

    def plane_to_ambient(self, plane: Plane) -> Plane:
        return Plane(self.to_ambient(plane.x), self.to_ambient(plane.y))

    def plane_to_tangent(self, plane: Plane) -> Plane:
        return Plane(self.to_tangent(plane.x), self.to_tangent(plane.y))
