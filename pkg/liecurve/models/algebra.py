"""Metric Lie algebra data models"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from liecurve.exceptions import DegeneratePlane, DimensionMismatch, InvalidDimension

# Vectors are plain float arrays holding coordinates in the declared orthonormal basis
Vector = np.ndarray


@dataclass(frozen=True, eq=False)
class MetricLieAlgebra:
    """Structure constants c[i, j, k] with [e_i, e_j] = sum_k c[i, j, k] e_k

    The declared basis is orthonormal, so the inner product is the identity
    Gram matrix throughout.
    """
    structure: np.ndarray
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        c = np.array(self.structure, dtype=float)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise InvalidDimension(f"structure tensor must be m x m x m, got shape {c.shape}")
        if c.shape[0] < 1:
            raise InvalidDimension("algebra dimension must be positive")
        c.setflags(write=False)
        object.__setattr__(self, 'structure', c)

        labels = tuple(self.labels) if self.labels else tuple(f"e{i}" for i in range(c.shape[0]))
        if len(labels) != c.shape[0]:
            raise InvalidDimension(f"{len(labels)} labels given for a {c.shape[0]}-dimensional algebra")
        object.__setattr__(self, 'labels', labels)

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    def index(self, label: str) -> int:
        """Position of a basis label"""
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label '{label}'") from None

    def basis_vector(self, label) -> Vector:
        """Coordinate vector of a basis element, by label or index"""
        i = self.index(label) if isinstance(label, str) else int(label)
        e = np.zeros(self.dim)
        e[i] = 1.0
        return e

    def vector(self, **coeffs: float) -> Vector:
        """Build a vector from label=coefficient pairs, e.g. alg.vector(X1=1.0, Z0=0.5)"""
        v = np.zeros(self.dim)
        for label, value in coeffs.items():
            v[self.index(label)] += value
        return v

    def check_vector(self, v) -> Vector:
        """Coerce to a float vector and verify its length"""
        arr = np.asarray(v, dtype=float)
        if arr.shape != (self.dim,):
            raise DimensionMismatch(f"expected a vector of length {self.dim}, got shape {arr.shape}")
        return arr


@dataclass(frozen=True, eq=False)
class Plane:
    """Ordered orthonormal pair (x, y) spanning a 2-plane"""
    x: Vector
    y: Vector

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if x.ndim != 1 or x.shape != y.shape:
            raise DimensionMismatch(f"plane vectors must be equal-length 1-d arrays, got {x.shape} and {y.shape}")
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)

    @property
    def dim(self) -> int:
        return self.x.shape[0]

    def orthonormality_defect(self) -> float:
        """Largest deviation from |x| = |y| = 1, <x, y> = 0"""
        return float(max(abs(self.x @ self.x - 1.0), abs(self.y @ self.y - 1.0), abs(self.x @ self.y)))

    def require_orthonormal(self, tol: float = 1e-8) -> "Plane":
        defect = self.orthonormality_defect()
        if defect > tol:
            raise DegeneratePlane(f"plane basis is not orthonormal (defect {defect:.3e} > {tol:.0e})")
        return self

    def rotated(self, angle: float) -> "Plane":
        """Same plane, basis rotated by angle within it"""
        c, s = np.cos(angle), np.sin(angle)
        return Plane(c * self.x + s * self.y, -s * self.x + c * self.y)

    def to_dict(self):
        return {'x': self.x.tolist(), 'y': self.y.tolist()}


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalue clusters sorted ascending, with multiplicities"""
    clusters: Tuple[Tuple[float, int], ...]
    cluster_tol: float

    @property
    def values(self) -> List[float]:
        return [value for value, _ in self.clusters]

    @property
    def multiplicities(self) -> List[int]:
        return [mult for _, mult in self.clusters]

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities)

    def expanded(self) -> List[float]:
        """Eigenvalues repeated by multiplicity"""
        return [value for value, mult in self.clusters for _ in range(mult)]

    def to_dict(self):
        return [{'value': value, 'multiplicity': mult} for value, mult in self.clusters]


@dataclass(frozen=True)
class Diagnostic:
    """One violated algebra invariant"""
    kind: str  # 'antisymmetry' or 'jacobi'
    indices: Tuple[int, ...]
    magnitude: float

    def __str__(self):
        idx = ','.join(str(i) for i in self.indices)
        return f"{self.kind} violated at ({idx}): magnitude {self.magnitude:.3e}"
