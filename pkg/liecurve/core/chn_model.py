"""Solvable model of the complex hyperbolic space CH^n and its closed forms

The basis is (A0, X1, Y1, ..., X_{n-1}, Y_{n-1}, Z0), orthonormal, with

    [A0, X_i] = X_i / 2,  [A0, Y_i] = Y_i / 2,  [A0, Z0] = Z0,  [X_i, Y_i] = Z0
    J A0 = Z0,  J Z0 = -A0,  J X_i = Y_i,  J Y_i = -X_i

Holomorphic sectional curvature is -1.
"""

import logging
from typing import Tuple

import numpy as np

from liecurve.core.lie_algebra import PLANE_TOL, ricci_matrix
from liecurve.exceptions import InvalidDimension, NotEinstein
from liecurve.models.algebra import MetricLieAlgebra, Plane, Vector
from liecurve.models.geometry import AmbientModel

logger = logging.getLogger(__name__)

EINSTEIN_TOL = 1e-9


def chn_labels(n: int) -> Tuple[str, ...]:
    labels = ['A0']
    for i in range(1, n):
        labels += [f'X{i}', f'Y{i}']
    labels.append('Z0')
    return tuple(labels)


def build_chn(n: int) -> AmbientModel:
    """Build the solvable model of CH^n, n >= 2"""
    if int(n) != n or n < 2:
        raise InvalidDimension(f"complex dimension must be an integer >= 2, got {n}")
    n = int(n)
    m = 2 * n
    labels = chn_labels(n)
    index_map = {label: i for i, label in enumerate(labels)}
    a0, z0 = index_map['A0'], index_map['Z0']

    c = np.zeros((m, m, m))

    def set_bracket(i, j, k, value):
        c[i, j, k] = value
        c[j, i, k] = -value

    set_bracket(a0, z0, z0, 1.0)
    J = np.zeros((m, m))
    J[z0, a0] = 1.0
    J[a0, z0] = -1.0
    for i in range(1, n):
        xi, yi = index_map[f'X{i}'], index_map[f'Y{i}']
        set_bracket(a0, xi, xi, 0.5)
        set_bracket(a0, yi, yi, 0.5)
        set_bracket(xi, yi, z0, 1.0)
        J[yi, xi] = 1.0
        J[xi, yi] = -1.0
    J.setflags(write=False)

    subspaces = {
        'a': (a0,),
        'v': tuple(range(1, m - 1)),
        'z': (z0,),
    }
    logger.debug("Built CH^%d solvable model (dim %d)", n, m)
    return AmbientModel(n, MetricLieAlgebra(c, labels), J, index_map, subspaces)


def decompose(model: AmbientModel, x) -> Tuple[float, Vector, float]:
    """Split x = a1 A0 + V + a2 Z0 along s = a + v + z"""
    x = model.alg.check_vector(x)
    return float(x[model.index_map['A0']]), model.project(x, 'v'), float(x[model.index_map['Z0']])


def connection_closed(model: AmbientModel, x, y) -> Vector:
    """Levi-Civita connection of CH^n from the closed formula

    2 nabla_X Y = (<V,W> + 2 a2 b2) A0 - b1 V - a2 JW - b2 JV + (<JV,W> - 2 a2 b1) Z0
    """
    _, V, a2 = decompose(model, x)
    b1, W, b2 = decompose(model, y)
    JV, JW = model.apply_J(V), model.apply_J(W)
    twice = (
        (V @ W + 2 * a2 * b2) * model.e('A0')
        - b1 * V - a2 * JW - b2 * JV
        + (JV @ W - 2 * a2 * b1) * model.e('Z0')
    )
    return 0.5 * twice


def curvature_closed(model: AmbientModel, x, y, z) -> Vector:
    """4 R(X,Y)Z = <Y,Z>X - <X,Z>Y + <JY,Z>JX - <JX,Z>JY - 2<JX,Y>JZ"""
    x, y, z = (model.alg.check_vector(v) for v in (x, y, z))
    Jx, Jy, Jz = model.apply_J(x), model.apply_J(y), model.apply_J(z)
    return 0.25 * ((y @ z) * x - (x @ z) * y + (Jy @ z) * Jx - (Jx @ z) * Jy - 2 * (Jx @ y) * Jz)


def sectional_closed(model: AmbientModel, plane: Plane) -> float:
    """K = -1/4 - (3/4) <JX, Y>^2, between -1 (complex) and -1/4 (totally real)"""
    plane.require_orthonormal(PLANE_TOL)
    x, y = model.alg.check_vector(plane.x), model.alg.check_vector(plane.y)
    return -0.25 - 0.75 * float(model.apply_J(x) @ y) ** 2


def kahler_angle(model: AmbientModel, plane: Plane) -> float:
    """Kahler angle in [0, pi/2]; 0 for J-invariant planes, pi/2 for totally real ones"""
    plane.require_orthonormal(PLANE_TOL)
    cos_alpha = abs(float(model.apply_J(plane.x) @ plane.y))
    return float(np.arccos(min(cos_alpha, 1.0)))


def einstein_constant(model: AmbientModel, tol: float = EINSTEIN_TOL) -> float:
    """Einstein constant of the model, checked against the generic Ricci operator and -(n+1)/2"""
    ric = ricci_matrix(model.alg)
    constant = float(np.trace(ric)) / model.dim
    deviation = float(np.max(np.abs(ric - constant * np.eye(model.dim))))
    if deviation > tol:
        raise NotEinstein(f"Ricci operator deviates from {constant} * I by {deviation:.3e}")
    expected = -(model.n + 1) / 2
    if abs(constant - expected) > tol:
        raise NotEinstein(f"Einstein constant {constant} differs from -(n+1)/2 = {expected}")
    return constant
