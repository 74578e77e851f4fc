"""Metric Lie algebra documents

    {"dim": m, "labels": [...],
     "brackets": [{"i": 0, "j": 1, "coeffs": {"1": 0.5}}, ...]}

Only pairs with i < j are listed; [e_j, e_i] = -[e_i, e_j] is filled in on
load. Coefficient keys are basis indices (as strings) or basis labels.
"""

import json
import logging
from typing import Any, Dict, Optional

import numpy as np

from liecurve.exceptions import AlgebraFormatError
from liecurve.models.algebra import MetricLieAlgebra
from liecurve.models.geometry import AmbientModel, HypersurfaceFrame

logger = logging.getLogger(__name__)

# structure constants below this are treated as zero on export
EXPORT_ZERO = 1e-15


def _coeff_index(key: str, labels) -> int:
    if key in labels:
        return labels.index(key)
    try:
        return int(key)
    except (TypeError, ValueError):
        raise AlgebraFormatError(f"unknown coefficient key '{key}'") from None


def algebra_from_dict(data: Dict[str, Any]) -> MetricLieAlgebra:
    """Build a MetricLieAlgebra from a parsed document"""
    if not isinstance(data, dict):
        raise AlgebraFormatError("algebra document must be a JSON object")
    try:
        m = int(data['dim'])
    except (KeyError, TypeError, ValueError):
        raise AlgebraFormatError("'dim' must be a positive integer") from None
    if m < 1:
        raise AlgebraFormatError(f"'dim' must be a positive integer, got {m}")

    labels = list(data.get('labels') or [f"e{i}" for i in range(m)])
    if len(labels) != m or len(set(labels)) != m:
        raise AlgebraFormatError(f"'labels' must hold {m} distinct names")

    c = np.zeros((m, m, m))
    seen = set()
    for entry in data.get('brackets', []):
        try:
            i, j = int(entry['i']), int(entry['j'])
            coeffs = entry.get('coeffs', {})
        except (KeyError, TypeError, ValueError, AttributeError):
            raise AlgebraFormatError(f"malformed bracket entry {entry!r}") from None
        if not (0 <= i < j < m):
            raise AlgebraFormatError(f"bracket entries need 0 <= i < j < {m}, got i={i}, j={j}")
        if (i, j) in seen:
            raise AlgebraFormatError(f"bracket [{i}, {j}] listed twice")
        seen.add((i, j))
        for key, value in coeffs.items():
            k = _coeff_index(key, labels)
            if not 0 <= k < m:
                raise AlgebraFormatError(f"coefficient index {k} out of range for dim {m}")
            try:
                c[i, j, k] = float(value)
            except (TypeError, ValueError):
                raise AlgebraFormatError(f"coefficient {value!r} is not a number") from None
            c[j, i, k] = -c[i, j, k]

    return MetricLieAlgebra(c, tuple(labels))


def algebra_to_dict(alg: MetricLieAlgebra) -> Dict[str, Any]:
    """Document listing every nonzero [e_i, e_j] with i < j"""
    brackets = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            coeffs = {str(k): float(v) for k, v in enumerate(alg.structure[i, j]) if abs(v) > EXPORT_ZERO}
            if coeffs:
                brackets.append({'i': i, 'j': j, 'coeffs': coeffs})
    return {'dim': alg.dim, 'labels': list(alg.labels), 'brackets': brackets}


def load_algebra(path: str) -> MetricLieAlgebra:
    """Read an algebra document; OSError propagates, bad content raises AlgebraFormatError"""
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise AlgebraFormatError(f"failed to parse {path}: {e}") from e
    alg = algebra_from_dict(data)
    logger.debug("Loaded %d-dimensional algebra from %s", alg.dim, path)
    return alg


def dump_algebra(alg: MetricLieAlgebra, path: Optional[str] = None) -> str:
    """Serialise to JSON text, writing it to path when given"""
    text = json.dumps(algebra_to_dict(alg), indent=2)
    if path:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text + '\n')
        logger.info("Wrote %d-dimensional algebra to %s", alg.dim, path)
    return text


def export_algebra(model: AmbientModel) -> Dict[str, Any]:
    return algebra_to_dict(model.alg)


def export_hypersurface(frame: HypersurfaceFrame) -> Dict[str, Any]:
    """s(theta) in its tangent frame (T, Y1, ..., Z0)"""
    return algebra_to_dict(frame.sub)
