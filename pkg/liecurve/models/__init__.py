"""Data models for metric Lie algebras, hypersurfaces and reports"""

from liecurve.models.algebra import Diagnostic, MetricLieAlgebra, Plane, SpectrumReport, Vector
from liecurve.models.enums import ExtremumMethod, OutputFormat
from liecurve.models.geometry import AmbientModel, HypersurfaceFrame
from liecurve.models.reports import (
    CheckResult,
    ComparisonReport,
    ExtremaReport,
    ExtrinsicFlags,
    IntrinsicFlags,
    SweepRow,
)
from liecurve.models.search import SearchConfig, SearchResult

__all__ = [
    "AmbientModel",
    "CheckResult",
    "ComparisonReport",
    "Diagnostic",
    "ExtremaReport",
    "ExtremumMethod",
    "ExtrinsicFlags",
    "HypersurfaceFrame",
    "IntrinsicFlags",
    "MetricLieAlgebra",
    "OutputFormat",
    "Plane",
    "SearchConfig",
    "SearchResult",
    "SpectrumReport",
    "SweepRow",
    "Vector",
]
