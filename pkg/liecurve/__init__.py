"""
liecurve - curvature of Lie hypersurfaces in the complex hyperbolic space
Generic metric Lie algebra curvature engine, the solvable model of CH^n and the
hypersurfaces S(theta), with closed forms checked against the engine
"""

__version__ = "1.0.0"

# Defer imports: numpy/sklearn load only when a component is accessed
__all__ = [
    "ConfigManager",
    "MetricLieAlgebra",
    "Plane",
    "SearchConfig",
    "build_chn",
    "build_hypersurface",
    "curvature_report",
    "search_extrema",
]


def __getattr__(name):
    """Lazy import main components on first access"""
    if name == "ConfigManager":
        from liecurve.config.manager import ConfigManager
        return ConfigManager
    elif name in ("MetricLieAlgebra", "Plane"):
        from liecurve.models import algebra
        return getattr(algebra, name)
    elif name == "SearchConfig":
        from liecurve.models.search import SearchConfig
        return SearchConfig
    elif name == "build_chn":
        from liecurve.core.chn_model import build_chn
        return build_chn
    elif name in ("build_hypersurface", "curvature_report"):
        from liecurve.core import hypersurface
        return getattr(hypersurface, name)
    elif name == "search_extrema":
        from liecurve.core.plane_search import search_extrema
        return search_extrema
    raise AttributeError(f"module '{__name__}' has no attribute '{name}'")
