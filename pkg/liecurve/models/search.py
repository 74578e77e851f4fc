"""Plane search configuration and results"""

from dataclasses import dataclass, replace

from liecurve.models.algebra import Plane


@dataclass(frozen=True)
class SearchConfig:
    """Settings of the multi-start plane search

    Identical configs give bit-identical search results.
    """
    seed: int = 20240229
    restarts: int = 64
    max_iters: int = 500
    step_init: float = 0.1
    step_min: float = 1e-10
    tol: float = 1e-9

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2 ** 64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not 0 < self.step_min < self.step_init:
            raise ValueError(f"need 0 < step_min < step_init, got {self.step_min} and {self.step_init}")
        if self.tol < 0:
            raise ValueError(f"tol must be non-negative, got {self.tol}")

    def with_seed(self, seed: int) -> "SearchConfig":
        return replace(self, seed=seed)


@dataclass(frozen=True)
class SearchResult:
    """Best values found over all restarts, each re-evaluated at its witness plane"""
    max: float
    argmax: Plane
    min: float
    argmin: Plane
    evaluations: int = 0
