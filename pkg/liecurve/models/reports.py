"""Result records for hypersurface reports, sweeps and verification"""

from dataclasses import asdict, dataclass
from typing import Optional

from liecurve.models.algebra import Plane
from liecurve.models.enums import ExtremumMethod


@dataclass(frozen=True)
class ExtremaReport:
    """Max/min sectional curvature of s(theta), closed form and searched"""
    theta: float
    n: int
    max_closed: float
    min_closed: Optional[float]  # the n > 2 minimum has no closed form
    C: float
    D: float
    argmax: Plane
    argmin: Optional[Plane]
    max_search: Optional[float] = None
    min_search: Optional[float] = None
    min_method: ExtremumMethod = ExtremumMethod.CLOSED

    @property
    def k_min(self) -> Optional[float]:
        """Best available minimum: closed form when known, else the searched value"""
        return self.min_closed if self.min_closed is not None else self.min_search

    def to_dict(self):
        return {
            'max_closed': self.max_closed,
            'min_closed': self.min_closed,
            'max_search': self.max_search,
            'min_search': self.min_search,
            'min_method': self.min_method.value,
            'C': self.C,
            'D': self.D,
        }


@dataclass(frozen=True)
class ExtrinsicFlags:
    minimal: bool
    austere: bool
    hopf: bool
    hopf_defect: float  # norm of the part of A(J xi) orthogonal to J xi

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class IntrinsicFlags:
    einstein: bool
    negative_ricci: bool
    negative_scalar: bool
    negative_sectional: bool

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class ComparisonReport:
    """max K for n > 2 minus max K for n = 2, as (C - D) / 8"""
    theta: float
    C: float
    D: float
    max_gap: float

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class SweepRow:
    """One theta sample of the curvature sweep"""
    theta: float
    lambda1: float
    lambda2: float
    lambda3: float
    mean: float
    alpha1: float
    alpha2: float
    alpha3: float
    scalar: float
    k_max: float
    k_min: float
    c_cmp: float
    d_cmp: float

    def to_record(self):
        """CSV record with the published column names"""
        record = asdict(self)
        record['C'] = record.pop('c_cmp')
        record['D'] = record.pop('d_cmp')
        return record


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one oracle-vs-closed-form check"""
    check: str
    n: Optional[int]
    theta: Optional[float]
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance

    def to_dict(self):
        data = asdict(self)
        data['passed'] = self.passed
        return data
