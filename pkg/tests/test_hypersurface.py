"""Lie hypersurface tests

Tests for liecurve.core.hypersurface covering:
- construction of s(theta) and its tangent frame
- second fundamental form, shape operator, principal and mean curvature
- Hopf, minimal and austere flags
- induced connection, Ricci and scalar curvature
- sectional curvature, its closed-form extrema and the n > 2 vs n = 2 comparison
"""
import math

import numpy as np
import pytest

from liecurve.core import hypersurface as hs
from liecurve.core.lie_algebra import riemann, validate
from liecurve.core.plane_search import random_plane
from liecurve.exceptions import InvalidDimension, InvalidTheta, NotTangent
from liecurve.models.algebra import Plane
from liecurve.models.enums import ExtremumMethod

from tests.conftest import THETA_GRID

SQRT13 = math.sqrt(13)


class TestBuildHypersurface:
    """Construction of s(theta)"""

    def test_ruled_frame(self, ruled_n2):
        """theta = 0: xi = X1 and the tangent basis is (A0, Y1, Z0)"""
        amb = ruled_n2.ambient
        np.testing.assert_array_equal(ruled_n2.xi, amb.e('X1'))
        np.testing.assert_array_equal(ruled_n2.tangent_basis, np.vstack([amb.e('A0'), amb.e('Y1'), amb.e('Z0')]))
        assert ruled_n2.sub.labels == ('T', 'Y1', 'Z0')

    def test_horosphere_frame(self, horosphere_n2):
        """theta = pi/2: T = -X1, exact endpoint trig values"""
        assert horosphere_n2.cos_theta == 0.0
        assert horosphere_n2.sin_theta == 1.0
        np.testing.assert_array_equal(horosphere_n2.T, -horosphere_n2.ambient.e('X1'))

    def test_v0_for_n3(self):
        """n=3: dim 5 with v0 = span(X2, Y2)"""
        frame = hs.build_hypersurface(3, 0.3)
        assert frame.dim == 5
        assert frame.sub.labels == ('T', 'Y1', 'X2', 'Y2', 'Z0')

    def test_subalgebra_valid(self):
        """s(theta) is a metric Lie algebra for every grid theta"""
        for theta in THETA_GRID:
            assert validate(hs.build_hypersurface(4, theta).sub) == []

    def test_endpoint_snap(self):
        """theta within 1e-15 of pi/2 is treated as pi/2"""
        frame = hs.build_hypersurface(2, math.pi / 2 + 5e-16)
        assert frame.theta == math.pi / 2
        assert frame.cos_theta == 0.0

    @pytest.mark.parametrize("theta", [-0.1, 2.0, float('nan'), float('inf')])
    def test_invalid_theta(self, theta):
        """theta outside [0, pi/2] raises InvalidTheta"""
        with pytest.raises(InvalidTheta):
            hs.build_hypersurface(2, theta)

    def test_invalid_n(self):
        """n = 1 raises InvalidDimension"""
        with pytest.raises(InvalidDimension):
            hs.build_hypersurface(1, 0.0)

    def test_structure_vector(self):
        """J xi = cos(theta) Y1 + sin(theta) Z0"""
        frame = hs.build_hypersurface(3, 0.4)
        expected = math.cos(0.4) * frame.e('Y1') + math.sin(0.4) * frame.e('Z0')
        np.testing.assert_allclose(hs.structure_vector(frame), expected, atol=1e-15)


class TestExtrinsic:
    """Second fundamental form and shape operator"""

    def setup_method(self):
        """Generic theta for n = 3"""
        self.theta = 0.7
        self.frame = hs.build_hypersurface(3, self.theta)
        self.c, self.s = math.cos(self.theta), math.sin(self.theta)

    def test_second_fundamental_form_examples(self):
        """h(T,T) = s/2, h(Y1,Z0) = c/2, h(Z0,Z0) = s"""
        f = self.frame
        assert hs.second_fundamental_form(f, f.T, f.T) == pytest.approx(self.s / 2)
        assert hs.second_fundamental_form(f, f.e('Y1'), f.e('Z0')) == pytest.approx(self.c / 2)
        assert hs.second_fundamental_form(f, f.e('Z0'), f.e('Z0')) == pytest.approx(self.s)

    def test_second_fundamental_form_oracle(self, rng):
        """The closed h matches <nabla^s_x y, xi> on random tangent vectors"""
        f = self.frame
        for _ in range(100):
            x, y = (f.to_ambient(v) for v in rng.standard_normal((2, f.dim)))
            assert hs.second_fundamental_form(f, x, y) == pytest.approx(
                hs.second_fundamental_form_oracle(f, x, y), abs=1e-12)

    def test_not_tangent(self):
        """xi itself is rejected"""
        with pytest.raises(NotTangent):
            hs.second_fundamental_form(self.frame, self.frame.xi, self.frame.T)

    def test_shape_operator_matches_closed(self):
        """h-derived matrix equals the entry-by-entry closed form"""
        for n in (2, 3, 4):
            for theta in THETA_GRID:
                f = hs.build_hypersurface(n, theta)
                np.testing.assert_allclose(hs.shape_operator(f), hs.shape_operator_closed(f), atol=1e-12)

    def test_principal_curvatures_ruled(self):
        """theta = 0 -> (-1/2 x1, 0 x(2n-3), 1/2 x1)"""
        report = hs.principal_curvatures(hs.build_hypersurface(3, 0.0), 1e-6)
        assert report.values == pytest.approx([-0.5, 0.0, 0.5], abs=1e-12)
        assert report.multiplicities == [1, 3, 1]

    def test_principal_curvatures_horosphere(self):
        """theta = pi/2 -> (1/2 x(2n-2), 1 x1)"""
        frame = hs.build_hypersurface(4, math.pi / 2)
        numeric = hs.principal_curvatures(frame, 1e-6)
        closed = hs.principal_curvatures_closed(frame)
        assert closed.clusters == ((0.5, 6), (1.0, 1))
        assert numeric.values == pytest.approx([0.5, 1.0], abs=1e-12)
        assert numeric.multiplicities == [6, 1]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_horosphere_closed_matches_mean_and_sweep(self, n):
        """At theta = pi/2 the closed spectrum averages to the mean curvature and agrees with the sweep values"""
        frame = hs.build_hypersurface(n, math.pi / 2)
        closed = hs.principal_curvatures_closed(frame)
        total = sum(value * mult for value, mult in closed.clusters)
        assert total / frame.dim == pytest.approx(hs.mean_curvature_closed(frame), abs=1e-14)
        assert closed.values[-1] == hs.principal_curvature_values(math.pi / 2)[2] == 1.0
        np.testing.assert_allclose(sorted(np.linalg.eigvalsh(hs.shape_operator(frame)))[-1], 1.0, atol=1e-12)

    def test_principal_curvatures_pi_over_6(self):
        """theta = pi/6 -> 3/8 -+ sqrt(13)/8 and 1/4"""
        l1, l2, l3 = hs.principal_curvature_values(math.pi / 6)
        assert l1 == pytest.approx(0.375 - SQRT13 / 8, abs=1e-12)
        assert l1 == pytest.approx(-0.075694, abs=1e-6)
        assert l2 == pytest.approx(0.25, abs=1e-12)
        assert l3 == pytest.approx(0.825694, abs=1e-6)

    @pytest.mark.parametrize("n,theta,expected", [
        (2, 0.0, 0.0),
        (2, math.pi / 2, 2 / 3),
        (3, math.pi / 6, 0.3),
    ])
    def test_mean_curvature(self, n, theta, expected):
        """H = (n/(2n-1)) sin(theta), trace and closed form"""
        frame = hs.build_hypersurface(n, theta)
        assert hs.mean_curvature(frame) == pytest.approx(expected, abs=1e-12)
        assert hs.mean_curvature_closed(frame) == pytest.approx(expected, abs=1e-12)

    def test_flags_ruled(self, ruled_n2):
        """theta = 0 is minimal and austere, not Hopf"""
        flags = hs.classify_extrinsic(ruled_n2)
        assert (flags.minimal, flags.austere, flags.hopf) == (True, True, False)
        assert flags.hopf_defect == pytest.approx(0.5)

    def test_flags_horosphere(self, horosphere_n2):
        """theta = pi/2 is Hopf only"""
        flags = hs.classify_extrinsic(horosphere_n2)
        assert (flags.minimal, flags.austere, flags.hopf) == (False, False, True)
        assert flags.hopf_defect == 0.0

    def test_flags_generic(self):
        """theta = pi/4 has none of the three properties"""
        flags = hs.classify_extrinsic(hs.build_hypersurface(3, math.pi / 4))
        assert (flags.minimal, flags.austere, flags.hopf) == (False, False, False)

    def test_hopf_defect_cubic(self):
        """Off-J xi part of A(J xi) has norm cos^3(theta)/2"""
        for theta in THETA_GRID:
            frame = hs.build_hypersurface(3, theta)
            assert hs.hopf_defect(frame) == pytest.approx(0.5 * math.cos(theta) ** 3, abs=1e-12)


class TestInducedConnection:
    """nabla = nabla^s - h xi"""

    def setup_method(self):
        """n = 3 at theta = 0.9"""
        self.frame = hs.build_hypersurface(3, 0.9)

    def test_geodesic_T(self):
        """nabla_T T = 0"""
        f = self.frame
        np.testing.assert_allclose(hs.induced_connection(f, f.T, f.T), np.zeros(6), atol=1e-15)

    def test_v0_z0(self):
        """nabla_V Z0 = -JV/2 for V in v0"""
        f = self.frame
        V = f.e('X2')
        np.testing.assert_allclose(hs.induced_connection(f, V, f.e('Z0')), -0.5 * f.ambient.apply_J(V), atol=1e-15)

    def test_z0_z0(self):
        """nabla_{Z0} Z0 = cos(theta) T"""
        f = self.frame
        np.testing.assert_allclose(hs.induced_connection(f, f.e('Z0'), f.e('Z0')), math.cos(0.9) * f.T, atol=1e-15)

    def test_matches_intrinsic(self, rng):
        """The induced connection is the Levi-Civita connection of s(theta)"""
        from liecurve.core.lie_algebra import levi_civita
        f = self.frame
        for _ in range(50):
            x, y = rng.standard_normal((2, f.dim))
            induced = hs.induced_connection(f, f.to_ambient(x), f.to_ambient(y))
            np.testing.assert_allclose(f.to_tangent(induced), levi_civita(f.sub, x, y), atol=1e-12)


class TestIntrinsic:
    """Ricci and scalar curvature"""

    def test_ricci_matches_oracle(self):
        """Closed Ricci operator equals the generic one on the grid"""
        for n in (2, 3, 4):
            for theta in THETA_GRID:
                f = hs.build_hypersurface(n, theta)
                np.testing.assert_allclose(hs.intrinsic_ricci_oracle(f), hs.intrinsic_ricci(f), atol=1e-9)

    def test_principal_ricci_horosphere(self):
        """theta = pi/2 -> (-1/2 x(2n-2), (n-1)/2 x1)"""
        frame = hs.build_hypersurface(3, math.pi / 2)
        assert hs.principal_ricci_closed(frame).clusters == ((-0.5, 4), (1.0, 1))
        numeric = hs.principal_ricci(frame, 1e-6)
        assert numeric.values == pytest.approx([-0.5, 1.0], abs=1e-12)
        assert numeric.multiplicities == [4, 1]

    def test_principal_ricci_ruled_n2(self):
        """theta = 0, n = 2 -> (-3/2, -5/4, -3/4), all negative"""
        values = hs.principal_ricci_values(2, 0.0)
        assert values == pytest.approx((-1.5, -1.25, -0.75), abs=1e-12)
        frame = hs.build_hypersurface(2, 0.0)
        assert hs.principal_ricci(frame, 1e-6).values == pytest.approx([-1.5, -1.25, -0.75], abs=1e-12)
        assert hs.classify_intrinsic(frame).negative_ricci

    def test_principal_ricci_ordering(self):
        """alpha1 < alpha2 < alpha3 away from pi/2"""
        for n in (2, 3, 5):
            for theta in THETA_GRID[:-1]:
                a1, a2, a3 = hs.principal_ricci_values(n, theta)
                assert a1 < a2 < a3

    @pytest.mark.parametrize("n,theta,expected", [
        (2, math.pi / 2, -0.5),
        (4, math.pi / 2, -1.5),
        (2, 0.0, -3.5),
        (3, 0.0, -8.5),
    ])
    def test_scalar(self, n, theta, expected):
        """Closed scalar curvature equals the Ricci trace"""
        frame = hs.build_hypersurface(n, theta)
        assert hs.intrinsic_scalar(frame) == pytest.approx(expected, abs=1e-12)
        assert float(np.trace(hs.intrinsic_ricci_oracle(frame))) == pytest.approx(expected, abs=1e-12)

    def test_never_einstein(self):
        """No grid hypersurface is Einstein, and scalar curvature is negative"""
        for theta in THETA_GRID:
            flags = hs.classify_intrinsic(hs.build_hypersurface(3, theta))
            assert not flags.einstein
            assert flags.negative_scalar


class TestSectional:
    """Sectional curvature and its extrema"""

    def test_examples(self):
        """span(T,V), span(Y1,Z0) and span(T,Y1) at pi/2"""
        theta = 0.6
        f = hs.build_hypersurface(3, theta)
        s, c = math.sin(theta), math.cos(theta)
        assert hs.intrinsic_sectional(f, Plane(f.T, f.e('X2'))) == pytest.approx(-0.25 + 0.25 * s * s)
        assert hs.intrinsic_sectional(f, Plane(f.e('Y1'), f.e('Z0'))) == pytest.approx(
            -0.25 + 0.5 * s * s - 0.25 * c * c)
        horo = hs.build_hypersurface(3, math.pi / 2)
        assert hs.intrinsic_sectional(horo, Plane(horo.e('Y1'), horo.e('Z0'))) == pytest.approx(0.25)
        assert hs.intrinsic_sectional(horo, Plane(horo.T, horo.e('Y1'))) == pytest.approx(-0.75)

    def test_three_paths_agree(self, rng):
        """Closed form, intrinsic oracle and Gauss equation agree on random planes"""
        for n in (2, 3, 4):
            for theta in THETA_GRID:
                f = hs.build_hypersurface(n, theta)
                for _ in range(20):
                    plane = f.plane_to_ambient(random_plane(f.dim, rng))
                    closed = hs.intrinsic_sectional(f, plane)
                    assert hs.oracle_sectional(f, plane) == pytest.approx(closed, abs=1e-9)
                    assert hs.gauss_sectional(f, plane) == pytest.approx(closed, abs=1e-9)

    def test_gauss_curvature(self, rng):
        """Full Gauss equation against the intrinsic curvature tensor"""
        f = hs.build_hypersurface(3, 1.1)
        for _ in range(20):
            coords = rng.standard_normal((4, f.dim))
            x, y, z, w = (f.to_ambient(v) for v in coords)
            intrinsic = float(riemann(f.sub, coords[0], coords[1], coords[2]) @ coords[3])
            assert hs.gauss_curvature(f, x, y, z, w) == pytest.approx(intrinsic, abs=1e-9)

    @pytest.mark.parametrize("theta,k_max,k_min,D", [
        (0.0, -0.25, -1.0, 3.0),
        (math.pi / 2, 0.25, -0.75, 4.0),
    ])
    def test_extrema_closed_n2(self, theta, k_max, k_min, D):
        """n = 2 endpoints"""
        report = hs.sectional_extrema_closed(hs.build_hypersurface(2, theta))
        assert report.max_closed == pytest.approx(k_max, abs=1e-12)
        assert report.min_closed == pytest.approx(k_min, abs=1e-12)
        assert report.D == pytest.approx(D, abs=1e-12)
        assert report.min_method is ExtremumMethod.CLOSED

    def test_extrema_closed_n3_ruled(self):
        """n > 2, theta = 0: max -1/4, minimum left to the search"""
        report = hs.sectional_extrema_closed(hs.build_hypersurface(3, 0.0))
        assert report.max_closed == pytest.approx(-0.25, abs=1e-12)
        assert report.min_closed is None
        assert report.min_method is ExtremumMethod.SEARCH

    def test_witness_planes_attain_extrema(self):
        """The closed-form witness planes realise the closed-form values"""
        for n in (2, 3, 4):
            for theta in THETA_GRID:
                f = hs.build_hypersurface(n, theta)
                argmax, argmin = hs.extremal_planes(f)
                assert hs.oracle_sectional(f, argmax) == pytest.approx(hs.max_sectional_value(n, theta), abs=1e-12)
                if n == 2:
                    assert hs.oracle_sectional(f, argmin) == pytest.approx(
                        hs.min_sectional_value(n, theta), abs=1e-12)
                else:
                    assert argmin is None

    def test_comparison(self):
        """max gap is zero at both endpoints and positive inside"""
        assert hs.compare_extrema(0.0).max_gap == pytest.approx(0.0, abs=1e-15)
        assert hs.compare_extrema(math.pi / 2).max_gap == pytest.approx(0.0, abs=1e-15)
        report = hs.compare_extrema(math.pi / 4)
        assert report.max_gap > 1e-3
        assert report.max_gap == pytest.approx(hs.max_sectional_value(3, math.pi / 4)
                                               - hs.max_sectional_value(2, math.pi / 4), abs=1e-14)

    def test_comparison_gap_near_horosphere(self):
        """Gap stays positive and decays like 3 cos^6 / 16 next to pi/2"""
        for theta in np.linspace(0.1, 1.4, 14):
            C, D = hs.comparison_terms(theta)
            assert hs.comparison_gap(theta) == pytest.approx((C - D) / 8, rel=1e-9)
        for delta in (1e-3, 1e-5):
            c = math.sin(delta)
            gap = hs.comparison_gap(math.pi / 2 - delta)
            assert gap > 0.0
            assert gap == pytest.approx(3 * c ** 6 / 16, rel=1e-3)

    def test_d_identity(self):
        """D^2 = (3c^2 - 4s^2)^2 + 64 s^2 c^2"""
        for theta in np.linspace(0, math.pi / 2, 11):
            _, D = hs.comparison_terms(theta)
            c, s = math.cos(theta), math.sin(theta)
            assert D ** 2 == pytest.approx((3 * c * c - 4 * s * s) ** 2 + 64 * s * s * c * c, abs=1e-12)

    def test_search_matches_closed(self, fast_cfg):
        """Plane search recovers the closed maximum (and the n = 2 minimum)"""
        for n, theta in [(2, math.pi / 5), (3, math.pi / 3)]:
            report = hs.sectional_extrema(hs.build_hypersurface(n, theta), fast_cfg)
            assert report.max_search == pytest.approx(report.max_closed, abs=1e-6)
            assert report.max_search <= report.max_closed + 1e-9
            if n == 2:
                assert report.min_search == pytest.approx(report.min_closed, abs=1e-6)
            else:
                assert report.k_min == report.min_search

    @pytest.mark.parametrize("n, theta", [(3, math.pi / 3), (4, 0.98), (3, 0.2)])
    def test_search_converges_tightly(self, fast_cfg, n, theta):
        """With 16 restarts the maximum is reached well inside 1e-6"""
        report = hs.sectional_extrema(hs.build_hypersurface(n, theta), fast_cfg)
        assert abs(report.max_search - report.max_closed) < 1e-8


class TestReport:
    """Degeneration and the full report dictionary"""

    def test_degeneration(self):
        """Nilpotent exactly at pi/2, solvable always"""
        for theta in THETA_GRID:
            info = hs.degeneration(hs.build_hypersurface(3, theta))
            assert info['solvable']
            assert info['nilpotent'] == (theta == math.pi / 2)

    def test_report_keys(self, fast_cfg):
        """Report carries the published keys"""
        report = hs.curvature_report(hs.build_hypersurface(2, 0.0), fast_cfg)
        for key in ('n', 'theta', 'principal_curvatures', 'mean_curvature', 'flags',
                    'principal_ricci', 'scalar', 'sectional'):
            assert key in report
        assert set(report['sectional']) >= {'max_closed', 'min_closed', 'max_search', 'min_search', 'C', 'D'}
        assert report['flags']['austere'] is True
        assert [c['multiplicity'] for c in report['principal_curvatures']] == [1, 1, 1]

    def test_report_cluster_tol(self, fast_cfg):
        """With cluster_tol the spectra come from numerical clustering"""
        report = hs.curvature_report(hs.build_hypersurface(3, math.pi / 2), fast_cfg, cluster_tol=1e-6)
        assert report['principal_curvatures'] == [{'value': pytest.approx(0.5), 'multiplicity': 4},
                                                  {'value': pytest.approx(1.0), 'multiplicity': 1}]


class TestSweep:
    """theta sweeps"""

    def test_n2_rows(self):
        """n = 2, 3 samples: theta = 0, pi/4, pi/2 with k_max, k_min from closed forms"""
        rows = hs.sweep(2, 3)
        assert [r.theta for r in rows] == pytest.approx([0.0, math.pi / 4, math.pi / 2])
        assert rows[0].k_max == pytest.approx(-0.25)
        assert rows[0].k_min == pytest.approx(-1.0)
        assert rows[-1].scalar == pytest.approx(-0.5)

    def test_n4_searched_minimum(self, fast_cfg):
        """n = 4, 2 samples: last scalar is -3/2, k_min from search"""
        rows = hs.sweep(4, 2, fast_cfg)
        assert rows[-1].scalar == pytest.approx(-1.5)
        assert rows[-1].k_min < rows[-1].k_max

    def test_threads_preserve_order(self):
        """Threaded sweep returns rows in theta order, identical to serial"""
        serial = hs.sweep(2, 6)
        threaded = hs.sweep(2, 6, workers=3)
        assert [r.to_record() for r in serial] == [r.to_record() for r in threaded]

    def test_too_few_samples(self):
        """A sweep needs at least two samples"""
        with pytest.raises(ValueError):
            hs.sweep(2, 1)
