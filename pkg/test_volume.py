"""Tests for the Lobachevsky function and the volume formulas."""
import math

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from spinekit.errors import DomainError
from spinekit.models.schemas import GluingConvention
from spinekit.services.triangulate import triangulator
from spinekit.services.volume import clausen2, volume_service

IDEAL_REGULAR = 3.66386237670887606  # 8 Lambda(pi/4), four times Catalan's constant

lam = volume_service.lobachevsky
finite = st.floats(min_value=-20.0, max_value=20.0, allow_nan=False)


class TestLobachevsky:
    def test_zeros(self):
        assert lam(0.0) == pytest.approx(0.0, abs=1e-14)
        assert lam(math.pi / 2) == pytest.approx(0.0, abs=1e-12)
        assert lam(math.pi) == pytest.approx(0.0, abs=1e-12)

    def test_maximum_at_pi_over_6(self):
        peak = lam(math.pi / 6)
        assert peak == pytest.approx(0.5074708032048268, abs=1e-11)
        assert peak > lam(math.pi / 6 - 1e-3)
        assert peak > lam(math.pi / 6 + 1e-3)

    def test_ideal_regular_tetrahedron(self):
        assert 8 * lam(math.pi / 4) == pytest.approx(IDEAL_REGULAR, abs=1e-12)

    @given(finite)
    def test_odd(self, x):
        assert lam(-x) == pytest.approx(-lam(x), abs=1e-12)

    @given(finite)
    def test_periodic(self, x):
        assert lam(x + math.pi) == pytest.approx(lam(x), abs=1e-11)

    @given(st.floats(min_value=-3.0, max_value=3.0, allow_nan=False))
    def test_duplication(self, x):
        assert lam(2 * x) == pytest.approx(2 * lam(x) + 2 * lam(x + math.pi / 2), abs=1e-11)

    @pytest.mark.parametrize("x", np.linspace(0.05, math.pi - 0.05, 13).tolist())
    def test_matches_quadrature(self, x):
        assert lam(x) == pytest.approx(volume_service.lobachevsky_quadrature(x), abs=1e-9)

    @pytest.mark.parametrize("x", [0.3, 1.0, 2.5, -0.7])
    def test_matches_fourier_series(self, x):
        assert lam(x) == pytest.approx(volume_service.lobachevsky_fourier(x), abs=1e-5)

    def test_clausen_at_pi_over_2_is_catalan(self):
        assert clausen2(math.pi / 2) == pytest.approx(IDEAL_REGULAR / 4, abs=1e-12)

    @pytest.mark.parametrize("x", [math.inf, -math.inf, math.nan])
    def test_non_finite(self, x):
        with pytest.raises(DomainError):
            lam(x)


class TestTruncatedTetrahedron:
    @pytest.mark.parametrize("theta", [0.0, 0.1, math.pi / 12, 2 * math.pi / 15, math.pi / 6, math.pi / 4, 1.0])
    def test_formulas_agree(self, theta):
        pair = volume_service.volume_pair(theta)
        assert pair.agreed
        assert pair.via_integral == pytest.approx(pair.via_lobachevsky, abs=1e-9)

    def test_limit_at_zero(self):
        assert volume_service.vol_regular_truncated_integral(0.0) == pytest.approx(IDEAL_REGULAR, abs=1e-12)
        assert volume_service.vol_regular_truncated_closed(0.0) == pytest.approx(IDEAL_REGULAR, abs=1e-10)

    def test_known_value(self):
        assert volume_service.vol_regular_truncated_closed(math.pi / 6) == pytest.approx(3.22599, abs=1e-4)

    def test_decreasing_in_theta(self):
        values = [volume_service.vol_regular_truncated_closed(t) for t in np.linspace(0.0, 1.0, 11)]
        assert all(a > b for a, b in zip(values, values[1:]))

    @hyp_settings(max_examples=25, deadline=None)
    @given(st.floats(min_value=0.0, max_value=1.04, allow_nan=False))
    def test_formulas_agree_everywhere(self, theta):
        assert volume_service.volume_pair(theta).discrepancy <= 1e-9

    @pytest.mark.parametrize("theta", [-0.1, math.pi / 3, 2.0, math.nan])
    def test_domain(self, theta):
        with pytest.raises(DomainError):
            volume_service.vol_regular_truncated_integral(theta)
        with pytest.raises(DomainError):
            volume_service.vol_regular_truncated_closed(theta)


class TestFamilies:
    def test_mn_values(self):
        assert volume_service.vol_Mn(2) == pytest.approx(6.452, abs=1e-2)

    def test_mn_per_tetrahedron_increases_to_ideal(self):
        per_tet = [volume_service.vol_Mn(n) / n for n in range(2, 12)]
        assert all(a < b for a, b in zip(per_tet, per_tet[1:]))
        assert per_tet[-1] < IDEAL_REGULAR

    def test_wn_values(self):
        assert volume_service.vol_Wn(5) == pytest.approx(16.9514, abs=1e-3)
        assert volume_service.vol_Wn(9) == pytest.approx(32.2353, abs=1e-3)
        assert volume_service.vol_Wn(9) > volume_service.vol_Wn(5)

    @pytest.mark.parametrize("n", [1, 0, True, 2.0])
    def test_mn_domain(self, n):
        with pytest.raises(DomainError):
            volume_service.vol_Mn(n)

    @pytest.mark.parametrize("n", [1, 6, 7, 8])
    def test_wn_domain(self, n):
        with pytest.raises(DomainError):
            volume_service.vol_Wn(n)


class TestRegularAngle:
    def test_g5(self, g5_tri):
        angle = volume_service.regular_angle(g5_tri)
        assert angle.theta == pytest.approx(2 * math.pi / 15, abs=1e-15)
        result = volume_service.triangulation_volume(g5_tri)
        assert result.scale == 5
        assert result.scale * result.value == pytest.approx(volume_service.vol_Wn(5), abs=1e-9)

    def test_g9(self, g9_tri):
        assert volume_service.regular_angle(g9_tri).theta == pytest.approx(2 * math.pi / 27, abs=1e-15)

    def test_one_class(self, drawn_tri):
        assert volume_service.regular_angle(drawn_tri).theta == pytest.approx(2 * math.pi / 54, abs=1e-15)

    def test_small_classes_have_no_angle(self, doubled_tet):
        assert volume_service.regular_angle(doubled_tet) is None
        assert volume_service.triangulation_volume(doubled_tet) is None

    def test_unequal_classes_have_no_angle(self, g5_graph):
        convention = GluingConvention(color_shift=(2, 0, 1))
        triangulation = triangulator.from_ograph(g5_graph, convention)
        assert volume_service.regular_angle(triangulation) is None
