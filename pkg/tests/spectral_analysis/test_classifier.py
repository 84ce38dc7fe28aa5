import cmath

import numpy as np
import pytest

from hahnspec.spectral_analysis import (GoldbergState, InverseCondition,
                                        RangeCondition, SpectralRegion,
                                        classify_adjoint_point, classify_point,
                                        goldberg_membership)

R = SpectralRegion


class TestClassifyPoint:
    def test_resolvent_point(self):
        c = classify_point(3)
        assert c.region == R.RESOLVENT_SET
        assert c.goldberg.label == "A1"
        assert not (c.in_ap or c.in_delta or c.in_co or c.adjoint_eigen)
        assert not c.in_spectrum

    def test_residual_point(self):
        c = classify_point(0.5)
        assert c.region == R.RESIDUAL_SPECTRUM
        assert c.goldberg == GoldbergState(range_row=RangeCondition.C, inverse_col=InverseCondition.UNBOUNDED)
        assert c.in_ap and c.in_delta and c.in_co and c.adjoint_eigen

    def test_boundary_point(self):
        c = classify_point(2)
        assert c.region == R.CONTINUOUS_SPECTRUM
        assert str(c.goldberg) == "B2"
        assert c.in_ap and c.in_delta
        assert not c.in_co and not c.adjoint_eigen

    def test_singular_diagonal_is_residual(self):
        """Test that alpha = 1 (r = 0) lies in the residual spectrum."""
        assert classify_point(1).region == R.RESIDUAL_SPECTRUM

    def test_boundary_tolerance(self):
        assert classify_point(2 + 1e-10).region == R.CONTINUOUS_SPECTRUM
        assert classify_point(2 + 1e-6).region == R.RESOLVENT_SET
        assert classify_point(2 + 1e-6, boundary_tol=1e-5).region == R.CONTINUOUS_SPECTRUM

    @pytest.mark.parametrize("r", [0.0, 0.3, 0.999, 1.0, 1.001, 2.5])
    def test_radial_symmetry(self, r):
        """Test that the verdict depends on |1 - alpha| only."""
        verdicts = {
            (c.region, c.goldberg, c.in_ap, c.in_delta, c.in_co, c.adjoint_eigen)
            for c in (classify_point(1 + r * cmath.exp(1j * theta)) for theta in np.linspace(0, 2 * np.pi, 24))
        }
        assert len(verdicts) == 1

    def test_table_coherence(self, reference_grid):
        for alpha in reference_grid:
            c = classify_point(alpha)
            assert goldberg_membership(c.goldberg) == c.memberships()

    def test_only_three_goldberg_states(self, reference_grid):
        labels = {classify_point(alpha).goldberg.label for alpha in reference_grid}
        assert labels == {"A1", "B2", "C2"}

    def test_reference_grid_census(self, reference_grid):
        """Test the exact region split of the reference lattice."""
        tol = 1e-9
        for alpha in reference_grid:
            c = classify_point(alpha, boundary_tol=tol)
            r = abs(1 - alpha)
            assert c.region != R.POINT_SPECTRUM
            assert (c.region == R.RESIDUAL_SPECTRUM) == (r < 1 - tol)
            assert (c.region == R.CONTINUOUS_SPECTRUM) == (abs(r - 1) <= tol)
            assert c.in_ap == c.in_delta == (r <= 1 + tol)
            assert c.in_co == (r < 1 - tol)


class TestClassifyAdjointPoint:
    @pytest.mark.parametrize("alpha", [3, 0.5, 2, 1, 1 + 1j])
    def test_duality(self, alpha):
        c = classify_point(alpha)
        a = classify_adjoint_point(alpha)
        assert a.in_spectrum == c.in_spectrum
        assert a.in_point == c.in_co
        assert a.in_ap == c.in_delta
        assert a.in_delta == c.in_ap

    def test_adjoint_point_spectrum_is_open_disk(self):
        assert classify_adjoint_point(0.5).in_point
        assert not classify_adjoint_point(2).in_point
        assert not classify_adjoint_point(3).in_point
