"""Independent radial eigensolver used to audit the two-body estimates."""

import math

import pytest

from etkit import (
    DomainError,
    InteractionTriple,
    NoBoundState,
    PowerLaw2Params,
    energy,
    powerlaw2_system,
    radial_eigenvalue,
)

OSC = InteractionTriple(lambda r: r * r, lambda r: 2.0 * r, lambda r: 2.0, "r^2")
COULOMB = InteractionTriple(
    lambda r: -1.0 / r, lambda r: 1.0 / r**2, lambda r: -2.0 / r**3, "-1/r"
)
LINEAR = InteractionTriple(lambda r: r, lambda r: 1.0, lambda r: 0.0, "r")

# first zero of the Airy function fixes the linear-potential ground state
AIRY_GROUND = 2.3381074104597674


class TestExactSpectra:
    def test_oscillator_ground(self):
        # mu = 1/2 and V = r^2 give omega = 2, levels 2 (2 n + l) + 3
        assert radial_eigenvalue(0.5, OSC, l=0, n_r=0) == pytest.approx(3.0, abs=1e-9)

    @pytest.mark.parametrize(
        "l,n_r,expected",
        [(1, 0, 5.0), (0, 1, 7.0), (2, 0, 7.0), (0, 2, 11.0), (2, 1, 11.0)],
    )
    def test_oscillator_tower(self, l, n_r, expected):
        assert radial_eigenvalue(0.5, OSC, l=l, n_r=n_r) == pytest.approx(
            expected, abs=2e-9
        )

    def test_coulomb_ground(self):
        assert radial_eigenvalue(0.5, COULOMB, l=0, n_r=0) == pytest.approx(
            -0.25, abs=1e-9
        )

    @pytest.mark.parametrize("l,n_r", [(0, 1), (1, 0)])
    def test_coulomb_first_shell(self, l, n_r):
        assert radial_eigenvalue(0.5, COULOMB, l=l, n_r=n_r) == pytest.approx(
            -0.0625, abs=1e-9
        )

    def test_coulomb_rydberg_series(self):
        for n_r in range(3):
            n = n_r + 1
            assert radial_eigenvalue(0.5, COULOMB, l=0, n_r=n_r) == pytest.approx(
                -0.25 / n**2, rel=1e-8
            )

    def test_linear_ground_is_airy_zero(self):
        assert radial_eigenvalue(0.5, LINEAR, l=0, n_r=0) == pytest.approx(
            AIRY_GROUND, abs=1e-6
        )

    def test_mass_scaling(self):
        # doubling mu scales Coulomb binding linearly
        assert radial_eigenvalue(1.0, COULOMB, l=0, n_r=0) == pytest.approx(
            -0.5, abs=1e-9
        )


class TestSpectralStructure:
    def test_levels_increase_with_radial_number(self):
        levels = [radial_eigenvalue(0.5, LINEAR, l=0, n_r=k) for k in range(3)]
        assert levels[0] < levels[1] < levels[2]

    def test_levels_increase_with_orbital_number(self):
        levels = [radial_eigenvalue(0.5, LINEAR, l=l, n_r=0) for l in range(3)]
        assert levels[0] < levels[1] < levels[2]


class TestNumericalBehaviour:
    def test_fourth_order_convergence(self):
        # halving the step divides the discretisation error by ~16
        coarse = radial_eigenvalue(0.5, OSC, l=0, n_r=0, rmax=12.0, npoints=500)
        fine = radial_eigenvalue(0.5, OSC, l=0, n_r=0, rmax=12.0, npoints=1000)
        ratio = abs(coarse - 3.0) / abs(fine - 3.0)
        assert 12.0 <= ratio <= 20.0

    def test_explicit_box_is_respected(self):
        e = radial_eigenvalue(0.5, OSC, l=0, n_r=0, rmax=9.0, npoints=3000)
        assert e == pytest.approx(3.0, abs=1e-8)

    def test_deterministic(self):
        a = radial_eigenvalue(0.5, LINEAR, l=1, n_r=1)
        b = radial_eigenvalue(0.5, LINEAR, l=1, n_r=1)
        assert a == b


class TestNoBoundState:
    def test_shallow_well_does_not_bind(self):
        v0, rr = 0.01, 1.0
        shallow = InteractionTriple(
            value=lambda r: -v0 * math.exp(-(r * r) / (rr * rr)),
            d1=lambda r: 2.0 * v0 * r / (rr * rr) * math.exp(-(r * r) / (rr * rr)),
            d2=lambda r: v0
            * (2.0 / (rr * rr) - 4.0 * r * r / rr**4)
            * math.exp(-(r * r) / (rr * rr)),
            label="shallow well",
        )
        with pytest.raises(NoBoundState):
            radial_eigenvalue(0.5, shallow, l=0, n_r=0)

    def test_deep_well_binds_ground_but_not_high_orbital(self):
        # 2 mu V0 R^2 = 10 clears the critical depth of a 3D well
        v0 = 10.0
        well = InteractionTriple(
            value=lambda r: -v0 * math.exp(-r * r),
            d1=lambda r: 2.0 * v0 * r * math.exp(-r * r),
            d2=lambda r: v0 * (2.0 - 4.0 * r * r) * math.exp(-r * r),
            label="moderate well",
        )
        assert radial_eigenvalue(0.5, well, l=0, n_r=0) == pytest.approx(
            -2.5434016322, abs=1e-8
        )
        with pytest.raises(NoBoundState):
            radial_eigenvalue(0.5, well, l=3, n_r=0)


class TestValidation:
    def test_rejects_bad_mass(self):
        with pytest.raises(DomainError):
            radial_eigenvalue(0.0, OSC, l=0, n_r=0)
        with pytest.raises(DomainError):
            radial_eigenvalue(-1.0, OSC, l=0, n_r=0)

    def test_rejects_bad_quantum_numbers(self):
        with pytest.raises(DomainError):
            radial_eigenvalue(0.5, OSC, l=-1, n_r=0)
        with pytest.raises(DomainError):
            radial_eigenvalue(0.5, OSC, l=0, n_r=-1)


class TestAgainstEnvelope:
    def test_quadratic_pair_is_reproduced_exactly(self):
        # for b = 2 the two-body estimate is exact: both routes give 3
        spec = powerlaw2_system(PowerLaw2Params(m=1.0, a=1.0, b=2.0), 2)
        e_env = energy(spec, 1.5).E
        e_ref = radial_eigenvalue(0.5, OSC, l=0, n_r=0)
        assert e_env == pytest.approx(e_ref, abs=1e-9)
