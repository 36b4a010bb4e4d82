"""Domain types and Gaussian-beam field evaluation.

The trapped particle is a hydrogen-like ion: a core of mass m_n and charge
q_n plus one valence electron (m_e, q_e < 0), with total mass M and total
charge Q = q_n + q_e.  A single focused TEM00 travelling wave drives a
closed optical dipole transition at omega_eg with natural linewidth Gamma.

Everything in this module is a pure function of immutable inputs and works
in strict SI units, angular frequencies in rad/s.  Positions are measured
from the beam focus; the beam propagates along ``beam.axis``.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constants import CONST

TWO_PI = 2.0 * np.pi


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IonSpecies:
    """A hydrogen-like ion with one valence electron.

    Parameters
    ----------
    total_mass : float
        M, kg.
    total_charge : float
        Q, C.  Zero reproduces the neutral-atom limit; sign is kept.
    valence_electron_charge : float
        q_e, C, negative by convention.
    """

    total_mass: float
    total_charge: float = 0.0
    valence_electron_charge: float = -CONST.e_charge

    def __post_init__(self):
        if not self.total_mass > CONST.m_electron:
            raise ValueError("total mass must exceed the electron mass")
        if not self.valence_electron_charge < 0:
            raise ValueError("valence electron charge must be negative")

    @classmethod
    def from_amu(cls, mass_u: float, charge_e: float) -> "IonSpecies":
        """Build from a mass in atomic mass units and a charge in units of e."""
        return cls(total_mass=mass_u * CONST.atomic_mass_unit,
                   total_charge=charge_e * CONST.e_charge)

    @property
    def core_mass(self) -> float:
        """m_n = M - m_e, kg."""
        return self.total_mass - CONST.m_electron

    @property
    def core_charge(self) -> float:
        """q_n = Q - q_e, C."""
        return self.total_charge - self.valence_electron_charge

    @property
    def reduced_mass(self) -> float:
        """mu = m_e m_n / M, kg."""
        return CONST.m_electron * self.core_mass / self.total_mass

    @property
    def effective_dipole_charge(self) -> float:
        """q_eff = |q_e| + (m_e/M) Q, C.

        The net charge drags the centre of mass along with the internal
        oscillation, renormalising the dipole coupling charge.  For Q = 0
        this is exactly |q_e|.
        """
        return abs(self.valence_electron_charge) + \
            (CONST.m_electron / self.total_mass) * self.total_charge


@dataclass(frozen=True)
class Transition:
    """A closed optical dipole transition of the valence electron.

    The dipole matrix element is always derived from the linewidth via the
    spontaneous-emission relation d = sqrt(3 pi eps0 hbar c^3 Gamma /
    omega_eg^3); it is never user-supplied, which keeps Gamma and d
    consistent by construction.
    """

    omega_eg: float      # rad/s
    linewidth: float     # Gamma, rad/s

    def __post_init__(self):
        if not self.omega_eg > 0:
            raise ValueError("omega_eg must be positive")
        if not self.linewidth > 0:
            raise ValueError("linewidth must be positive")
        if not self.linewidth / self.omega_eg < 1e-3:
            raise ValueError("Gamma/omega_eg >= 1e-3: not an optical "
                             "two-level regime")

    @property
    def dipole_moment(self) -> float:
        """Transition dipole d, C m."""
        return float(np.sqrt(3.0 * np.pi * CONST.eps0 * CONST.hbar
                             * CONST.c ** 3 * self.linewidth
                             / self.omega_eg ** 3))

    @property
    def characteristic_size(self) -> float:
        """r = d/|q_e| with the elementary valence charge, m.

        Sets the multipole expansion parameter k*r (~1e-3 for a typical
        ultraviolet transition).
        """
        return self.dipole_moment / CONST.e_charge


@dataclass(frozen=True)
class LaserBeam:
    """A focused TEM00 travelling wave.

    Exactly one of ``power`` and ``peak_intensity`` is stored as primary;
    the other is derived through I0 = 2P/(pi w0^2).  The detuning is
    signed, delta = omega_L - omega_eg, with red detuning negative.
    """

    wavelength: float            # m
    waist_radius: float          # w0, m
    detuning: float              # delta, rad/s
    power: float = None          # W
    peak_intensity: float = None  # W/m^2
    axis: tuple = (0.0, 0.0, 1.0)

    def __post_init__(self):
        if not self.wavelength > 0:
            raise ValueError("wavelength must be positive")
        if not self.waist_radius > self.wavelength:
            raise ValueError("waist must exceed the wavelength "
                             "(paraxial TEM00 validity)")
        if (self.power is None) == (self.peak_intensity is None):
            raise ValueError("specify exactly one of power, peak_intensity")
        primary = self.power if self.power is not None else self.peak_intensity
        if not primary >= 0:
            raise ValueError("beam power/intensity must be non-negative")
        n = np.asarray(self.axis, dtype=float)
        if n.shape != (3,) or not np.isfinite(n).all():
            raise ValueError("axis must be a finite 3-vector")
        norm = float(np.linalg.norm(n))
        if not norm > 0:
            raise ValueError("axis must be non-zero")
        object.__setattr__(self, "axis", tuple(n / norm))

    @property
    def omega_laser(self) -> float:
        """omega_L = 2 pi c / lambda, rad/s."""
        return TWO_PI * CONST.c / self.wavelength

    @property
    def wavenumber(self) -> float:
        """k = 2 pi / lambda, 1/m."""
        return TWO_PI / self.wavelength

    @property
    def rayleigh_range(self) -> float:
        """zR = pi w0^2 / lambda, m."""
        return np.pi * self.waist_radius ** 2 / self.wavelength

    @property
    def beam_power(self) -> float:
        """P, W (derived from peak intensity when that is primary)."""
        if self.power is not None:
            return self.power
        return self.peak_intensity * np.pi * self.waist_radius ** 2 / 2.0

    @property
    def focus_intensity(self) -> float:
        """I0 = 2P/(pi w0^2), W/m^2."""
        if self.peak_intensity is not None:
            return self.peak_intensity
        return 2.0 * self.power / (np.pi * self.waist_radius ** 2)

    def spot_size(self, z):
        """w(z) = w0 sqrt(1 + (z/zR)^2), m."""
        return self.waist_radius * np.sqrt(1.0 + (z / self.rayleigh_range) ** 2)

    def scaled_power(self, factor: float) -> "LaserBeam":
        """Same beam with the power multiplied by ``factor``."""
        if self.power is not None:
            return LaserBeam(self.wavelength, self.waist_radius, self.detuning,
                             power=self.power * factor, axis=self.axis)
        return LaserBeam(self.wavelength, self.waist_radius, self.detuning,
                         peak_intensity=self.peak_intensity * factor,
                         axis=self.axis)


@dataclass(frozen=True)
class TrapSetup:
    """The single input record for all analyses.

    static_curvatures are signed squared angular frequencies (rad/s)^2 per
    axis in the beam frame (two transverse axes, then the propagation
    axis).  Negative entries describe anti-confining static fields.  The
    Laplace sum constraint on electrostatic curvatures is the caller's
    responsibility and deliberately not enforced here.
    """

    ion: IonSpecies
    transition: Transition
    beam: LaserBeam
    static_curvatures: tuple = (0.0, 0.0, 0.0)
    temperature: float = 300.0   # K, environment (blackbody bath)

    def __post_init__(self):
        if not self.temperature >= 0:
            raise ValueError("temperature must be non-negative")
        cur = np.asarray(self.static_curvatures, dtype=float)
        if cur.shape != (3,) or not np.isfinite(cur).all():
            raise ValueError("static_curvatures must be a finite 3-vector")
        object.__setattr__(self, "static_curvatures", tuple(float(v) for v in cur))
        # laser frequency, transition frequency and detuning must agree
        mismatch = self.beam.omega_laser - self.transition.omega_eg - self.beam.detuning
        if abs(mismatch) > 1e-6 * self.transition.omega_eg:
            raise ValueError("inconsistent beam/transition: omega_L - omega_eg "
                             f"differs from detuning by {mismatch:g} rad/s")

    @property
    def effective_dipole_moment(self) -> float:
        """d_eff = (q_eff/|q_e|) d, C m (charge-corrected dipole coupling)."""
        scale = self.ion.effective_dipole_charge / abs(self.ion.valence_electron_charge)
        return scale * self.transition.dipole_moment


def setup_from_beam(ion: IonSpecies, beam: LaserBeam, linewidth: float,
                    static_curvatures=(0.0, 0.0, 0.0),
                    temperature: float = 300.0) -> TrapSetup:
    """Assemble a TrapSetup, deriving omega_eg from the beam and detuning."""
    transition = Transition(omega_eg=beam.omega_laser - beam.detuning,
                            linewidth=linewidth)
    return TrapSetup(ion=ion, transition=transition, beam=beam,
                     static_curvatures=static_curvatures,
                     temperature=temperature)


# ---------------------------------------------------------------------------
# beam geometry and fields
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BeamGeometry:
    rayleigh_range: float            # m
    wavenumber: float                # 1/m
    omega_laser: float               # rad/s
    spot_size: Callable[[float], float]


def beam_geometry(beam: LaserBeam) -> BeamGeometry:
    """Standard TEM00 geometry derived from wavelength and waist."""
    return BeamGeometry(rayleigh_range=beam.rayleigh_range,
                        wavenumber=beam.wavenumber,
                        omega_laser=beam.omega_laser,
                        spot_size=beam.spot_size)


def _axial_transverse(beam: LaserBeam, position):
    """Split positions (..., 3) into axial coordinate z and transverse r^2."""
    pos = np.asarray(position, dtype=float)
    n = np.asarray(beam.axis)
    z = pos @ n
    r2 = np.maximum(np.sum(pos * pos, axis=-1) - z * z, 0.0)
    return z, r2


def intensity_at(beam: LaserBeam, position):
    """TEM00 intensity I(r, z) = 2P/(pi w(z)^2) exp(-2 r^2/w(z)^2), W/m^2.

    ``position`` is measured from the focus; accepts shape (3,) or (..., 3).
    """
    z, r2 = _axial_transverse(beam, position)
    zr = beam.rayleigh_range
    w2 = beam.waist_radius ** 2 * (1.0 + (z / zr) ** 2)
    return 2.0 * beam.beam_power / (np.pi * w2) * np.exp(-2.0 * r2 / w2)


def intensity_gradient_at(beam: LaserBeam, position):
    """Analytic gradient of :func:`intensity_at`, shape (..., 3), W/m^3."""
    pos = np.asarray(position, dtype=float)
    n = np.asarray(beam.axis)
    z = pos @ n
    r_vec = pos - np.multiply.outer(z, n)
    r2 = np.sum(r_vec * r_vec, axis=-1)
    zr = beam.rayleigh_range
    w0sq = beam.waist_radius ** 2
    w2 = w0sq * (1.0 + (z / zr) ** 2)
    inten = 2.0 * beam.beam_power / (np.pi * w2) * np.exp(-2.0 * r2 / w2)
    # transverse: dI/dr = -4 r I / w^2; axial via dw^2/dz = 2 w0^2 z / zR^2
    trans = (-4.0 * inten / w2)[..., np.newaxis] * r_vec
    dw2 = 2.0 * w0sq * z / zr ** 2
    axial = inten * dw2 * (2.0 * r2 - w2) / w2 ** 2
    return trans + np.multiply.outer(axial, n)


@dataclass(frozen=True)
class FieldAmplitudes:
    """Envelope peak amplitudes of the oscillation at omega_L."""

    electric: float        # E_L, V/m
    magnetic: float        # B_L = E_L/c, T
    vector_potential: float  # A_L = E_L/omega_L, T m


def field_amplitudes_at(setup: TrapSetup, position) -> FieldAmplitudes:
    """Plane-wave envelope amplitudes from the local intensity.

    E_L = sqrt(2 I / (eps0 c)); the identities E_L = c B_L = omega_L A_L
    hold exactly.
    """
    inten = intensity_at(setup.beam, position)
    e_amp = np.sqrt(2.0 * inten / (CONST.eps0 * CONST.c))
    return FieldAmplitudes(electric=e_amp,
                           magnetic=e_amp / CONST.c,
                           vector_potential=e_amp / setup.beam.omega_laser)


def dipole_from_linewidth(transition: Transition) -> float:
    """d = sqrt(3 pi eps0 hbar c^3 Gamma / omega_eg^3), C m."""
    return transition.dipole_moment


def rabi_frequency_at(setup: TrapSetup, position):
    """Rabi frequency Omega(R) = d_eff E_L(R) / hbar, rad/s.

    Polarization is modelled as a scalar overlap factor of 1 (circular
    polarization on a closed transition); the matrix-element projection is
    absorbed into the dipole moment.
    """
    amps = field_amplitudes_at(setup, position)
    return setup.effective_dipole_moment * amps.electric / CONST.hbar
