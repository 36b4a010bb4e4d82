"""Two-level dipole-trap physics.

The optically induced mean force on the centre of mass, after averaging
over the optical oscillation, is

    F = -(hbar delta / 2) grad ln(1 + s) + (hbar Gamma / 2) s/(1+s) k_L n

with s(R) the saturation parameter.  The first term is the conservative
dipole force, the second the radiation pressure along the propagation
axis.  For weak saturation the dipole force derives from the effective
potential V_eff = (hbar delta / 2) s, which is what the trap depth and
harmonic frequencies reported here are based on; the log form
(hbar delta / 2) ln(1 + s) is the exact antiderivative of the dipolar term
and is available as a separate mode.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .constants import CONST
from .errors import BlueDetunedUnsupported, SaturationValidityWarning
from .model import TrapSetup, intensity_gradient_at, rabi_frequency_at

_FOCUS = (0.0, 0.0, 0.0)


def saturation_at(setup: TrapSetup, position):
    """Saturation parameter s(R) = (Omega^2/2) / (delta^2 + Gamma^2/4)."""
    omega = rabi_frequency_at(setup, position)
    delta = setup.beam.detuning
    gamma = setup.transition.linewidth
    return 0.5 * omega ** 2 / (delta ** 2 + 0.25 * gamma ** 2)


def _saturation_gradient(setup: TrapSetup, position):
    """grad s; s is proportional to intensity so this reuses grad I."""
    s0 = saturation_at(setup, _FOCUS)
    i0 = setup.beam.focus_intensity
    return (s0 / i0) * intensity_gradient_at(setup.beam, position)


def effective_potential_at(setup: TrapSetup, position, mode: str = "low_sat"):
    """AC-Stark potential for the centre of mass, J.

    mode="low_sat" : V = (hbar delta / 2) s(R)          (weak drive)
    mode="exact_log": V = (hbar delta / 2) ln(1 + s(R))  (two-level exact)

    The two differ by a relative factor s/2 + O(s^2).  Red detuning
    (delta < 0) makes the potential attractive towards high intensity.
    """
    s = saturation_at(setup, position)
    half = 0.5 * CONST.hbar * setup.beam.detuning
    if mode == "low_sat":
        return half * s
    if mode == "exact_log":
        return half * np.log1p(s)
    raise ValueError(f"unknown potential mode: {mode!r}")


def dipole_force_at(setup: TrapSetup, position, mode: str = "exact_log"):
    """Conservative dipole force -grad V, shape (..., 3), N."""
    grad_s = _saturation_gradient(setup, position)
    half = 0.5 * CONST.hbar * setup.beam.detuning
    if mode == "low_sat":
        return -half * grad_s
    if mode == "exact_log":
        s = saturation_at(setup, position)
        return -half / (1.0 + s)[..., np.newaxis] * grad_s
    raise ValueError(f"unknown potential mode: {mode!r}")


@dataclass(frozen=True)
class MeanForce:
    """Optical mean force decomposed into its two physical parts."""

    dipolar: np.ndarray             # N, conservative, -grad (hbar d/2) ln(1+s)
    radiation_pressure: np.ndarray  # N, dissipative, along the beam axis

    @property
    def total(self) -> np.ndarray:
        return self.dipolar + self.radiation_pressure


def mean_force_at(setup: TrapSetup, position) -> MeanForce:
    """Mean optical force after averaging over the optical period."""
    dip = dipole_force_at(setup, position, mode="exact_log")
    s = saturation_at(setup, position)
    gamma = setup.transition.linewidth
    k = setup.beam.wavenumber
    mag = 0.5 * CONST.hbar * gamma * (s / (1.0 + s)) * k
    rp = np.multiply.outer(mag, np.asarray(setup.beam.axis))
    return MeanForce(dipolar=dip, radiation_pressure=rp)


def scattering_rate_at(setup: TrapSetup, position):
    """Photon scattering rate Gamma_sc = (Gamma/delta) V_eff/hbar, 1/s.

    With the low-saturation potential this is identically Gamma s / 2.
    Valid at low saturation and far detuning; a warning is emitted when
    s > 0.1 or |delta| is not large against Gamma/2.
    """
    s = saturation_at(setup, position)
    gamma = setup.transition.linewidth
    delta = setup.beam.detuning
    if abs(delta) < 5.0 * gamma:
        warnings.warn("scattering-rate formula assumes |delta| >> Gamma/2",
                      SaturationValidityWarning, stacklevel=2)
    if np.any(np.asarray(s) > 0.1):
        warnings.warn("saturation above 0.1: low-saturation scattering "
                      "formula is inaccurate", SaturationValidityWarning,
                      stacklevel=2)
    return 0.5 * gamma * s


def recoil_energy(setup: TrapSetup) -> float:
    """Single-photon recoil energy (hbar k)^2 / 2M, J."""
    return (CONST.hbar * setup.beam.wavenumber) ** 2 / (2.0 * setup.ion.total_mass)


@dataclass(frozen=True)
class TrapSummary:
    """Depth, harmonic frequencies and the frequency-scale hierarchy."""

    depth: float                        # U0 = |V_eff(focus)|, J
    saturation_at_focus: float
    scattering_rate_at_focus: float     # 1/s
    recoil_energy: float                # J
    optical_trap_frequencies: tuple     # (radial, radial, axial), rad/s
    combined_trap_frequencies: tuple    # optical (+) static, NaN if anticonfined
    anticonfined_axes: tuple            # axis indices with negative curvature
    omega0: float                       # representative secular frequency, rad/s
    motional_temperature: float         # hbar omega0 / kB, K
    hierarchy: tuple                    # ((name, rad/s), ...) sorted ascending


def trap_summary(setup: TrapSetup) -> TrapSummary:
    """Summarise the trap for a red-detuned beam.

    The harmonic frequencies come from the analytic Hessian of the
    low-saturation potential at the focus:

        omega_radial = sqrt(4 U0 / (M w0^2))
        omega_axial  = sqrt(2 U0 / (M zR^2))

    Static curvatures add in quadrature per axis, signed; an axis whose
    combined curvature is negative is reported in ``anticonfined_axes``
    (with NaN frequency) rather than raising.
    """
    if setup.beam.detuning >= 0:
        raise BlueDetunedUnsupported(
            "trap summary requires red detuning (delta < 0); got "
            f"delta = {setup.beam.detuning:g} rad/s")
    depth = abs(effective_potential_at(setup, _FOCUS, mode="low_sat"))
    mass = setup.ion.total_mass
    w0 = setup.beam.waist_radius
    zr = setup.beam.rayleigh_range
    omega_radial = np.sqrt(4.0 * depth / (mass * w0 ** 2))
    omega_axial = np.sqrt(2.0 * depth / (mass * zr ** 2))
    optical = (omega_radial, omega_radial, omega_axial)

    combined = []
    anticonfined = []
    for i, (w_opt, curv) in enumerate(zip(optical, setup.static_curvatures)):
        total_sq = w_opt ** 2 + curv
        if total_sq < 0:
            anticonfined.append(i)
            combined.append(float("nan"))
        else:
            combined.append(float(np.sqrt(total_sq)))
    finite = [w for w in combined if np.isfinite(w)]
    omega0 = max(finite) if finite else float("nan")

    e_rec = recoil_energy(setup)
    s0 = saturation_at(setup, _FOCUS)
    gamma_sc = 0.5 * setup.transition.linewidth * s0
    scales = [
        ("omega0", omega0),
        ("recoil", e_rec / CONST.hbar),
        ("linewidth", setup.transition.linewidth),
        ("depth_rate", depth / CONST.hbar),
        ("rabi", rabi_frequency_at(setup, _FOCUS)),
        ("abs_detuning", abs(setup.beam.detuning)),
        ("omega_laser", setup.beam.omega_laser),
        ("omega_transition", setup.transition.omega_eg),
    ]
    hierarchy = tuple(sorted(scales, key=lambda item: item[1]))

    return TrapSummary(
        depth=float(depth),
        saturation_at_focus=float(s0),
        scattering_rate_at_focus=float(gamma_sc),
        recoil_energy=float(e_rec),
        optical_trap_frequencies=tuple(float(w) for w in optical),
        combined_trap_frequencies=tuple(combined),
        anticonfined_axes=tuple(anticonfined),
        omega0=float(omega0),
        motional_temperature=float(CONST.hbar * omega0 / CONST.kB),
        hierarchy=hierarchy,
    )


def power_for_depth(setup_at_unit_power: TrapSetup, depth: float) -> float:
    """Beam power giving the requested low-saturation trap depth, W.

    The low-saturation depth is exactly linear in power, so the inversion
    is a single rescaling of the depth computed at 1 W.
    """
    if setup_at_unit_power.beam.beam_power != 1.0:
        raise ValueError("pass a setup whose beam power is exactly 1 W")
    unit_depth = abs(effective_potential_at(setup_at_unit_power, _FOCUS,
                                            mode="low_sat"))
    return depth / unit_depth
