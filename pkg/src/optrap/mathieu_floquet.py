"""Mathieu mapping and Floquet stability of the optical micromotion.

The time-dependent optical potential of a harmonically approximated
dipole trap oscillates at twice the laser frequency,

    V(x, t) = (1/2) M w_opt^2 x^2 [1 + cos(2 omega_L t)],

which together with a static curvature w_s^2 maps onto the canonical
Mathieu equation x'' + [a - 2q cos(2 tau)] x = 0 with tau = omega_L t and

    a = (w_opt^2 + w_s^2) / omega_L^2,      q = -w_opt^2 / (2 omega_L^2).

The static field enters ``a`` only.  For an optical trap a and |q| are of
order (w_opt/omega_L)^2 ~ 1e-20, far below anything a numerical Floquet
analysis can resolve; below ``STIFFNESS_THRESHOLD`` the analytic
small-parameter laws are used instead (and flagged).  At numerically
reachable parameters the one-period monodromy matrix is integrated with a
fixed-step 8th-order scheme and the micromotion content is read off the
Fourier components of the Floquet eigenfunction.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import AnticonfinedAxis, StiffnessWarning
from .integrators import RK8_A, RK8_B, RK8_C
from .model import TrapSetup
from .units import format_sig
from . import dipole_trap

STIFFNESS_THRESHOLD = 1e-14
DEFAULT_STEPS = 4096

_AXIS_NAMES = ("x", "y", "z")


@dataclass(frozen=True)
class MathieuParams:
    """Dimensionless Mathieu parameters of one trap axis.

    The sign of q is kept (stability depends only on |q|; the sign records
    the drive phase convention).  ``dimensionless_time_scale`` is the
    omega_L of the tau = omega_L t substitution.
    """

    a: float
    q: float
    drive_angular_frequency: float    # 2 omega_L for the optical drive, rad/s
    dimensionless_time_scale: float   # rad/s

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.q)):
            raise ValueError("Mathieu parameters must be finite")


@dataclass(frozen=True)
class FloquetResult:
    """One-period Floquet analysis of a Mathieu equation."""

    monodromy_matrix: np.ndarray       # 2x2 real, det = 1
    floquet_multipliers: tuple         # complex reciprocal pair
    stable: bool                       # |trace| < 2
    characteristic_exponent: float     # nu: multipliers exp(+-i nu pi) if stable,
    #                                    else ln|lambda_max|/pi (growth rate)
    micromotion_ratio: float           # (|c_+1| + |c_-1|) / |c_0|, NaN if unstable
    from_analytic_law: bool = False    # small-parameter law used instead of Fourier


def optical_mathieu_params(setup: TrapSetup, axis: int) -> MathieuParams:
    """Map one axis of the optical + static trap onto Mathieu form.

    ``axis`` indexes the beam frame: 0, 1 transverse, 2 axial.  Raises
    :class:`AnticonfinedAxis` when the leading-order stability parameter
    a + q^2/2 is non-positive (no confinement, and |q| too small for
    dynamical stabilisation); it is reported, never silently clamped.
    """
    if axis not in (0, 1, 2):
        raise ValueError("axis must be 0, 1 or 2 (beam frame)")
    summary = dipole_trap.trap_summary(setup)
    w_opt = summary.optical_trap_frequencies[axis]
    curv = setup.static_curvatures[axis]
    omega_l = setup.beam.omega_laser
    a = (w_opt ** 2 + curv) / omega_l ** 2
    q = -w_opt ** 2 / (2.0 * omega_l ** 2)
    if a + 0.5 * q ** 2 <= 0.0:
        raise AnticonfinedAxis(
            f"axis {_AXIS_NAMES[axis]}: a = {a:.3e}, q = {q:.3e} is not "
            "confining (a + q^2/2 <= 0)")
    return MathieuParams(a=float(a), q=float(q),
                         drive_angular_frequency=2.0 * omega_l,
                         dimensionless_time_scale=omega_l)


def mathieu_monodromy(a, q, steps: int = DEFAULT_STEPS, store: bool = False):
    """Fundamental matrix of x'' + [a - 2q cos(2 tau)] x = 0 over tau in [0, pi].

    Vectorised over leading axes of ``a`` and ``q``: returns shape
    (..., 2, 2).  With ``store`` the matrix is also recorded at every step
    endpoint (shape (steps+1, ..., 2, 2)) for eigenfunction analysis.
    """
    a_arr, q_arr = np.broadcast_arrays(np.asarray(a, float), np.asarray(q, float))
    shape = a_arr.shape
    a_flat = a_arr.reshape(-1)
    q_flat = q_arr.reshape(-1)
    n_sys = a_flat.size
    y = np.broadcast_to(np.eye(2), (n_sys, 2, 2)).copy()
    h = np.pi / steps
    hist = np.empty((steps + 1, n_sys, 2, 2)) if store else None
    if store:
        hist[0] = y
    ks = [None] * 11
    for n in range(steps):
        t = n * h
        for i in range(11):
            yi = y
            row = RK8_A[i]
            for j in range(i):
                aij = row[j]
                if aij != 0.0:
                    yi = yi + (h * aij) * ks[j]
            coef = a_flat - 2.0 * q_flat * np.cos(2.0 * (t + RK8_C[i] * h))
            ki = np.empty_like(yi)
            ki[:, 0, :] = yi[:, 1, :]
            ki[:, 1, :] = -coef[:, None] * yi[:, 0, :]
            ks[i] = ki
        dy = (h * RK8_B[0]) * ks[0]
        for i in (7, 8, 9, 10):
            dy = dy + (h * RK8_B[i]) * ks[i]
        y = y + dy
        if store:
            hist[n + 1] = y
    final = y.reshape(shape + (2, 2))
    if store:
        return final, hist.reshape((steps + 1,) + shape + (2, 2))
    return final


def floquet_eigenfunction_spectrum(a: float, q: float,
                                   steps: int = DEFAULT_STEPS):
    """Characteristic exponent and Fourier coefficients of the stable mode.

    Returns (nu, coeffs) where the Floquet solution is
    x(tau) = exp(i nu tau) sum_n c_n exp(2 i n tau) and ``coeffs`` is the
    full DFT array (c_n at index n modulo ``steps``).  Requires a stable
    (a, q) pair.
    """
    mono, hist = mathieu_monodromy(a, q, steps=steps, store=True)
    trace = mono[0, 0] + mono[1, 1]
    if abs(trace) >= 2.0:
        raise ValueError("Fourier extraction needs a stable Mathieu solution")
    evals, evecs = np.linalg.eig(mono)
    idx = int(np.argmax(evals.imag))
    lam = evals[idx]
    vec = evecs[:, idx]
    nu = float(np.angle(lam) / np.pi)
    tau = np.arange(steps) * (np.pi / steps)
    x_tau = hist[:-1] @ vec               # (steps, 2); row 0 is the position
    periodic = x_tau[:, 0] * np.exp(-1j * nu * tau)
    coeffs = np.fft.fft(periodic) / steps
    return nu, coeffs


def monodromy_stability(params, steps: int = DEFAULT_STEPS) -> FloquetResult:
    """Floquet analysis of a MathieuParams (or a bare (a, q) pair).

    Stability criterion: |trace M| < 2 strictly.  Liouville guarantees
    det M = 1 and reciprocal multiplier pairs; both hold to ~1e-11 at the
    default step count.  Below the stiffness threshold the analytic
    small-parameter laws replace the numerical path (flagged with
    ``from_analytic_law`` and a :class:`StiffnessWarning`).
    """
    if isinstance(params, MathieuParams):
        a, q = params.a, params.q
    else:
        a, q = float(params[0]), float(params[1])

    if max(abs(a), abs(q)) < STIFFNESS_THRESHOLD:
        warnings.warn(
            f"a = {a:.3e}, |q| = {abs(q):.3e} below numerical Floquet "
            "resolution; reporting analytic small-parameter laws",
            StiffnessWarning, stacklevel=2)
        beta_sq = a + 0.5 * q ** 2
        stable = beta_sq > 0.0
        beta = np.sqrt(abs(beta_sq))
        if stable:
            # harmonic-limit fundamental matrix over one period
            if beta > 0:
                mono = np.array([[np.cos(beta * np.pi),
                                  np.sin(beta * np.pi) / beta],
                                 [-beta * np.sin(beta * np.pi),
                                  np.cos(beta * np.pi)]])
            else:
                mono = np.array([[1.0, np.pi], [0.0, 1.0]])
            mults = (complex(np.cos(beta * np.pi), np.sin(beta * np.pi)),
                     complex(np.cos(beta * np.pi), -np.sin(beta * np.pi)))
            return FloquetResult(monodromy_matrix=mono,
                                 floquet_multipliers=mults,
                                 stable=True,
                                 characteristic_exponent=float(beta),
                                 micromotion_ratio=0.5 * abs(q),
                                 from_analytic_law=True)
        mono = np.array([[np.cosh(beta * np.pi), np.sinh(beta * np.pi) / beta],
                         [beta * np.sinh(beta * np.pi), np.cosh(beta * np.pi)]]) \
            if beta > 0 else np.array([[1.0, np.pi], [0.0, 1.0]])
        mults = (complex(np.exp(beta * np.pi)), complex(np.exp(-beta * np.pi)))
        return FloquetResult(monodromy_matrix=mono,
                             floquet_multipliers=mults,
                             stable=False,
                             characteristic_exponent=float(beta),
                             micromotion_ratio=float("nan"),
                             from_analytic_law=True)

    mono = mathieu_monodromy(a, q, steps=steps)
    trace = float(mono[0, 0] + mono[1, 1])
    evals = np.linalg.eigvals(mono)
    stable = abs(trace) < 2.0
    if stable:
        exponent = float(np.arccos(np.clip(trace / 2.0, -1.0, 1.0)) / np.pi)
        nu, coeffs = floquet_eigenfunction_spectrum(a, q, steps=steps)
        ratio = float((abs(coeffs[1]) + abs(coeffs[-1])) / abs(coeffs[0]))
    else:
        exponent = float(np.log(max(abs(evals))) / np.pi)
        ratio = float("nan")
    return FloquetResult(monodromy_matrix=mono,
                         floquet_multipliers=(complex(evals[0]), complex(evals[1])),
                         stable=stable,
                         characteristic_exponent=exponent,
                         micromotion_ratio=ratio,
                         from_analytic_law=False)


def micromotion_ratio_optical(setup: TrapSetup, axis: int) -> float:
    """Drive-sideband to secular amplitude ratio for one trap axis.

    At optical parameters a, |q| ~ (w0/omega_L)^2 the small-parameter law
    |q|/2 (1 + O(q)) is exact far beyond machine precision, so the value
    (omega_opt/omega_L)^2 / 4 is returned directly.
    """
    params = optical_mathieu_params(setup, axis)
    return 0.5 * abs(params.q)


@dataclass(frozen=True)
class StabilityScan:
    """Row-major (a outer, q inner) stability grid."""

    a_values: np.ndarray
    q_values: np.ndarray
    stable: np.ndarray     # (Na, Nq) bool
    exponent: np.ndarray   # (Na, Nq); oscillation exponent nu if stable,
    #                        growth rate ln|lambda|/pi otherwise

    def rows(self):
        for i, a in enumerate(self.a_values):
            for j, q in enumerate(self.q_values):
                yield a, q, bool(self.stable[i, j]), float(self.exponent[i, j])

    def to_csv_text(self, digits: int = 9) -> str:
        lines = ["a,q,stable,exponent"]
        for a, q, stab, expo in self.rows():
            lines.append(",".join([format_sig(a, digits), format_sig(q, digits),
                                   "1" if stab else "0",
                                   format_sig(expo, digits)]))
        return "\n".join(lines) + "\n"


def _range_values(lo: float, hi: float, step: float) -> np.ndarray:
    if not (np.isfinite(lo) and np.isfinite(hi) and np.isfinite(step)):
        raise ValueError("scan range must be finite")
    if step <= 0 or hi < lo:
        raise ValueError("scan range must satisfy lo <= hi with step > 0")
    count = int(np.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(count)


def stability_scan(a_range, q_range, step, steps: int = DEFAULT_STEPS
                   ) -> StabilityScan:
    """Scan the (a, q) plane on a regular grid.

    ``a_range`` and ``q_range`` are (min, max) pairs; ``step`` is a single
    spacing or an (a_step, q_step) pair.  Deterministic: identical inputs
    produce identical grids and identical CSV bytes.
    """
    try:
        step_a, step_q = step
    except TypeError:
        step_a = step_q = step
    a_vals = _range_values(a_range[0], a_range[1], step_a)
    q_vals = _range_values(q_range[0], q_range[1], step_q)
    aa, qq = np.meshgrid(a_vals, q_vals, indexing="ij")
    mono = mathieu_monodromy(aa, qq, steps=steps)
    trace = mono[..., 0, 0] + mono[..., 1, 1]
    stable = np.abs(trace) < 2.0
    exponent = np.empty_like(trace)
    cos_arg = np.clip(trace / 2.0, -1.0, 1.0)
    exponent[stable] = np.arccos(cos_arg[stable]) / np.pi
    if np.any(~stable):
        evals = np.linalg.eigvals(mono[~stable])
        exponent[~stable] = np.log(np.max(np.abs(evals), axis=-1)) / np.pi
    return StabilityScan(a_values=a_vals, q_values=q_vals,
                         stable=stable, exponent=exponent)
