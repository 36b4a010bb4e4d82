"""Fixed-step 8th-order Runge-Kutta integration.

The 11-stage order-8 scheme of Cooper and Verner (coefficients closed in
sqrt(21)).  Fixed stepping keeps phase-sensitive comparisons (monodromy
matrices, driven steady states) bit-reproducible across runs; adaptive
integration for the secular trap dynamics lives in :mod:`optrap.dynamics`
on top of scipy instead.
"""

import math

import numpy as np

_S21 = math.sqrt(21.0)

RK8_C = (0.0, 1 / 2, 1 / 2, (7 + _S21) / 14, (7 + _S21) / 14, 1 / 2,
         (7 - _S21) / 14, (7 - _S21) / 14, 1 / 2, (7 + _S21) / 14, 1.0)

RK8_A = (
    (),
    (1 / 2,),
    (1 / 4, 1 / 4),
    (1 / 7, (-7 - 3 * _S21) / 98, (21 + 5 * _S21) / 49),
    ((11 + _S21) / 84, 0.0, (18 + 4 * _S21) / 63, (21 - _S21) / 252),
    ((5 + _S21) / 48, 0.0, (9 + _S21) / 36, (-231 + 14 * _S21) / 360,
     (63 - 7 * _S21) / 80),
    ((10 - _S21) / 42, 0.0, (-432 + 92 * _S21) / 315, (633 - 145 * _S21) / 90,
     (-504 + 115 * _S21) / 70, (63 - 13 * _S21) / 35),
    (1 / 14, 0.0, 0.0, 0.0, (14 - 3 * _S21) / 126, (13 - 3 * _S21) / 63, 1 / 9),
    (1 / 32, 0.0, 0.0, 0.0, (91 - 21 * _S21) / 576, 11 / 72,
     (-385 - 75 * _S21) / 1152, (63 + 13 * _S21) / 128),
    (1 / 14, 0.0, 0.0, 0.0, 1 / 9, (-733 - 147 * _S21) / 2205,
     (515 + 111 * _S21) / 504, (-51 - 11 * _S21) / 56, (132 + 28 * _S21) / 245),
    (0.0, 0.0, 0.0, 0.0, (-42 + 7 * _S21) / 18, (-18 + 28 * _S21) / 45,
     (-273 - 53 * _S21) / 72, (301 + 53 * _S21) / 72, (28 - 28 * _S21) / 45,
     (49 - 7 * _S21) / 18),
)

RK8_B = (1 / 20, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 49 / 180, 16 / 45, 49 / 180,
         1 / 20)

_STAGES = 11


def rk8_fixed(f, t0: float, t1: float, y0, nsteps: int, sample_every: int = 0):
    """Integrate y' = f(t, y) with ``nsteps`` equal RK8 steps.

    ``y0`` may be an array of any shape; ``f`` must return the same shape.
    With ``sample_every`` > 0, states at every that-many steps (plus the
    initial state) are collected and returned as (times, states); the
    final state is always the last sample when nsteps is a multiple.
    Otherwise only the final state is returned.
    """
    if nsteps < 1:
        raise ValueError("nsteps must be >= 1")
    h = (t1 - t0) / nsteps
    y = np.array(y0, dtype=float)
    k = [None] * _STAGES
    record = sample_every > 0
    if record:
        times = [t0]
        states = [y.copy()]
    for n in range(nsteps):
        t = t0 + n * h
        for i in range(_STAGES):
            yi = y
            row = RK8_A[i]
            for j in range(i):
                aij = row[j]
                if aij != 0.0:
                    yi = yi + (h * aij) * k[j]
            k[i] = np.asarray(f(t + RK8_C[i] * h, yi), dtype=float)
        dy = (h * RK8_B[0]) * k[0]
        for i in range(7, _STAGES):
            dy = dy + (h * RK8_B[i]) * k[i]
        y = y + dy
        if record and (n + 1) % sample_every == 0:
            times.append(t0 + (n + 1) * h)
            states.append(y.copy())
    if record:
        return np.array(times), np.array(states)
    return y


def rk8_scalar_oscillator(accel, t0: float, h: float, nsteps: int,
                          x0: float, v0: float, sample_every: int = 1):
    """Specialised scalar driver for x'' = accel(t, x).

    Pure-float inner loop: for one-dimensional driven-oscillator runs this
    is an order of magnitude faster than the array path.  Returns
    (times, positions, velocities) sampled every ``sample_every`` steps.
    """
    x = float(x0)
    v = float(v0)
    ts = [t0]
    xs = [x]
    vs = [v]
    kx = [0.0] * _STAGES
    kv = [0.0] * _STAGES
    for n in range(nsteps):
        t = t0 + n * h
        for i in range(_STAGES):
            xi = x
            vi = v
            row = RK8_A[i]
            for j in range(i):
                aij = row[j]
                if aij != 0.0:
                    xi += h * aij * kx[j]
                    vi += h * aij * kv[j]
            kx[i] = vi
            kv[i] = accel(t + RK8_C[i] * h, xi)
        dx = RK8_B[0] * kx[0]
        dv = RK8_B[0] * kv[0]
        for i in (7, 8, 9, 10):
            dx += RK8_B[i] * kx[i]
            dv += RK8_B[i] * kv[i]
        x += h * dx
        v += h * dv
        if (n + 1) % sample_every == 0:
            ts.append(t0 + (n + 1) * h)
            xs.append(x)
            vs.append(v)
    return np.array(ts), np.array(xs), np.array(vs)
