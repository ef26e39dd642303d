"""Momentum-space transverse-field Ising quench model.

The chain H(g) = -J sum_i (sigma^x_i sigma^x_{i+1} + g sigma^z_i) factorizes
after a Jordan-Wigner transformation into independent two-level momentum
modes with Bloch vector

    d(g, k) = (1 - g cos k,  g sin k,  0),      |d|^2 = 1 + g^2 - 2 g cos k.

A sudden quench g_i -> g_f evolves each mode's old ground state under the
new mode Hamiltonian.  The per-mode Loschmidt amplitude has the closed form

    G_k(t) = cos(|d_f| t) + i (dhat_i . dhat_f) sin(|d_f| t),

whose zeros (Fisher zeros) occur only when the initial and final fields lie
on opposite sides of |g| = 1; the first zero fixes the critical time of the
dynamical quantum phase transition (DQPT).

Sign convention ``ferro_ground``: the mode Hamiltonian carries the overall
minus sign, H_mode = -d . sigma, so the g = 0 ground state is |x>.  All
observables computed here are insensitive to that sign (covered by tests).

Two momentum grids are supported.  ``paper`` takes k = 0, 2pi/N, ..., 2pi
(N+1 points, both endpoints included, each weighted once in the 1/N
average).  ``abc`` takes the anti-periodic momenta k = (2n+1) pi/N, which
are the exact momenta of the even fermion-parity sector of the periodic
chain and therefore the grid used for oracle-equivalence checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConfigurationError,
    GaplessModeError,
    NoDqptError,
    UndefinedExpressionError,
)
from . import su2
from .su2 import ground_state, pauli_dot

__all__ = [
    "QuenchSpec",
    "ModeEnsemble",
    "PulseScheduleEntry",
    "bloch_vector",
    "frame_transform",
    "rotated_bloch",
    "loschmidt_mode",
    "mode_probabilities",
    "rate_function",
    "critical_momentum",
    "critical_times",
    "dqpt_predicate",
    "return_probability_map",
    "pulse_schedule",
    "replay_unitary",
    "build_ensemble",
    "default_time_grid",
    "AMPLITUDE_FLOOR",
]

# |G|^2 is floored here before the log; finite grids essentially never hit
# an exact Fisher zero, but the rate function must stay finite if they do.
AMPLITUDE_FLOOR = 1e-300

GRID_MODES = ("paper", "abc")
SIGN_CONVENTIONS = ("ferro_ground",)


@dataclass(frozen=True)
class QuenchSpec:
    """One global quench experiment: fields, chain size, momentum grid."""

    g_i: float
    g_f: float
    n: int
    grid_mode: str = "paper"
    sign_convention: str = "ferro_ground"

    def __post_init__(self):
        if not (np.isfinite(self.g_i) and np.isfinite(self.g_f)):
            raise ConfigurationError("g_i and g_f must be finite")
        if int(self.n) != self.n or self.n < 2:
            raise ConfigurationError(f"n must be an integer >= 2, got {self.n}")
        if self.grid_mode not in GRID_MODES:
            raise ConfigurationError(
                f"grid_mode must be one of {GRID_MODES}, got {self.grid_mode!r}")
        if self.sign_convention not in SIGN_CONVENTIONS:
            raise ConfigurationError(
                f"sign_convention must be one of {SIGN_CONVENTIONS}")
        object.__setattr__(self, "n", int(self.n))

    def momentum_grid(self) -> np.ndarray:
        if self.grid_mode == "paper":
            return 2.0 * np.pi * np.arange(self.n + 1) / self.n
        return (2.0 * np.arange(self.n) + 1.0) * np.pi / self.n


@dataclass(frozen=True)
class ModeEnsemble:
    """Frame-transformed modes, ordered by increasing k.

    ``d_final`` is the quench Bloch vector rotated into the frame where the
    initial mode Hamiltonian is -|d_i| sigma_x, so every ``psi0`` is |x>.
    """

    k: np.ndarray
    d_init: np.ndarray
    d_final: np.ndarray
    psi0: np.ndarray


@dataclass(frozen=True)
class PulseScheduleEntry:
    """Experimental drive for one momentum mode.

    The rotation axis lies in the xy plane at ``axis_angle`` from x, the
    Rabi rate is ``rabi_rate`` = C |d_f(k)|, and ``durations`` sweep one
    full period [0, 2 pi / rabi_rate].  Replaying duration T as a Bloch
    rotation by angle rabi_rate * T reproduces the mode propagator at
    simulation time rabi_rate * T / (2 |d_f|) = C T / 2: the schedule keeps
    the normalized precession speed identical for every mode.
    """

    k: float
    axis_angle: float
    rabi_rate: float
    durations: np.ndarray
    idle: bool = False


def bloch_vector(g: float, k: float) -> np.ndarray:
    """Mode Bloch vector d(g, k) = (1 - g cos k, g sin k, 0)."""
    return np.array([1.0 - g * np.cos(k), g * np.sin(k), 0.0])


def frame_transform(g_i: float, k: float) -> np.ndarray:
    """Unitary mapping the initial mode frame onto the sigma_x frame.

    With S = [v_+, v_-] the eigenvectors of dhat_i . sigma and P the
    corresponding sigma_x eigenvector matrix, U = P S^dagger satisfies
    U (dhat_i . sigma) U^dagger = sigma_x exactly and sends the mode ground
    state of -d_i . sigma to |x>.  For g_i = 0 this is the identity.
    """
    d_i = bloch_vector(g_i, k)
    mag = float(np.sqrt(d_i @ d_i))
    if mag == 0.0:
        raise GaplessModeError(f"initial mode at k={k} is gapless (|d_i| = 0)")
    v_plus = ground_state(-d_i)   # +|d_i| eigenvector of d_i . sigma
    v_minus = ground_state(d_i)
    s_mat = np.column_stack([v_plus, v_minus])
    p_mat = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)
    return p_mat @ s_mat.conj().T


def rotated_bloch(u: np.ndarray, d) -> np.ndarray:
    """Bloch vector of U (d . sigma) U^dagger."""
    m = u @ pauli_dot(d) @ u.conj().T
    return np.array([
        0.5 * np.real(np.trace(m @ su2.SIGMA_X)),
        0.5 * np.real(np.trace(m @ su2.SIGMA_Y)),
        0.5 * np.real(np.trace(m @ su2.SIGMA_Z)),
    ])


def _mode_geometry(spec: QuenchSpec, k: float):
    """(|d_f|, dhat_i . dhat_f) for one mode; raises on gapless initial."""
    d_i = bloch_vector(spec.g_i, k)
    d_f = bloch_vector(spec.g_f, k)
    n_i = float(np.sqrt(d_i @ d_i))
    n_f = float(np.sqrt(d_f @ d_f))
    if n_i == 0.0:
        raise GaplessModeError(
            f"initial mode at k={k} is gapless; the quench ground state is undefined")
    overlap = float(d_i @ d_f) / (n_i * n_f) if n_f > 0.0 else 1.0
    return n_f, overlap


def loschmidt_mode(spec: QuenchSpec, k: float, t):
    """Per-mode Loschmidt amplitude G_k(t); scalar or array in t.

    Gapless final modes (|d_f| = 0) do not evolve, so G_k = 1 there.
    """
    n_f, overlap = _mode_geometry(spec, k)
    t = np.asarray(t, dtype=float)
    if n_f == 0.0:
        return np.ones_like(t, dtype=complex) if t.ndim else complex(1.0)
    g = np.cos(n_f * t) + 1.0j * overlap * np.sin(n_f * t)
    return g if t.ndim else complex(g)


def mode_probabilities(spec: QuenchSpec, t) -> tuple[np.ndarray, np.ndarray]:
    """(k grid, |G_k(t)|^2 matrix of shape (n_k, n_t)) for the spec's grid."""
    ks = spec.momentum_grid()
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    probs = np.empty((ks.size, ts.size))
    for i, k in enumerate(ks):
        n_f, overlap = _mode_geometry(spec, k)
        if n_f == 0.0:
            probs[i] = 1.0
        else:
            probs[i] = np.cos(n_f * ts) ** 2 + (overlap * np.sin(n_f * ts)) ** 2
    return ks, probs


def rate_function(spec: QuenchSpec, t):
    """Loschmidt rate function f(t) = -(1/N) sum_k log |G_k(t)|^2.

    The sum runs over the spec's momentum grid (N+1 terms in "paper" grid
    mode, still divided by N) in ascending-k order.  Scalar or array t.
    """
    ts = np.asarray(t, dtype=float)
    _, probs = mode_probabilities(spec, ts)
    f = -np.sum(np.log(np.maximum(probs, AMPLITUDE_FLOOR)), axis=0) / spec.n
    return f if ts.ndim else float(f[0])


def critical_momentum(g_i: float, g_f: float) -> float | None:
    """Fisher-zero momentum k* = arccos[(1 + g_i g_f)/(g_i + g_f)], if any.

    Returns None when |argument| >= 1 (no zero crossing exists).  At k* the
    old and new Bloch vectors are exactly orthogonal.
    """
    if g_i + g_f == 0.0:
        raise UndefinedExpressionError(
            "critical momentum undefined for g_i + g_f = 0")
    arg = (1.0 + g_i * g_f) / (g_i + g_f)
    if abs(arg) >= 1.0:
        return None
    return float(np.arccos(arg))


def critical_times(g_i: float, g_f: float, n_max: int = 3) -> np.ndarray:
    """Critical times t_c(n) = pi/|d_f(k*)| (n + 1/2), n = 0..n_max."""
    k_star = critical_momentum(g_i, g_f)
    if k_star is None:
        raise NoDqptError(
            f"no critical momentum for g_i={g_i}, g_f={g_f}; no DQPT occurs")
    d_f = bloch_vector(g_f, k_star)
    scale = np.pi / float(np.sqrt(d_f @ d_f))
    return scale * (np.arange(n_max + 1) + 0.5)


def dqpt_predicate(g_i: float, g_f: float) -> bool:
    """True iff the quench crosses the critical field: (1-|g_i|)(1-|g_f|) < 0."""
    return (1.0 - abs(g_i)) * (1.0 - abs(g_f)) < 0.0


def return_probability_map(spec: QuenchSpec, n_t: int):
    """Return-probability surface |G_k|^2 on the (k, t/t0) plane.

    Each row uses its own normalized time t/t0 in [0, 2] with
    t0 = pi/|d_f(k)|, matching how the mode sweeps are displayed; gapless
    final modes give a row of ones.  Returns (k grid, tau grid, matrix).
    """
    if n_t < 2:
        raise ConfigurationError(f"n_t must be >= 2, got {n_t}")
    ks = spec.momentum_grid()
    taus = np.linspace(0.0, 2.0, n_t)
    probs = np.empty((ks.size, n_t))
    for i, k in enumerate(ks):
        n_f, overlap = _mode_geometry(spec, k)
        if n_f == 0.0:
            probs[i] = 1.0
        else:
            # at t = tau * pi/|d_f| the mode phase is pi*tau for every k
            probs[i] = np.cos(np.pi * taus) ** 2 \
                + (overlap * np.sin(np.pi * taus)) ** 2
    return ks, taus, probs


def pulse_schedule(spec: QuenchSpec, c: float = 1.0,
                   n_t: int = 100) -> list[PulseScheduleEntry]:
    """Experimental drive schedule: one rotation entry per grid momentum.

    The axis angle is taken as atan2(d_y, d_x), which equals the quoted
    arcsin(g_f sin k / |d_f|) whenever d_x >= 0 and, unlike the arcsin,
    stays on the correct half-plane when 1 - g_f cos k < 0 (g_f > 1 near
    k = 0); the replay identity below then holds for every mode.
    Durations are n_t uniform samples of one full period [0, 2 pi/Omega].
    """
    if not (c > 0.0 and np.isfinite(c)):
        raise ConfigurationError(f"pulse constant must be > 0, got {c}")
    if n_t < 2:
        raise ConfigurationError(f"n_t must be >= 2, got {n_t}")
    entries = []
    for k in spec.momentum_grid():
        d_f = bloch_vector(spec.g_f, k)
        mag = float(np.sqrt(d_f @ d_f))
        if mag == 0.0:
            entries.append(PulseScheduleEntry(
                k=float(k), axis_angle=0.0, rabi_rate=0.0,
                durations=np.zeros(n_t), idle=True))
            continue
        omega = c * mag
        entries.append(PulseScheduleEntry(
            k=float(k),
            axis_angle=float(np.arctan2(d_f[1], d_f[0])),
            rabi_rate=omega,
            durations=np.linspace(0.0, 2.0 * np.pi / omega, n_t),
        ))
    return entries


def replay_unitary(entry: PulseScheduleEntry, duration: float) -> np.ndarray:
    """Bloch rotation by angle Omega*T about the entry's in-plane axis.

    Equals evolution_unitary(d_f(k), Omega*T / (2 |d_f|)) up to global
    phase; idle entries replay as the identity.
    """
    if entry.idle:
        return np.eye(2, dtype=complex)
    theta = entry.rabi_rate * float(duration)
    axis = np.array([np.cos(entry.axis_angle), np.sin(entry.axis_angle), 0.0])
    return su2.evolution_unitary(axis, 0.5 * theta)


def build_ensemble(spec: QuenchSpec) -> ModeEnsemble:
    """Frame-transformed mode list: psi0 = |x> and rotated d_f per k."""
    ks = spec.momentum_grid()
    d_init = np.empty((ks.size, 3))
    d_final = np.empty((ks.size, 3))
    psi0 = np.empty((ks.size, 2), dtype=complex)
    for i, k in enumerate(ks):
        d_i = bloch_vector(spec.g_i, k)
        if float(d_i @ d_i) == 0.0:
            raise GaplessModeError(
                f"initial mode at k={k} is gapless; cannot build ensemble")
        u = frame_transform(spec.g_i, k)
        d_init[i] = rotated_bloch(u, d_i)
        d_final[i] = rotated_bloch(u, bloch_vector(spec.g_f, k))
        psi0[i] = u @ ground_state(-d_i)
    return ModeEnsemble(k=ks, d_init=d_init, d_final=d_final, psi0=psi0)


def default_time_grid(g_i: float, g_f: float, n_points: int = 300) -> np.ndarray:
    """[0, 3 t_c] when a DQPT exists, else [0, 10]; covers the visible range."""
    if dqpt_predicate(g_i, g_f) and g_i + g_f != 0.0:
        t_c = critical_times(g_i, g_f, n_max=0)[0]
        return np.linspace(0.0, 3.0 * t_c, n_points)
    return np.linspace(0.0, 10.0, n_points)
