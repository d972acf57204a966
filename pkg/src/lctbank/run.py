"""Running a bank: direct channels, the polyphase path and PR verification."""

from __future__ import annotations

import math

import numpy as np

from .construct import (
    DEFAULT_GRID,
    DEFAULT_POWER,
    FilterBank,
    alias_phase_matrix,
    modulation_matrix,
    paraunitary_error,
    polyphase_components,
    power_symmetry_error,
    synthesis_modulation_matrix,
)
from .errors import PeriodMismatch
from .sampling import (
    PolyKind,
    PolyphasePair,
    add,
    delay_pow,
    downsample,
    lct_convolve,
    polyphase_merge,
    polyphase_split,
    same_period,
    upsample,
)
from .transform import FrequencyGrid, LctParams, Signal, evaluate_dtlct, prefactor, time_chirp
from .construct import VerificationReport


def _check_input(x: Signal, fb: FilterBank) -> None:
    if not same_period(x.period, fb.period):
        raise PeriodMismatch(f"input period {x.period!r} != bank period {fb.period!r}")


def analysis(x: Signal, fb: FilterBank) -> tuple[Signal, Signal]:
    """Sub-band signals ``y_i = (h_i * x) down 2``, each with period ``2T``."""
    _check_input(x, fb)
    p = fb.params
    return tuple(downsample(lct_convolve(h, x, p), 2) for h in fb.analysis)


def synthesis(y0: Signal, y1: Signal, fb: FilterBank) -> Signal:
    """``x_hat = g0 * (y0 up 2) + g1 * (y1 up 2)``."""
    if not same_period(y0.period, y1.period):
        raise PeriodMismatch("sub-band periods differ")
    if not same_period(y0.period, 2 * fb.period):
        raise PeriodMismatch(f"sub-band period {y0.period!r} != 2 x bank period")
    p = fb.params
    return add(*(lct_convolve(g, upsample(y, 2), p) for g, y in zip(fb.synthesis, (y0, y1))))


def reconstruct(x: Signal, fb: FilterBank) -> Signal:
    return synthesis(*analysis(x, fb), fb)


def _pr_errors(x: Signal, xhat: Signal, fb: FilterBank) -> tuple[float, float]:
    target = delay_pow(x, fb.order, fb.params)
    lo = min(xhat.start_index, target.start_index)
    hi = max(xhat.stop_index, target.stop_index)
    a, b = xhat.window(lo, hi), target.window(lo, hi)
    return float(np.max(np.abs(a - b))), float(np.max(np.abs(np.abs(a) - np.abs(b))))


def run_pr_check(
    x: Signal,
    fb: FilterBank,
    grid: FrequencyGrid | None = None,
    pr_tol: float = 1e-9,
    ps_tol: float = 1e-8,
    pu_tol: float = 1e-8,
    power: float = DEFAULT_POWER,
    seed: int | None = None,
) -> tuple[VerificationReport, Signal]:
    """Reconstruct ``x`` and compare with ``D^N[x]`` over the whole output support.

    Returns the report and the reconstruction. The magnitude-only error
    ``max ||x_hat(n)| - |x(n-N)||`` is reported alongside.
    """
    grid = grid or FrequencyGrid(DEFAULT_GRID)
    xhat = reconstruct(x, fb)
    pr, pr_mag = _pr_errors(x, xhat, fb)
    report = VerificationReport(
        max_ps_error=power_symmetry_error(fb.h0, fb.params, grid, power),
        max_pu_error=paraunitary_error(fb, grid, power),
        grid=grid,
        tolerances={"ps": ps_tol, "pu": pu_tol, "pr": pr_tol},
        max_pr_error=pr,
        max_pr_magnitude_error=pr_mag,
        seed=seed,
    )
    return report, xhat


def polyphase_analysis(xp: PolyphasePair, fb: FilterBank) -> tuple[Signal, Signal]:
    """Sub-bands from the polyphase components of ``x`` (filters split the other way)."""
    p = fb.params
    out = []
    for h in fb.analysis:
        hc = polyphase_components(h, xp.kind.other, p)
        out.append(add(*(lct_convolve(hk, xk, p) for hk, xk in zip(hc, (xp.comp0, xp.comp1)))))
    return tuple(out)


def polyphase_synthesis(y0: Signal, y1: Signal, fb: FilterBank, kind: PolyKind) -> PolyphasePair:
    p = fb.params
    g0c = polyphase_components(fb.g0, kind, p)
    g1c = polyphase_components(fb.g1, kind, p)
    comps = [
        add(lct_convolve(g0c[k], y0, p), lct_convolve(g1c[k], y1, p)) for k in range(2)
    ]
    return PolyphasePair(comps[0], comps[1], kind, p)


def polyphase_run(x: Signal, fb: FilterBank, kind: PolyKind = PolyKind.TYPE2) -> Signal:
    """Whole bank evaluated at the low rate on polyphase components.

    ``x``, ``x_hat`` and the synthesis filters use ``kind``; the analysis
    filters use the other type.
    """
    _check_input(x, fb)
    xp = polyphase_split(x, kind, fb.params)
    y0, y1 = polyphase_analysis(xp, fb)
    return polyphase_merge(polyphase_synthesis(y0, y1, fb, kind))


def modulation_prediction(x: Signal, fb: FilterBank, omega, normalized: bool = True) -> np.ndarray:
    """``X_hat(w)`` predicted from ``X_hat_m = 1/2 G_m H_m A X_m``, without running the bank."""
    _check_input(x, fb)
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    p, T = fb.params, fb.period
    X = evaluate_dtlct(x, p, np.concatenate([w, w + math.pi]), normalized=False)
    Xm = np.stack([X[: w.size], X[w.size :]], axis=1)[:, :, None]
    Gm = synthesis_modulation_matrix(fb, w)
    Hm = modulation_matrix(fb, w)
    A = alias_phase_matrix(w, p, T)
    Xhat = 0.5 * (Gm @ Hm @ A @ Xm)[:, 0, 0]
    return Xhat * prefactor(p) if normalized else Xhat


def generate_multitone(peaks, length: int, params: LctParams, T: float) -> Signal:
    """``x(n) = sum_p conj(chirp(n)) e^{j w_p n}``, ``n = 0..length-1``.

    The DTLCT magnitude of the result peaks at each ``w_p``.
    """
    peaks = [float(w) for w in peaks]
    if not peaks:
        raise ValueError("at least one peak frequency is required")
    for w in peaks:
        if not 0.0 <= w < 2 * math.pi:
            raise ValueError(f"peak {w!r} outside [0, 2 pi)")
    if length < 1:
        raise ValueError("length must be positive")
    n = np.arange(length)
    tones = np.exp(1j * np.outer(peaks, n)).sum(axis=0)
    return Signal(np.conj(time_chirp(n, params, T)) * tones, 0, T)
