"""Two-channel paraunitary LCT filter banks built from one prototype.

Normalization. The checks in this module work with the DTLCT *without* its
``sqrt(1/(j 2 pi b))`` prefactor, which is the form in which the bank
equations hold literally. Power symmetry is then checked against a
constant ``power``:

    |H0(w)|^2 + |H0(w + pi)|^2 = power

``power=2`` (the default) is what a unit-energy prototype gives, and is the
value perfect reconstruction with ``g_i(k) = h_i*(N-k) (chirp)`` requires.
In terms of the normalized transform this is a check against
``power / (2 pi b)``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import EvenOrder, GridTooCoarse, PeriodMismatch
from .sampling import PolyKind, polyphase_split, same_period
from .transform import (
    FrequencyGrid,
    LctParams,
    Signal,
    evaluate_dtlct,
    quasi_period_factor,
    time_chirp,
)

DEFAULT_GRID = 512
DEFAULT_POWER = 2.0


@dataclass(frozen=True, eq=False)
class FilterBank:
    h0: Signal
    h1: Signal
    g0: Signal
    g1: Signal
    order: int
    params: LctParams

    def __post_init__(self):
        if self.order % 2 == 0:
            raise EvenOrder(f"filter order must be odd, got {self.order}")
        T = self.h0.period
        for f in (self.h1, self.g0, self.g1):
            if not same_period(f.period, T):
                raise PeriodMismatch("all four filters must share one sample period")

    @property
    def period(self) -> float:
        return self.h0.period

    @property
    def analysis(self) -> tuple[Signal, Signal]:
        return self.h0, self.h1

    @property
    def synthesis(self) -> tuple[Signal, Signal]:
        return self.g0, self.g1


@dataclass
class VerificationReport:
    max_ps_error: float
    max_pu_error: float
    grid: FrequencyGrid
    tolerances: dict = field(default_factory=dict)
    max_pr_error: float | None = None
    max_pr_magnitude_error: float | None = None
    h1_formula_error: float | None = None
    seed: int | None = None

    @property
    def passed(self) -> bool:
        checks = {
            "ps": self.max_ps_error,
            "pu": self.max_pu_error,
            "pr": self.max_pr_error,
        }
        return all(
            checks[k] is None or checks[k] <= tol
            for k, tol in self.tolerances.items()
            if k in checks
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        out["n_grid"] = self.grid.count
        out.pop("grid")
        out["passed"] = self.passed
        return out


def _support(h: Signal, N: int) -> np.ndarray:
    return h.window(0, N + 1)


def lift_prototype(h: Signal, params: LctParams) -> Signal:
    """Turn an FT-domain power-symmetric ``h`` into an LCT-domain one.

    ``h0(n) = h(n) exp(-j a n^2 T^2 / (2b))``, so ``|H0(w)| = |H(e^{jw})|``.
    """
    return h.replace(samples=h.samples * np.conj(time_chirp(h.indices, params, h.period)))


def _h1_phase(k: np.ndarray, shift: int, params: LctParams, T: float) -> np.ndarray:
    a, b, d = params.a, params.b, params.d
    m = shift - k
    sign = np.where(m % 2 == 0, 1.0, -1.0)
    chirp = np.exp(-1j * a * T * T * (m * m + k * k) / (2 * b))
    return sign * chirp * np.exp(-1j * d * b * math.pi**2 / (2 * T * T))


def derive_h1(h0: Signal, N: int, params: LctParams, L: int | None = None) -> Signal:
    """Companion analysis filter ``h1(k) = h0*(N-k) exp(j phi(k))``.

    ``L`` selects the integer in ``H1(w) = e^{j(db w(w+pi)/T^2 + (2L+1)w)} H0*(w+pi)``;
    the default ``L = -(N+1)/2`` keeps ``h1`` on ``0..N``. Other values move
    the support to ``M-N..M`` with ``M = -(2L+1)``.
    """
    if N % 2 == 0:
        raise EvenOrder(f"filter order must be odd, got {N}")
    shift = N if L is None else -(2 * L + 1)
    T = h0.period
    k = np.arange(shift - N, shift + 1)
    taps = np.conj(_support(h0, N)[shift - k]) * _h1_phase(k, shift, params, T)
    return Signal(taps, shift - N, T)


def derive_synthesis(h: Signal, N: int, params: LctParams) -> Signal:
    """``g(k) = h*(N-k) exp(-j a T^2 ((N-k)^2 + k^2) / (2b))`` on ``0..N``."""
    T = h.period
    k = np.arange(N + 1)
    chirp = np.exp(-1j * params.a * T * T * ((N - k) ** 2 + k**2) / (2 * params.b))
    return Signal(np.conj(_support(h, N)[N - k]) * chirp, 0, T)


def build_bank(h0: Signal, params: LctParams, N: int | None = None) -> FilterBank:
    """All four filters from an LCT-domain power-symmetric ``h0`` supported on ``0..N``."""
    if N is None:
        N = h0.stop_index - 1
    if h0.start_index < 0 or h0.stop_index > N + 1:
        raise ValueError(f"h0 must be supported on 0..{N}")
    h0 = Signal(_support(h0, N), 0, h0.period)
    h1 = derive_h1(h0, N, params)
    return FilterBank(
        h0,
        h1,
        derive_synthesis(h0, N, params),
        derive_synthesis(h1, N, params),
        N,
        params,
    )


def bank_from_prototype(h, params: LctParams, T: float) -> FilterBank:
    """Lift a real/complex FT-domain prototype (taps ``h[0..N]``) and build the bank."""
    h = h if isinstance(h, Signal) else Signal(np.asarray(h, dtype=complex), 0, T)
    return build_bank(lift_prototype(h, params), params)


def _require_grid(grid: FrequencyGrid, N: int) -> None:
    if grid.count < 4 * (N + 1):
        raise GridTooCoarse(f"grid of {grid.count} points is too coarse for order {N}")


def power_symmetry_error(
    h0: Signal, params: LctParams, grid: FrequencyGrid, power: float = DEFAULT_POWER
) -> float:
    """``max | (|H0(w)|^2 + |H0(w+pi)|^2) / power - 1 |`` over ``grid``."""
    w = grid.points
    H = evaluate_dtlct(h0, params, np.concatenate([w, w + math.pi]), normalized=False)
    s = np.abs(H[: w.size]) ** 2 + np.abs(H[w.size :]) ** 2
    return float(np.max(np.abs(s / power - 1.0)))


power_symmetry_check = power_symmetry_error


def alias_phase_matrix(omega, params: LctParams, T: float) -> np.ndarray:
    """``A(w) = diag(e^{-j db w^2/T^2}, e^{-j db (w+pi)^2/T^2})``, shape ``(K, 2, 2)``."""
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    c = params.d * params.b / (T * T)
    A = np.zeros((w.size, 2, 2), dtype=complex)
    A[:, 0, 0] = np.exp(-1j * c * w * w)
    A[:, 1, 1] = np.exp(-1j * c * (w + math.pi) ** 2)
    return A


def modulation_matrix(fb: FilterBank, omega, normalized: bool = False) -> np.ndarray:
    """``H_m(w) = [[H0(w), H0(w+pi)], [H1(w), H1(w+pi)]]``, shape ``(K, 2, 2)``."""
    return _mod(fb.h0, fb.h1, fb.params, omega, normalized, rows=True)


def synthesis_modulation_matrix(fb: FilterBank, omega, normalized: bool = False) -> np.ndarray:
    """``G_m(w) = [[G0(w), G1(w)], [G0(w+pi), G1(w+pi)]]``."""
    return _mod(fb.g0, fb.g1, fb.params, omega, normalized, rows=False)


def _mod(f0, f1, params, omega, normalized, rows):
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    both = np.concatenate([w, w + math.pi])
    F0 = evaluate_dtlct(f0, params, both, normalized)
    F1 = evaluate_dtlct(f1, params, both, normalized)
    K = w.size
    M = np.empty((K, 2, 2), dtype=complex)
    M[:, 0, 0], M[:, 0, 1] = F0[:K], F0[K:]
    M[:, 1, 0], M[:, 1, 1] = F1[:K], F1[K:]
    return M if rows else np.swapaxes(M, 1, 2)


def polyphase_components(f: Signal, kind: PolyKind, params: LctParams) -> tuple[Signal, Signal]:
    p = polyphase_split(f, kind, params)
    return p.comp0, p.comp1


def polyphase_matrix(
    fb: FilterBank, omega, kind: PolyKind, side: str = "analysis", normalized: bool = False
) -> np.ndarray:
    """Polyphase matrix at ``omega`` (components have period ``2T``).

    Analysis: ``[[H00, H01], [H10, H11]]``; synthesis: ``[[G00, G10], [G01, G11]]``.
    """
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    filters = fb.analysis if side == "analysis" else fb.synthesis
    M = np.empty((w.size, 2, 2), dtype=complex)
    for i, f in enumerate(filters):
        for j, comp in enumerate(polyphase_components(f, kind, fb.params)):
            M[:, i, j] = evaluate_dtlct(comp, fb.params, w, normalized)
    return M if side == "analysis" else np.swapaxes(M, 1, 2)


def mod_poly_matrices(omega, params: LctParams, T: float, kind: PolyKind):
    """``B(w)`` and ``C(w)`` with ``X_m(w) = B(w) C(w) X_p(2w)``.

    ``T`` is the period of the full-rate signal; the polyphase components
    have period ``2T``, which is the period entering ``B``.
    """
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    Tp = 2 * T
    B = np.zeros((w.size, 2, 2), dtype=complex)
    B[:, 0, 0] = 1.0
    B[:, 1, 1] = quasi_period_factor(2 * w, params, Tp)
    e = np.exp(kind.sign * 1j * w)
    C = np.empty((w.size, 2, 2), dtype=complex)
    C[:, 0, 0], C[:, 0, 1] = 1.0, e
    C[:, 1, 0], C[:, 1, 1] = 1.0, -e
    return B, C


def paraunitary_error(
    fb: FilterBank, grid: FrequencyGrid | None = None, power: float = DEFAULT_POWER
) -> float:
    """Max Frobenius norm of ``H_m H_m^H / power - I`` over the grid."""
    grid = grid or FrequencyGrid(DEFAULT_GRID)
    _require_grid(grid, fb.order)
    Hm = modulation_matrix(fb, grid.points)
    G = Hm @ np.conj(np.swapaxes(Hm, 1, 2)) / power
    return float(np.max(np.linalg.norm(G - np.eye(2), axis=(1, 2))))


paraunitary_check = paraunitary_error


def h1_formula_error(fb: FilterBank, grid: FrequencyGrid, L: int | None = None) -> float:
    """Distance between the DTLCT of ``h1`` and the frequency-domain rule for ``H1``.

    Both sides use the prefactor-free transform; with the normalized one they
    differ by the constant phase ``prefactor / conj(prefactor) = e^{-j pi/2}``.
    """
    N, p, T = fb.order, fb.params, fb.period
    L = -(N + 1) // 2 if L is None else L
    w = grid.points
    H1 = evaluate_dtlct(fb.h1, p, w, normalized=False)
    H0s = np.conj(evaluate_dtlct(fb.h0, p, w + math.pi, normalized=False))
    phase = np.exp(1j * (p.d * p.b * w * (w + math.pi) / (T * T) + (2 * L + 1) * w))
    return float(np.max(np.abs(H1 - phase * H0s)))


def verify_bank(
    fb: FilterBank,
    grid: FrequencyGrid | None = None,
    ps_tol: float = 1e-8,
    pu_tol: float = 1e-8,
    power: float = DEFAULT_POWER,
) -> VerificationReport:
    grid = grid or FrequencyGrid(DEFAULT_GRID)
    return VerificationReport(
        max_ps_error=power_symmetry_error(fb.h0, fb.params, grid, power),
        max_pu_error=paraunitary_error(fb, grid, power),
        grid=grid,
        tolerances={"ps": ps_tol, "pu": pu_tol},
        h1_formula_error=h1_formula_error(fb, grid),
    )
