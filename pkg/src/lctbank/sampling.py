"""Time-domain operator algebra that goes with the DTLCT.

Convolution and delay here carry the cross-chirps that make them act
multiplicatively in the LCT domain:

    (h * x)(n) = sum_k h(k) x(n-k) exp(-j a T^2 k (n-k) / b)
    D^k[x](n)  = x(n-k) exp(j a T^2 (k^2 - 2 n k) / (2b))
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InconsistentPair, PeriodMismatch
from .transform import LctParams, Signal, time_chirp


class PolyKind(enum.Enum):
    TYPE1 = 1  # odd branch advanced: X(w) = X0(2w) + e^{-jw} X1(2w)
    TYPE2 = 2  # odd branch delayed:  X(w) = X0(2w) + e^{+jw} X1(2w)

    @property
    def sign(self) -> int:
        """Exponent sign of the odd-branch phase ``e^{sign j w}``."""
        return -1 if self is PolyKind.TYPE1 else 1

    @property
    def other(self) -> PolyKind:
        return PolyKind.TYPE2 if self is PolyKind.TYPE1 else PolyKind.TYPE1


@dataclass(frozen=True, eq=False)
class PolyphasePair:
    comp0: Signal
    comp1: Signal
    kind: PolyKind
    params: LctParams

    def __post_init__(self):
        if not same_period(self.comp0.period, self.comp1.period):
            raise InconsistentPair(
                f"component periods differ: {self.comp0.period!r} vs {self.comp1.period!r}"
            )


def same_period(t1: float, t2: float) -> bool:
    return math.isclose(t1, t2, rel_tol=1e-12, abs_tol=0.0)


def _check_periods(*signals: Signal) -> float:
    T = signals[0].period
    for s in signals[1:]:
        if not same_period(s.period, T):
            raise PeriodMismatch(f"sample periods differ: {T!r} vs {s.period!r}")
    return T


def add(*signals: Signal) -> Signal:
    """Pointwise sum over the union of supports."""
    T = _check_periods(*signals)
    lo = min(s.start_index for s in signals)
    hi = max(s.stop_index for s in signals)
    total = np.zeros(hi - lo, dtype=complex)
    for s in signals:
        total[s.start_index - lo : s.stop_index - lo] += s.samples
    return Signal(total, lo, T)


def upsample(x: Signal, L: int) -> Signal:
    """Insert ``L-1`` zeros between samples; the period shrinks to ``T/L``."""
    if L < 1:
        raise ValueError(f"upsampling factor must be >= 1, got {L}")
    if L == 1:
        return x
    out = np.zeros(L * (len(x) - 1) + 1, dtype=complex)
    out[::L] = x.samples
    return Signal(out, L * x.start_index, x.period / L)


def downsample(x: Signal, M: int) -> Signal:
    """Keep ``x(M n)``; the period grows to ``M T``."""
    if M < 1:
        raise ValueError(f"downsampling factor must be >= 1, got {M}")
    if M == 1:
        return x
    first = -(-x.start_index // M)
    last = (x.stop_index - 1) // M
    if last < first:
        return Signal.zeros(1, first, M * x.period)
    kept = x.samples[M * first - x.start_index : M * last - x.start_index + 1 : M]
    return Signal(kept, first, M * x.period)


def lct_convolve(h: Signal, x: Signal, params: LctParams) -> Signal:
    """LCT convolution; the output support is the Minkowski sum of the inputs'.

    Uses ``exp(-j a T^2 k(n-k)/b) = c(k) c(n-k) / c(n)`` with the time chirp
    ``c``, so the double sum reduces to one ordinary convolution.
    """
    T = _check_periods(h, x)
    hc = h.samples * time_chirp(h.indices, params, T)
    xc = x.samples * time_chirp(x.indices, params, T)
    start = h.start_index + x.start_index
    y = np.convolve(hc, xc)
    y *= np.conj(time_chirp(np.arange(start, start + y.size), params, T))
    return Signal(y, start, T)


def delay_pow(x: Signal, k: int, params: LctParams) -> Signal:
    """``D^k[x]``; negative ``k`` advances the signal."""
    if k == 0:
        return x
    T = x.period
    n = x.indices + k
    phase = np.exp(1j * params.a * T * T * (k * k - 2.0 * n * k) / (2 * params.b))
    return Signal(x.samples * phase, x.start_index + k, T)


def _parity_part(x: Signal, parity: int) -> Signal:
    mask = (x.indices % 2) == parity
    return x.replace(samples=np.where(mask, x.samples, 0))


def polyphase_split(x: Signal, kind: PolyKind, params: LctParams) -> PolyphasePair:
    """Even/odd split; the odd branch is re-aligned with ``D^-1`` (type 1) or ``D`` (type 2)."""
    shift = -1 if kind is PolyKind.TYPE1 else 1
    comp0 = downsample(_parity_part(x, 0), 2)
    comp1 = downsample(delay_pow(_parity_part(x, 1), shift, params), 2)
    return PolyphasePair(comp0, comp1, kind, params)


def polyphase_merge(p: PolyphasePair) -> Signal:
    shift = 1 if p.kind is PolyKind.TYPE1 else -1
    even = upsample(p.comp0, 2)
    odd = delay_pow(upsample(p.comp1, 2), shift, p.params)
    return add(even, odd)
