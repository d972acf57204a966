"""LCT parameters, sampled signals and direct DTLCT evaluation.

Sign and branch conventions used throughout the package:

* only ``b > 0`` is supported, so the ``sgn(b)`` factor is always +1;
* the prefactor ``sqrt(1/(j 2 pi b))`` is taken on the principal branch,
  ``exp(-j pi/4) / sqrt(2 pi b)``;
* chirps always use absolute sample indices ``n``, never buffer offsets.

The transform is evaluated by direct summation. Rows of the kernel are
reduced with ``numpy.sum`` in fixed-size blocks, which keeps the summation
order independent of BLAS threading and makes results bit-reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NonPositiveB, NonUnimodular

UNIMODULAR_TOL = 1e-12
_BLOCK = 256


@dataclass(frozen=True)
class LctParams:
    """Entries of the unimodular LCT matrix ``[[a, b], [c, d]]``."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if not abs(det - 1.0) <= UNIMODULAR_TOL:
            raise NonUnimodular(f"ad - bc = {det!r}, expected 1")
        if not self.b > 0:
            raise NonPositiveB(f"b must be positive, got {self.b!r}")

    @classmethod
    def frft(cls, angle: float) -> LctParams:
        """Fractional Fourier transform at ``angle`` radians."""
        return cls(math.cos(angle), math.sin(angle), -math.sin(angle), math.cos(angle))

    @classmethod
    def fourier(cls) -> LctParams:
        return cls(0.0, 1.0, -1.0, 0.0)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


def validate_params(a: float, b: float, c: float, d: float) -> LctParams:
    """Return checked parameters; raises NonUnimodular or NonPositiveB."""
    return LctParams(float(a), float(b), float(c), float(d))


@dataclass(frozen=True, eq=False)
class Signal:
    """Finite complex sequence ``x(n)`` for ``n = start_index .. start_index+len-1``.

    Samples outside that range are implicitly zero. ``period`` is the sample
    period ``T`` in seconds.
    """

    samples: np.ndarray
    start_index: int = 0
    period: float = 1.0

    def __post_init__(self):
        arr = np.array(self.samples, dtype=complex).reshape(-1)
        if arr.size == 0:
            raise ValueError("signal must have at least one sample")
        if not np.all(np.isfinite(arr)):
            raise ValueError("signal samples must be finite")
        if not (math.isfinite(self.period) and self.period > 0):
            raise ValueError(f"period must be positive, got {self.period!r}")
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)
        object.__setattr__(self, "start_index", int(self.start_index))
        object.__setattr__(self, "period", float(self.period))

    def __len__(self) -> int:
        return self.samples.size

    @property
    def stop_index(self) -> int:
        """One past the last stored index."""
        return self.start_index + self.samples.size

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.start_index, self.stop_index)

    def window(self, lo: int, hi: int) -> np.ndarray:
        """Samples for indices ``lo .. hi-1`` with zero extension."""
        out = np.zeros(max(hi - lo, 0), dtype=complex)
        s, e = max(lo, self.start_index), min(hi, self.stop_index)
        if s < e:
            out[s - lo : e - lo] = self.samples[s - self.start_index : e - self.start_index]
        return out

    def replace(self, samples=None, start_index=None, period=None) -> Signal:
        return Signal(
            self.samples if samples is None else samples,
            self.start_index if start_index is None else start_index,
            self.period if period is None else period,
        )

    @classmethod
    def impulse(cls, at: int = 0, period: float = 1.0, value: complex = 1.0) -> Signal:
        return cls(np.array([value], dtype=complex), at, period)

    @classmethod
    def zeros(cls, length: int, start_index: int = 0, period: float = 1.0) -> Signal:
        return cls(np.zeros(length, dtype=complex), start_index, period)


def max_abs_diff(x: Signal, y: Signal) -> float:
    """Largest ``|x(n) - y(n)|`` over the union of both supports."""
    lo = min(x.start_index, y.start_index)
    hi = max(x.stop_index, y.stop_index)
    return float(np.max(np.abs(x.window(lo, hi) - y.window(lo, hi))))


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform grid ``origin + k * span / count`` for ``k = 0 .. count-1``."""

    count: int
    origin: float = 0.0
    span: float = 2 * math.pi

    def __post_init__(self):
        if int(self.count) != self.count or self.count < 2:
            raise ValueError(f"grid needs at least 2 points, got {self.count!r}")
        object.__setattr__(self, "count", int(self.count))

    @property
    def step(self) -> float:
        return self.span / self.count

    @property
    def points(self) -> np.ndarray:
        return self.origin + np.arange(self.count) * self.step

    def nearest_index(self, omega: float) -> int:
        """Index of the grid point closest to ``omega`` (wrapping when span is 2 pi)."""
        k = round((omega - self.origin) / self.step)
        if math.isclose(self.span, 2 * math.pi):
            k %= self.count
        return int(k)


@dataclass(frozen=True, eq=False)
class Spectrum:
    values: np.ndarray
    grid: FrequencyGrid
    period: float
    params: LctParams = field(repr=False, default=None)

    def __post_init__(self):
        if len(self.values) != self.grid.count:
            raise ValueError("spectrum length does not match its grid")

    @property
    def omega(self) -> np.ndarray:
        return self.grid.points


def prefactor(params: LctParams) -> complex:
    """Principal value of ``sqrt(1/(j 2 pi b))``."""
    return complex(np.exp(-0.25j * math.pi) / math.sqrt(2 * math.pi * params.b))


def time_chirp(n, params: LctParams, T: float):
    """``exp(j a T^2 n^2 / (2b))``; ``n`` may be an integer or an integer array."""
    n = np.asarray(n, dtype=float)
    out = np.exp(1j * params.a * T * T * n * n / (2 * params.b))
    return complex(out) if out.ndim == 0 else out


def freq_chirp(omega, params: LctParams, T: float):
    """``exp(j d b omega^2 / (2 T^2))``, the output-side chirp of the DTLCT."""
    omega = np.asarray(omega, dtype=float)
    out = np.exp(1j * params.d * params.b * omega * omega / (2 * T * T))
    return complex(out) if out.ndim == 0 else out


def quasi_period_factor(omega, params: LctParams, T: float):
    """Ratio ``X(omega + 2 pi) / X(omega)`` shared by every DTLCT with period ``T``."""
    omega = np.asarray(omega, dtype=float)
    out = np.exp(1j * params.d * params.b * 2 * math.pi * (omega + math.pi) / (T * T))
    return complex(out) if out.ndim == 0 else out


def evaluate_dtlct(x: Signal, params: LctParams, omega, normalized: bool = True) -> np.ndarray:
    """DTLCT of ``x`` at arbitrary frequencies.

    With ``normalized=False`` the ``sqrt(1/(j 2 pi b))`` prefactor is left out;
    product identities (convolution, channel and bank equations) hold
    literally in that form.
    """
    omega = np.atleast_1d(np.asarray(omega, dtype=float))
    T = x.period
    n = x.indices.astype(float)
    v = x.samples * time_chirp(n, params, T)
    out = np.empty(omega.size, dtype=complex)
    for s in range(0, omega.size, _BLOCK):
        w = omega[s : s + _BLOCK]
        kernel = np.exp(-1j * np.outer(w, n))
        out[s : s + _BLOCK] = np.sum(kernel * v, axis=1)
    out *= freq_chirp(omega, params, T)
    if normalized:
        out *= prefactor(params)
    return out


def dtlct(x: Signal, params: LctParams, grid: FrequencyGrid, normalized: bool = True) -> Spectrum:
    """DTLCT of ``x`` sampled on ``grid``."""
    return Spectrum(evaluate_dtlct(x, params, grid.points, normalized), grid, x.period, params)
