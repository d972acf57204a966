"""Power-symmetric prototypes: half-band design and spectral factorization.

A zero-phase half-band ``f(n)``, ``n = -N..N`` with ``f(0) = 1/2`` and
``f(2k) = 0`` satisfies ``F(w) + F(w + pi) = 1``. If ``F >= 0`` it factors as
``F = |H|^2`` and ``H`` is power symmetric with constant 1; scaling ``H`` by
``sqrt(2)`` gives the unit-energy prototype a PR bank needs.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import InvalidOrder, NegativeSpectrum, RootFindingFailure

LIFT_MARGIN = 1e-12
NEGATIVE_TOL = 1e-9
_CIRCLE_BAND = 1e-4


def zero_phase_response(f: np.ndarray, omega) -> np.ndarray:
    """``F(w) = f(0) + 2 sum_{n>0} f(n) cos(n w)`` for a symmetric real ``f(-N..N)``."""
    f = np.asarray(f, dtype=float)
    N = (f.size - 1) // 2
    w = np.atleast_1d(np.asarray(omega, dtype=float))
    n = np.arange(1, N + 1)
    return f[N] + 2.0 * np.cos(np.outer(w, n)) @ f[N + 1 :]


def min_response(f: np.ndarray, n_grid: int = 8192) -> float:
    """Minimum of ``F`` over ``[0, pi]``: dense grid, then a bounded refinement."""
    w = np.linspace(0.0, math.pi, n_grid + 1)
    F = zero_phase_response(f, w)
    k = int(np.argmin(F))
    lo, hi = w[max(k - 1, 0)], w[min(k + 1, n_grid)]
    res = minimize_scalar(
        lambda t: float(zero_phase_response(f, t)[0]),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-14},
    )
    return float(min(F[k], res.fun))


def design_halfband(order: int, transition_bandwidth: float = 0.2 * math.pi, shape: float = 2.0) -> np.ndarray:
    """Windowed half-band filter of even ``order = 2N`` with ``N`` odd.

    The ideal response has a linear transition of width
    ``transition_bandwidth`` centred on ``pi/2``; it is tapered by a Kaiser
    window with parameter ``shape``. If the result dips below zero the centre
    tap is raised by ``|min F| + 1e-12`` and everything rescaled so that
    ``f(0) = 1/2`` again, which keeps the half-band property exact.

    Returns ``f(-N..N)`` as a real array.
    """
    if int(order) != order or order < 2 or order % 4 != 2:
        raise InvalidOrder(f"half-band order must be 2 mod 4 (2N with N odd), got {order}")
    if not 0.0 < transition_bandwidth < math.pi / 2:
        raise ValueError("transition bandwidth must lie in (0, pi/2)")
    N = order // 2
    n = np.arange(-N, N + 1)
    odd = n % 2 == 1
    ideal = np.zeros(n.size)
    # sin(pi n / 2) is exactly +-1 on odd n and 0 on even n
    ideal[odd] = np.where((n[odd] - 1) % 4 == 0, 1.0, -1.0) / (math.pi * n[odd])
    ideal *= np.sinc(transition_bandwidth * n / (2 * math.pi))
    f = ideal * np.kaiser(n.size, shape)
    f[N] = 0.5

    fmin = min_response(f)
    if fmin < 0:
        eps = -fmin + LIFT_MARGIN
        f = f / (1.0 + 2.0 * eps)
        f[N] = 0.5
    return f


def _pair_circle_roots(roots: np.ndarray) -> list[complex]:
    """Collapse nearly coincident roots near ``|z| = 1`` into single unit-modulus roots."""
    remaining = list(roots)
    merged = []
    while remaining:
        r = remaining.pop(0)
        if not remaining:
            raise RootFindingFailure("odd number of roots on the unit circle")
        j = int(np.argmin([abs(r - s) for s in remaining]))
        m = (r + remaining.pop(j)) / 2
        merged.append(m / abs(m))
    return merged


def spectral_factor(halfband: np.ndarray) -> np.ndarray:
    """Minimum-phase ``h`` with ``conv(h, reverse(conj(h))) == halfband``.

    Roots come from the companion matrix of the symmetric polynomial. Roots
    strictly inside the unit circle are kept; the (double) roots on the
    circle are paired and one of each pair is kept. Real input yields real
    taps with ``h[0] > 0``.
    """
    f = np.asarray(halfband)
    if f.ndim != 1 or f.size % 2 == 0:
        raise ValueError("half-band must have odd length 2N+1")
    is_real = np.isrealobj(f) or np.allclose(np.imag(f), 0.0, atol=0.0)
    f = np.real(f) if is_real else f.astype(complex)
    if is_real and not np.allclose(f, f[::-1], rtol=0, atol=1e-14):
        raise ValueError("half-band must be symmetric")
    N = (f.size - 1) // 2
    if N == 0:
        if f[0] < 0:
            raise NegativeSpectrum("negative constant spectrum")
        return np.array([math.sqrt(f[0])])
    if is_real:
        fmin = min_response(f)
        if fmin < -NEGATIVE_TOL:
            raise NegativeSpectrum(f"half-band response reaches {fmin:.3e} < 0")
    if f[0] == 0:
        raise RootFindingFailure("outermost taps vanish; order is lower than stated")

    roots = np.roots(f)
    if roots.size != 2 * N or not np.all(np.isfinite(roots)):
        raise RootFindingFailure("companion eigenvalues failed")
    mod = np.abs(roots)
    inside = roots[mod < 1 - _CIRCLE_BAND]
    on_circle = roots[np.abs(mod - 1) <= _CIRCLE_BAND]
    chosen = list(inside) + _pair_circle_roots(on_circle)
    if len(chosen) != N:
        raise RootFindingFailure(f"selected {len(chosen)} roots, expected {N}")

    h = np.poly(chosen)
    if is_real:
        if np.max(np.abs(h.imag)) > 1e-8 * np.max(np.abs(h)):
            raise RootFindingFailure("selected roots are not conjugate-symmetric")
        h = h.real
    r = np.convolve(h, np.conj(h[::-1]))
    scale = np.vdot(r, f).real / np.vdot(r, r).real
    if scale <= 0:
        raise RootFindingFailure("factor does not reproduce the half-band")
    h = h * math.sqrt(scale)
    if is_real and h[0] < 0:
        h = -h
    return h


def design_prototype(order: int, transition_bandwidth: float = 0.2 * math.pi, shape: float = 2.0) -> np.ndarray:
    """Unit-energy power-symmetric prototype of length ``order/2 + 1``.

    ``|H(w)|^2 + |H(w + pi)|^2 = 2``.
    """
    return math.sqrt(2.0) * spectral_factor(design_halfband(order, transition_bandwidth, shape))


def ft_power_symmetry_error(h, n_grid: int = 1024, power: float = 2.0) -> float:
    """``max | (|H(w)|^2 + |H(w+pi)|^2) / power - 1 |`` for plain FT-domain taps ``h[0..]``."""
    h = np.asarray(h, dtype=complex)
    w = 2 * math.pi * np.arange(n_grid) / n_grid
    k = np.arange(h.size)
    H = np.exp(-1j * np.outer(w, k)) @ h
    Hp = np.exp(-1j * np.outer(w + math.pi, k)) @ h
    return float(np.max(np.abs((np.abs(H) ** 2 + np.abs(Hp) ** 2) / power - 1.0)))
