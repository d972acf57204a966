"""CSV and JSON formats.

* signal CSV: header ``n,re,im``; the period travels separately (CLI flag
  or a JSON sidecar ``<name>.json`` holding ``{"period": T}``);
* prototype CSV: header ``k,re,im`` for taps ``k = 0..N``;
* spectrum CSV: header ``omega,re,im,abs``;
* filter bank JSON: ``{a, b, c, d, T, N, h0: [{re, im}, ...]}`` plus optional
  ``h1``, ``g0``, ``g1`` (recomputed and cross-checked on load) and ``report``.

Floats are written with 17 significant digits so they round-trip exactly.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .construct import FilterBank, build_bank
from .errors import BankMismatch, ParseError
from .transform import LctParams, Signal, Spectrum, max_abs_diff

BANK_CHECK_TOL = 1e-12


def fmt(v: float) -> str:
    return f"{v:.17g}"


def _read_rows(path, header: list[str]) -> list[tuple[int, list[str]]]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ParseError("empty file", 1)
    got = [c.strip() for c in rows[0]]
    if got != header:
        raise ParseError(f"expected header {','.join(header)!r}, got {','.join(got)!r}", 1)
    body = [(i, r) for i, r in enumerate(rows[1:], start=2) if any(c.strip() for c in r)]
    if not body:
        raise ParseError("no data rows", 2)
    return body


def _parse_indexed(path, header) -> tuple[np.ndarray, np.ndarray]:
    idx, vals = [], []
    for line, row in _read_rows(path, header):
        if len(row) != 3:
            raise ParseError(f"expected 3 fields, got {len(row)}", line)
        try:
            n = int(row[0])
            v = complex(float(row[1]), float(row[2]))
        except ValueError as exc:
            raise ParseError(str(exc), line) from None
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ParseError("non-finite value", line)
        if idx and n != idx[-1] + 1:
            raise ParseError(f"index {n} does not follow {idx[-1]}", line)
        idx.append(n)
        vals.append(v)
    return np.array(idx), np.array(vals, dtype=complex)


def sidecar_path(path) -> Path:
    return Path(path).with_suffix(".json")


def read_period(path) -> float | None:
    side = sidecar_path(path)
    if not side.exists():
        return None
    try:
        return float(json.loads(side.read_text())["period"])
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"bad sidecar {side}: {exc}") from None


def read_signal(path, period: float | None = None) -> Signal:
    """Load a signal CSV; ``period`` falls back to the sidecar."""
    if period is None:
        period = read_period(path)
    if period is None:
        raise ParseError(f"no sample period given for {path} (use --period or a sidecar)")
    idx, vals = _parse_indexed(path, ["n", "re", "im"])
    return Signal(vals, int(idx[0]), period)


def write_signal(path, x: Signal, sidecar: bool = True) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("n,re,im\n")
        for n, v in zip(x.indices, x.samples):
            fh.write(f"{n},{fmt(v.real)},{fmt(v.imag)}\n")
    if sidecar:
        sidecar_path(path).write_text(json.dumps({"period": float(fmt(x.period))}) + "\n")


def read_prototype(path) -> np.ndarray:
    idx, vals = _parse_indexed(path, ["k", "re", "im"])
    if idx[0] != 0:
        raise ParseError("prototype taps must start at k=0", 2)
    return vals


def write_prototype(path, taps) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("k,re,im\n")
        for k, v in enumerate(np.asarray(taps, dtype=complex)):
            fh.write(f"{k},{fmt(v.real)},{fmt(v.imag)}\n")


def write_spectrum(path, spec: Spectrum) -> None:
    with open(path, "w", newline="") as fh:
        fh.write("omega,re,im,abs\n")
        for w, v in zip(spec.omega, spec.values):
            fh.write(f"{fmt(w)},{fmt(v.real)},{fmt(v.imag)},{fmt(abs(v))}\n")


def _taps(x: Signal) -> list[dict]:
    return [{"re": float(fmt(v.real)), "im": float(fmt(v.imag))} for v in x.samples]


def _untaps(items, name) -> np.ndarray:
    try:
        return np.array([complex(float(t["re"]), float(t["im"])) for t in items], dtype=complex)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad taps in {name!r}: {exc}") from None


def bank_to_dict(fb: FilterBank, report: dict | None = None) -> dict:
    a, b, c, d = fb.params.as_tuple()
    out = {"a": a, "b": b, "c": c, "d": d, "T": fb.period, "N": fb.order}
    for name in ("h0", "h1", "g0", "g1"):
        out[name] = _taps(getattr(fb, name))
    if report is not None:
        out["report"] = report
    return out


def bank_from_dict(data: dict) -> FilterBank:
    try:
        params = LctParams(*(float(data[k]) for k in "abcd"))
        T, N = float(data["T"]), int(data["N"])
        h0 = _untaps(data["h0"], "h0")
    except KeyError as exc:
        raise ParseError(f"bank JSON lacks field {exc}") from None
    if h0.size != N + 1:
        raise ParseError(f"h0 has {h0.size} taps, expected N+1 = {N + 1}")
    fb = build_bank(Signal(h0, 0, T), params, N)
    for name in ("h1", "g0", "g1"):
        if name in data:
            stored = Signal(_untaps(data[name], name), 0, T)
            err = max_abs_diff(stored, getattr(fb, name))
            if err > BANK_CHECK_TOL * max(1.0, float(np.max(np.abs(h0)))):
                raise BankMismatch(f"stored {name} differs from recomputed one by {err:.3e}")
    return fb


def write_bank(path, fb: FilterBank, report: dict | None = None) -> None:
    Path(path).write_text(json.dumps(bank_to_dict(fb, report), indent=2) + "\n")


def read_bank(path) -> FilterBank:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return bank_from_dict(data)


def write_json(path, obj: dict) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
