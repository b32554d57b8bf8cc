"""Nontrivial-zero handling: scanning, verification, persistence, B(chi).

Zeros are stored as positive ordinates gamma (zeros 1/2 + i*gamma); RH is
numerically verified in the covered range via the argument-principle count,
and the 0 < s < 1 real segment is checked separately for sign changes.
"""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np
import scipy.special as sc
from scipy.integrate import quad

from .characters import RealPrimitiveCharacter
from .errors import ContourError, EmptyListError, FormatError, TailError
from .lfunction import evaluate_L_array, log_gamma_factor, z_function_array

Source = Literal["scanned", "ingested", "synthetic"]


@dataclass(frozen=True)
class ZeroList:
    d: int
    ordinates: tuple[float, ...]
    per_zero_error: float
    covered_height: float
    source: Source = "scanned"
    complete: bool = False

    def __post_init__(self):
        arr = np.asarray(self.ordinates)
        if arr.size and (np.any(arr <= 0) or np.any(np.diff(arr) <= 0)):
            raise ValueError("ordinates must be positive and strictly increasing")

    def __len__(self) -> int:
        return len(self.ordinates)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.ordinates, dtype=np.float64)


@dataclass(frozen=True)
class SyntheticZeroSet:
    """Hypothetical zeros; conjugates implied, never stored twice.

    `zeros` holds the strictly-upper-half-plane members; `real_zero` an
    optional real zero beta in (0,1) (Siegel configuration).
    """

    zeros: tuple[complex, ...]
    real_zero: float | None = None

    def __post_init__(self):
        for z in self.zeros:
            if not (0.0 < z.real < 1.0) or z.imag <= 0:
                raise ValueError(f"synthetic zero {z} outside the open strip")
        if self.real_zero is not None and not 0.0 < self.real_zero < 1.0:
            raise ValueError("real zero must lie in (0,1)")

    def all_zeros(self) -> list[complex]:
        """Conjugate-closed list, real zero included."""
        out: list[complex] = []
        if self.real_zero is not None:
            out.append(complex(self.real_zero))
        for z in self.zeros:
            out.extend((z, z.conjugate()))
        return out


def default_step(chi: RealPrimitiveCharacter, T: float) -> float:
    """Anti-skip heuristic: a fraction of the asymptotic mean zero gap."""
    return math.pi / math.log(chi.q * T / (2 * math.pi) + 4) / 6.0


def scan_zeros(
    chi: RealPrimitiveCharacter,
    T: float,
    step: float | None = None,
    per_zero_error: float = 1e-9,
) -> ZeroList:
    """Bracket every sign change of Z on (0, T] and refine by bisection."""
    if not 0 < T <= 1e3:
        raise ValueError("T must lie in (0, 1e3]")
    if step is None:
        step = default_step(chi, T)
    cap = math.pi / math.log(chi.q * T / (2 * math.pi) + 4)
    if step > cap:
        raise ValueError(f"step {step} exceeds anti-skip cap {cap:.4g}")
    grid = np.arange(step, T + step / 2, step)
    grid = grid[grid <= T]
    zvals = z_function_array(chi, grid)
    flips = np.nonzero(np.sign(zvals[:-1]) * np.sign(zvals[1:]) < 0)[0]
    ordinates = []
    for i in flips:
        lo, hi = float(grid[i]), float(grid[i + 1])
        flo = float(zvals[i])
        while hi - lo > per_zero_error:
            mid = 0.5 * (lo + hi)
            fm = float(z_function_array(chi, np.array([mid]))[0])
            if flo * fm <= 0:
                hi = mid
            else:
                lo, flo = mid, fm
        ordinates.append(0.5 * (lo + hi))
    return ZeroList(
        d=chi.d,
        ordinates=tuple(ordinates),
        per_zero_error=per_zero_error,
        covered_height=float(T),
        source="scanned",
    )


def lowest_zero(zlist: ZeroList) -> float:
    """gamma~0, the smallest positive ordinate."""
    if not zlist.ordinates:
        raise EmptyListError("zero list is empty")
    return zlist.ordinates[0]


# --- argument-principle count ------------------------------------------------

_SIGMA_LO, _SIGMA_HI = -0.5, 1.5


def _lambda_phase(chi: RealPrimitiveCharacter, pts: np.ndarray) -> np.ndarray:
    """Im log Lambda (mod 2pi) along an array of points."""
    lval, _ = evaluate_L_array(chi, pts, target_epsilon=1e-9)
    g = np.array([log_gamma_factor(chi, complex(z)) for z in pts])
    return np.angle(lval) + g.imag


def _phase_delta(chi, a: complex, b: complex, fa: float, fb: float, depth: int) -> float:
    """Continuous phase increment along segment [a,b], adaptive bisection."""
    delta = math.remainder(fb - fa, 2 * math.pi)
    if abs(delta) < 0.8 or depth > 40:
        return delta
    mid = 0.5 * (a + b)
    fm = float(_lambda_phase(chi, np.array([mid]))[0])
    return _phase_delta(chi, a, mid, fa, fm, depth + 1) + _phase_delta(
        chi, mid, b, fm, fb, depth + 1
    )


def count_check(chi: RealPrimitiveCharacter, zlist: ZeroList) -> dict:
    """Compare len(zlist) with the winding number of Lambda over a rectangle."""
    T = zlist.covered_height
    t_lo = 0.04 if not zlist.ordinates else min(0.04, zlist.ordinates[0] / 2)
    t_hi = T
    arr = zlist.array
    if arr.size and float(np.min(np.abs(arr - t_hi))) < 1e-3:
        t_hi = T + 1e-2  # nudge contour away from a zero sitting on the edge
        if arr.size and float(np.min(np.abs(arr - t_hi))) < 1e-3:
            raise ContourError("cannot place top edge clear of zeros")
    corners = [
        complex(_SIGMA_LO, t_lo),
        complex(_SIGMA_HI, t_lo),
        complex(_SIGMA_HI, t_hi),
        complex(_SIGMA_LO, t_hi),
        complex(_SIGMA_LO, t_lo),
    ]
    total = 0.0
    for c0, c1 in zip(corners[:-1], corners[1:]):
        n_seg = max(8, int(abs(c1 - c0) * 8))
        pts = c0 + (c1 - c0) * np.linspace(0.0, 1.0, n_seg + 1)
        ph = _lambda_phase(chi, pts)
        for j in range(n_seg):
            total += _phase_delta(
                chi, complex(pts[j]), complex(pts[j + 1]), float(ph[j]), float(ph[j + 1]), 0
            )
    winding = total / (2 * math.pi)
    expected = round(winding)
    if abs(winding - expected) > 0.25:
        raise ContourError(f"winding {winding:.3f} not close to an integer")
    found = len(zlist)
    return {"expected": float(winding), "count": expected, "found": found,
            "pass": found == expected}


def mark_complete(chi: RealPrimitiveCharacter, zlist: ZeroList) -> ZeroList:
    """Set the completeness flag iff count_check passes."""
    report = count_check(chi, zlist)
    return replace(zlist, complete=bool(report["pass"]))


def real_segment_positive(chi: RealPrimitiveCharacter, step: float = 5e-3) -> bool:
    """No real zero in (0,1): L(sigma, chi) keeps the sign of L(1, chi) > 0."""
    sigma = np.arange(step, 1.0, step)
    vals, _ = evaluate_L_array(chi, sigma.astype(np.complex128))
    return bool(np.all(vals.real > 0))


# --- smooth counting machinery (shared with the explicit-formula tails) ------


def theta_phase(chi: RealPrimitiveCharacter, t: np.ndarray) -> np.ndarray:
    """Smooth phase theta(t): Im log of the gamma factor at 1/2 + it."""
    t = np.asarray(t, dtype=np.float64)
    z = 0.25 * (1 + 2 * chi.b) + 0.5j * t
    return np.imag(sc.loggamma(z)) + 0.5 * t * math.log(chi.q / math.pi)


def zero_density(chi: RealPrimitiveCharacter, t: np.ndarray) -> np.ndarray:
    """theta'(t)/pi, the smooth density of ordinates near height t."""
    t = np.asarray(t, dtype=np.float64)
    z = 0.25 * (1 + 2 * chi.b) + 0.5j * t
    return (0.5 * np.real(sc.psi(z)) + 0.5 * math.log(chi.q / math.pi)) / math.pi


def b_constant(
    chi: RealPrimitiveCharacter, zlist: ZeroList
) -> tuple[float, float]:
    """B(chi) = -2 sum_{gamma>0} beta/(beta^2+gamma^2), truncated + tail.

    Returns (value, tail_bound); the value includes a density-based tail
    estimate, the bound covers its residual.  Strictly negative.
    """
    if zlist.covered_height < 50:
        raise ValueError("need a verified list to height T >= 50")
    from .logderiv import nontrivial_pair_tail  # local import, no cycle at load

    gam = zlist.array
    partial = -2.0 * float(np.sum(0.5 / (0.25 + gam * gam)))
    # remaining zeros: pairs contribute -2*(1/2)/(1/4+t^2) = -1/(1/4+t^2)
    tail_est, tail_bound = nontrivial_pair_tail(
        chi, zlist, lambda t: -1.0 / (0.25 + t * t)
    )
    value = partial + tail_est
    if tail_bound > 0.1 * abs(partial):
        raise TailError(f"tail bound {tail_bound:.3g} exceeds 10% of |partial|")
    return value, tail_bound


# --- persistence -------------------------------------------------------------

_HEADER_PREFIX = "# lmono-zeros v1"


def store_zeros(zlist: ZeroList, path: str | os.PathLike) -> None:
    """Write the normative CSV: header + `d,index,ordinate,error` rows."""
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(
                f"{_HEADER_PREFIX}, d={zlist.d}, T={zlist.covered_height!r}, "
                f"source={zlist.source}\n"
            )
            for j, g in enumerate(zlist.ordinates, start=1):
                fh.write(f"{zlist.d},{j},{g!r},{zlist.per_zero_error!r}\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_zeros(path: str | os.PathLike) -> ZeroList:
    """Read and re-validate a zero cache file; FormatError carries the line."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith(_HEADER_PREFIX):
        raise FormatError("missing lmono-zeros v1 header", line=1)
    header = lines[0]
    try:
        fields = dict(
            part.strip().split("=", 1) for part in header.split(",")[1:]
        )
        d = int(fields["d"])
        T = float(fields["T"])
        source = fields.get("source", "ingested").strip()
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad header: {exc}", line=1) from None
    ordinates: list[float] = []
    error = 1e-9
    for lineno, row in enumerate(lines[1:], start=2):
        if not row.strip():
            continue
        parts = row.split(",")
        if len(parts) != 4:
            raise FormatError("expected `d,index,ordinate,error`", line=lineno)
        try:
            rd, idx, g, err = int(parts[0]), int(parts[1]), float(parts[2]), float(parts[3])
        except ValueError as exc:
            raise FormatError(str(exc), line=lineno)
        if rd != d:
            raise FormatError(f"row discriminant {rd} != header {d}", line=lineno)
        if idx != len(ordinates) + 1:
            raise FormatError(f"index {idx} out of order", line=lineno)
        if g <= 0 or (ordinates and g <= ordinates[-1]):
            raise FormatError("ordinates must be positive and sorted", line=lineno)
        if err <= 0:
            raise FormatError("error must be positive", line=lineno)
        ordinates.append(g)
        error = max(error, err)
    if source not in ("scanned", "ingested", "synthetic"):
        source = "ingested"
    return ZeroList(
        d=d,
        ordinates=tuple(ordinates),
        per_zero_error=error,
        covered_height=T,
        source="ingested",
        complete=False,
    )
