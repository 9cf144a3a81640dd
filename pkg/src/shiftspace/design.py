"""Choosing spaced-family parameters to hit a prescribed growth rate.

The forward map sends (m, k) to the dominant root of x^(m+1) - x^m - (k-1);
inverting it for a target root gives k = lambda^(m+1) - lambda^m + 1, which
is an admissible alphabet size exactly when that value is an integer of at
least 2.  Entropy targets are scanned over a parameter grid instead, since
distinct m can reach the same rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError
from .spectral import dominant_root, entropy_tmk

EXACT_DEVIATION = 1e-9


@dataclass(frozen=True)
class DesignResult:
    """One admissible parameter pair for an entropy target."""

    m: int
    k: int
    lambda0: float
    entropy: float
    deviation: float
    exact: bool

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "lambda0": self.lambda0,
            "entropy": self.entropy,
            "deviation": self.deviation,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class EntropyTableRow:
    """Growth rate and entropy of one parameter pair."""

    m: int
    k: int
    lambda0: float
    entropy: float

    def as_dict(self) -> dict:
        return {"m": self.m, "k": self.k, "lambda0": self.lambda0, "entropy": self.entropy}


def _require_range(name: str, bounds, minimum: int) -> tuple[int, int]:
    try:
        lo, hi = bounds
    except (TypeError, ValueError):
        raise ParameterError(f"{name} must be a (low, high) pair, got {bounds!r}") from None
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (lo, hi)):
        raise ParameterError(f"{name} bounds must be integers, got {bounds!r}")
    if lo < minimum or hi < lo:
        raise ParameterError(f"{name} must satisfy {minimum} <= low <= high, got {bounds!r}")
    return lo, hi


def k_for_target_ratio(lambda_target: float, m: int) -> int | None:
    """Alphabet size whose gap-m space grows at lambda_target, or None.

    The inversion k = lambda^(m+1) - lambda^m + 1 is accepted only when it
    lands within 1e-9 of an integer >= 2 and the forward computation
    reproduces the target to the same precision.
    """
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ParameterError(f"m must be an integer >= 1, got {m!r}")
    if not isinstance(lambda_target, (int, float)) or isinstance(lambda_target, bool):
        raise ParameterError(f"lambda_target must be a number, got {lambda_target!r}")
    lambda_target = float(lambda_target)
    if not math.isfinite(lambda_target) or lambda_target <= 1.0:
        raise ParameterError(f"lambda_target must be a finite number > 1, got {lambda_target}")
    raw = lambda_target ** (m + 1) - lambda_target**m + 1.0
    candidate = round(raw)
    if abs(raw - candidate) > 1e-9 * max(1.0, abs(raw)):
        return None
    if candidate < 2:
        return None
    if abs(dominant_root(m, candidate) - lambda_target) > 1e-9 * max(1.0, lambda_target):
        return None
    return candidate


def design_for_entropy(
    target_entropy: float,
    log_base: str = "e",
    m_range: tuple[int, int] = (1, 3),
    k_range: tuple[int, int] = (2, 30),
    tol: float = 1e-9,
) -> list[DesignResult]:
    """All grid pairs whose entropy lies within tol of the target.

    Results are sorted by (deviation, m, k); an empty list means no pair on
    the grid comes close enough.  The exact flag marks deviations below
    1e-9.
    """
    if not isinstance(target_entropy, (int, float)) or isinstance(target_entropy, bool):
        raise ParameterError(f"target_entropy must be a number, got {target_entropy!r}")
    target_entropy = float(target_entropy)
    if not math.isfinite(target_entropy) or target_entropy <= 0.0:
        raise ParameterError(f"target_entropy must be finite and > 0, got {target_entropy}")
    if not isinstance(tol, (int, float)) or isinstance(tol, bool) or not tol > 0:
        raise ParameterError(f"tol must be a positive number, got {tol!r}")
    m_lo, m_hi = _require_range("m_range", m_range, 1)
    k_lo, k_hi = _require_range("k_range", k_range, 2)
    results = []
    for m in range(m_lo, m_hi + 1):
        for k in range(k_lo, k_hi + 1):
            report = entropy_tmk(m, k, log_base=log_base)
            deviation = abs(report.entropy - target_entropy)
            if deviation <= tol:
                results.append(
                    DesignResult(
                        m=m,
                        k=k,
                        lambda0=report.lambda0,
                        entropy=report.entropy,
                        deviation=deviation,
                        exact=deviation < EXACT_DEVIATION,
                    )
                )
    results.sort(key=lambda r: (r.deviation, r.m, r.k))
    return results


def entropy_table(
    m_range: tuple[int, int] = (1, 3),
    k_range: tuple[int, int] = (2, 30),
    log_base: str = "e",
) -> list[EntropyTableRow]:
    """Growth rate and entropy for every pair on the grid, m-major order."""
    m_lo, m_hi = _require_range("m_range", m_range, 1)
    k_lo, k_hi = _require_range("k_range", k_range, 2)
    rows = []
    for m in range(m_lo, m_hi + 1):
        for k in range(k_lo, k_hi + 1):
            report = entropy_tmk(m, k, log_base=log_base)
            rows.append(EntropyTableRow(m=m, k=k, lambda0=report.lambda0, entropy=report.entropy))
    return rows
