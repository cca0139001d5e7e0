"""Asymptotic rate bounds for binary codes and the quantum-rate thresholds they imply.

``R(x)`` bounds the rate of a binary code of relative distance ``x = d/n``.
An enlarged code built from ``C`` and ``C'`` has rate at most
``R(x) + R(2x/3) - 1``; a dual-containing CSS code has at most ``2 R(x) - 1``.
The thresholds are the relative distances where those rates reach zero.
"""

from __future__ import annotations

import math

from scipy.optimize import minimize_scalar

from .errors import DomainError

KINDS = ("sphere-packing", "mrrw", "mrrw-first")
FAMILIES = ("enlarged", "css")

_TINY = 1e-12


def entropy(x: float) -> float:
    """Binary entropy in bits."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"entropy is defined on [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return 0.0
    if x < _TINY:
        # -x log2 x - (1-x) log2(1-x) with log2(1-x) ~ -x/ln 2
        return x * (1.0 / math.log(2.0) - math.log2(x))
    if 1.0 - x < _TINY:
        return entropy(1.0 - x)
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def _lp_g(z: float) -> float:
    z = min(max(z, 0.0), 1.0)
    return entropy((1.0 - math.sqrt(1.0 - z)) / 2.0)


def _mrrw_second(x: float) -> float:
    """``min_{0<=u<=1-2x} 1 + g(u^2) - g(u^2 + 2xu + 2x)`` with ``g(z) = H((1 - sqrt(1-z))/2)``."""
    if x == 0.0:
        return 1.0
    hi = 1.0 - 2.0 * x
    if hi <= 0.0:
        return 0.0

    def objective(u: float) -> float:
        return 1.0 + _lp_g(u * u) - _lp_g(u * u + 2.0 * x * u + 2.0 * x)

    res = minimize_scalar(objective, bounds=(0.0, hi), method="bounded", options={"xatol": 1e-12})
    return min(float(res.fun), objective(0.0), objective(hi))


def rate_bound(kind: str, x: float) -> float:
    """Upper bound on the rate of binary codes with relative distance ``x``.

    ``"mrrw"`` is the second (linear-programming) McEliece-Rodemich-Rumsey-Welch
    bound; ``"mrrw-first"`` is the simpler ``H(1/2 - sqrt(x(1-x)))``.
    """
    if not 0.0 <= x <= 0.5:
        raise DomainError(f"relative distance must lie in [0, 1/2], got {x}")
    if kind == "sphere-packing":
        return 1.0 - entropy(x / 2.0)
    if kind == "mrrw-first":
        return entropy(max(0.0, 0.5 - math.sqrt(x * (1.0 - x))))
    if kind == "mrrw":
        return _mrrw_second(x)
    raise ValueError(f"unknown bound kind {kind!r}; expected one of {KINDS}")


def quantum_rate(kind: str, family: str, x: float) -> float:
    """Asymptotic upper bound on ``K/n`` at relative distance ``x``."""
    if family == "enlarged":
        return rate_bound(kind, x) + rate_bound(kind, 2.0 * x / 3.0) - 1.0
    if family == "css":
        return 2.0 * rate_bound(kind, x) - 1.0
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def quantum_rate_threshold(kind: str, family: str, tol: float = 1e-6) -> float:
    """Relative distance where :func:`quantum_rate` crosses zero, by bisection on ``[0, 1/2]``."""
    lo, hi = 0.0, 0.5
    f_lo, f_hi = quantum_rate(kind, family, lo), quantum_rate(kind, family, hi)
    if not (f_lo > 0.0 > f_hi):
        raise DomainError(f"no sign change for ({kind}, {family}) on [0, 1/2]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if quantum_rate(kind, family, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
