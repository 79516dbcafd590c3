"""Power weights |t|^gamma and their Muckenhoupt classification.

For w(t) = |t|^gamma on the line, w lies in A_p (1 < p < inf) exactly when
-1 < gamma < p - 1, and in A_inf exactly when gamma > -1.  On an interval
Q the Muckenhoupt quotient

    (avg_Q w) * (avg_Q w^{-1/(p-1)})^{p-1}

has a closed form, which is what ap_constant_estimate evaluates; no
numerical integration is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["PowerWeight", "ap_classify", "ap_constant_estimate"]


@dataclass(frozen=True)
class PowerWeight:
    """w(t) = |t|^gamma; admissible (locally integrable) iff gamma > -1."""

    gamma: float

    def __post_init__(self):
        if not (self.gamma > -1):
            raise ValueError(f"power weight needs gamma > -1, got {self.gamma}")

    def __call__(self, t):
        return abs(t) ** self.gamma

    def integral(self, a: float, b: float) -> float:
        """int_a^b |t|^gamma dt, exact."""
        if a > b:
            raise ValueError("interval must be ordered")
        e = self.gamma + 1.0
        if a >= 0:
            return (b ** e - a ** e) / e
        if b <= 0:
            return ((-a) ** e - (-b) ** e) / e
        return ((-a) ** e + b ** e) / e


def ap_classify(gamma: float, p: float) -> bool:
    """Whether |t|^gamma is a Muckenhoupt A_p weight.

    A_p membership for 1 < p < inf means -1 < gamma < p - 1; p = inf asks
    for A_inf = union of all A_p, i.e. gamma > -1.
    """
    if not p > 1:
        raise ValueError(f"A_p classification needs p > 1, got {p}")
    if not gamma > -1:
        return False
    if math.isinf(p):
        return True
    return gamma < p - 1.0


def _avg_power(gamma: float, a: float, b: float) -> float:
    """Average of |t|^gamma over [a, b]; inf when not locally integrable."""
    if gamma <= -1:
        # |t|^gamma fails local integrability only on intervals touching 0
        if a <= 0 <= b:
            return math.inf
        lo, hi = (a, b) if a > 0 else (-b, -a)
        e = gamma + 1.0
        return (hi ** e - lo ** e) / (e * (b - a))
    return PowerWeight(gamma).integral(a, b) / (b - a)


def ap_constant_estimate(gamma: float, p: float, intervals) -> float:
    """max over the interval family of the closed-form A_p quotient
    (avg w)(avg w^{-1/(p-1)})^{p-1}; math.inf when the dual power fails
    to be integrable on some interval (i.e. gamma >= p - 1 touching 0)."""
    if not (1 < p < math.inf):
        raise ValueError(f"A_p quotient needs 1 < p < inf, got {p}")
    if not gamma > -1:
        raise ValueError(f"weight must be locally integrable: gamma > -1, got {gamma}")
    worst = 1.0
    dual = -gamma / (p - 1.0)
    for a, b in intervals:
        if not b > a:
            raise ValueError("intervals must be nondegenerate and ordered")
        wa = _avg_power(gamma, a, b)
        da = _avg_power(dual, a, b)
        if math.isinf(wa) or math.isinf(da):
            return math.inf
        worst = max(worst, wa * da ** (p - 1.0))
    return worst
