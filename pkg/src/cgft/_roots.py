"""Monotone scalar inversion by safeguarded bisection."""

from __future__ import annotations

import math
from typing import Callable


def bisect_monotone(
    f: Callable[[float], float],
    y: float,
    a: float,
    b: float,
    *,
    xtol: float = 1e-12,
    maxiter: int = 300,
) -> float:
    """Solve f(x) = y on [a, b] for a continuous monotone f.

    The bracket must straddle y; the direction is detected from the endpoint
    values.  Returns the bracket midpoint once its width drops below xtol or
    the midpoint stops moving in double precision.
    """
    fa = f(a)
    fb = f(b)
    if fa == y:
        return a
    if fb == y:
        return b
    increasing = fb > fa
    lo_val, hi_val = (fa, fb) if increasing else (fb, fa)
    if not (lo_val < y < hi_val):
        raise ValueError(f"target {y} not bracketed by f values [{fa}, {fb}]")
    lo, hi = a, b
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= xtol or mid == lo or mid == hi:
            return mid
        fm = f(mid)
        if fm == y:
            return mid
        if (fm < y) == increasing:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def invert_decreasing_on_positive(
    f: Callable[[float], float],
    y: float,
    *,
    t0: float = 1.0,
    xtol: float = 1e-13,
) -> float:
    """Solve f(t) = y for a decreasing f on (0, oo), expanding the bracket.

    The bracket grows geometrically from t0 in whichever direction is needed,
    then the equation is bisected in log t so the tolerance is relative.
    """
    if y <= 0:
        raise ValueError("invert_decreasing_on_positive needs y > 0")
    lo = hi = t0
    while f(lo) < y:
        lo *= 0.25
        if lo < 1e-300:
            raise ValueError("no positive solution: f stays below the target")
    while f(hi) > y:
        hi *= 4.0
        if hi > 1e300:
            raise ValueError("no positive solution: f stays above the target")
    if lo == hi:
        return lo
    u = bisect_monotone(
        lambda v: f(math.exp(v)), y, math.log(lo), math.log(hi), xtol=xtol
    )
    return math.exp(u)
