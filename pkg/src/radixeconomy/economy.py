"""Radix-economy cost functions and their minimisers.

For a fixed range ``C = r**w`` the width is ``w = ln C / ln r`` and two costs
are considered:

* product ``E1 = r * w``, minimised at ``r = e`` for every C;
* sum ``E2 = r + w``, minimised where ``r * ln(r)**2 = ln C``.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from typing import List

from .errors import DomainError

#: Left end of the root bracket for the sum-cost optimum.
BRACKET_LO = 1.0 + 1e-9
DEFAULT_TOL = 1e-10


class CostModel(enum.Enum):
    PRODUCT_E1 = "e1"
    SUM_E2 = "e2"


@dataclass(frozen=True)
class EconomySample:
    r: float
    cost: float


@dataclass(frozen=True)
class RootResult:
    r: float
    residual: float
    iterations: int
    converged: bool


def _real(x, name: str):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise DomainError(f"{name} must be a real number, got {x!r}")
    if isinstance(x, float) and not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def _above_one(x, name: str):
    _real(x, name)
    if not x > 1:
        raise DomainError(f"{name} must be > 1, got {x!r}")
    return x


def fractional_width(C, r) -> float:
    """Width ``w`` solving ``r**w = C``.  Any log base gives the same ratio."""
    _above_one(C, "C")
    _above_one(r, "r")
    return math.log(C) / math.log(r)


def e1_cost(r, C) -> float:
    return r * fractional_width(C, r)


def e1_optimal_radix() -> float:
    """Minimiser of the product cost; the closed form is e, independent of C."""
    return math.e


def e2_cost(r, C) -> float:
    return r + fractional_width(C, r)


def e2_derivative(r, C) -> float:
    """d(E2)/dr = 1 - ln C / (r ln^2 r)."""
    _above_one(C, "C")
    _above_one(r, "r")
    lr = math.log(r)
    return 1.0 - math.log(C) / (r * lr * lr)


def e2_condition(r, C) -> float:
    """``r * ln(r)**2 - ln C``; zero exactly at the sum-cost optimum."""
    _above_one(C, "C")
    _above_one(r, "r")
    lr = math.log(r)
    return r * lr * lr - math.log(C)


def e2_optimal_radix(C, tolerance: float = DEFAULT_TOL, polish: bool = True,
                     max_iter: int = 2000) -> RootResult:
    """Root of ``r ln^2 r = ln C`` on r > 1.

    ``r ln^2 r`` is strictly increasing on r > 1, so the root is unique and the
    bracket ``[1 + 1e-9, max(C, 16)]`` holds it whenever ln C is not vanishingly
    small.  Bisection keeps the bracket; with ``polish`` a Newton step is taken
    instead whenever it lands inside the current bracket.  A result that never
    reaches ``|residual| <= tolerance`` comes back with ``converged=False``.
    """
    _real(C, "C")
    if not C > 1:
        raise DomainError(f"no optimum for C <= 1 (got C={C!r})")
    _real(tolerance, "tolerance")
    if not tolerance > 0:
        raise DomainError(f"tolerance must be > 0, got {tolerance!r}")

    ln_c = math.log(C)

    def f(r):
        lr = math.log(r)
        return r * lr * lr - ln_c

    lo = BRACKET_LO
    try:
        hi = float(max(C, 16))
    except OverflowError:
        hi = sys.float_info.max
    f_lo, f_hi = f(lo), f(hi)
    if abs(f_lo) <= tolerance:
        return RootResult(lo, f_lo, 0, True)
    if abs(f_hi) <= tolerance:
        return RootResult(hi, f_hi, 0, True)
    if not (f_lo < 0 < f_hi):
        best = lo if abs(f_lo) < abs(f_hi) else hi
        return RootResult(best, f(best), 0, False)

    r = 0.5 * (lo + hi)
    fr = f_lo
    for it in range(1, max_iter + 1):
        fr = f(r)
        if abs(fr) <= tolerance:
            return RootResult(r, fr, it, True)
        if fr < 0:
            lo = r
        else:
            hi = r
        nxt = 0.5 * (lo + hi)
        if polish:
            lr = math.log(r)
            slope = lr * lr + 2.0 * lr
            if slope > 0:
                step = r - fr / slope
                if lo < step < hi:
                    nxt = step
        if nxt == r or not lo < nxt < hi:
            # bracket has collapsed to adjacent floats
            return RootResult(r, fr, it, False)
        r = nxt
    return RootResult(r, fr, max_iter, False)


def cost_curve(model: CostModel, C, r_min, r_max, steps: int) -> List[EconomySample]:
    """``steps + 1`` evenly spaced samples of a cost over ``[r_min, r_max]``."""
    model = CostModel(model)
    _above_one(C, "C")
    _above_one(r_min, "r_min")
    _real(r_max, "r_max")
    if not r_max > r_min:
        raise DomainError(f"r_max must exceed r_min, got [{r_min}, {r_max}]")
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
        raise DomainError(f"steps must be an integer >= 2, got {steps!r}")
    cost = e1_cost if model is CostModel.PRODUCT_E1 else e2_cost
    span = r_max - r_min
    out = []
    for i in range(steps + 1):
        r = r_max if i == steps else r_min + span * i / steps
        out.append(EconomySample(r, cost(r, C)))
    return out


def _positive_count(n, name: str) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")
    return n


def trit_bit_equivalence(trit_count: int) -> float:
    """Bits carrying the same range as ``trit_count`` trits: ``n * ln 3 / ln 2``."""
    _positive_count(trit_count, "trit_count")
    return trit_count * math.log(3) / math.log(2)


def ternary_range(trit_count: int) -> int:
    """Count of distinct values in ``trit_count`` trits, exactly ``3**n``."""
    return 3 ** _positive_count(trit_count, "trit_count")


def device_state_efficiency(states_available: int, states_used: int) -> float:
    """Fraction of a device's states the encoding uses (3 of 4 gives 0.75)."""
    for name, v in (("states_available", states_available), ("states_used", states_used)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"{name} must be an integer, got {v!r}")
    if not 2 <= states_used <= states_available:
        raise DomainError(
            f"need 2 <= states_used <= states_available, got "
            f"states_used={states_used}, states_available={states_available}")
    return states_used / states_available
