"""Positional numerals in any radix, balanced ternary, and radix economy."""

from .economy import (
    CostModel,
    EconomySample,
    RootResult,
    cost_curve,
    device_state_efficiency,
    e1_cost,
    e1_optimal_radix,
    e2_condition,
    e2_cost,
    e2_derivative,
    e2_optimal_radix,
    fractional_width,
    ternary_range,
    trit_bit_equivalence,
)
from .errors import DomainError
from .numeral import (
    BalancedTernaryNumeral,
    Numeral,
    decode,
    decode_balanced_ternary,
    encode,
    encode_balanced_ternary,
    max_value,
    render,
    width_for,
)
from .tree import TreeSpec, capacity, depth_for

__version__ = "0.1.0"
