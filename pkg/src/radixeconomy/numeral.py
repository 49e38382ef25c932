"""Exact positional encoding of integers in any radix >= 2, and balanced ternary.

Digits are stored most-significant first, the same order they are written.
All arithmetic is on Python ints, so values and radices are unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from .errors import DomainError

_SYMBOLS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_BT_SYMBOLS = {1: "1", 0: "0", -1: "T"}


def _check_radix(radix: int) -> None:
    if isinstance(radix, bool) or not isinstance(radix, int):
        raise DomainError(f"radix must be an integer, got {radix!r}")
    if radix < 2:
        raise DomainError(f"radix must be >= 2, got {radix}")


def _check_int(value, name: str = "value") -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")


@dataclass(frozen=True)
class Numeral:
    """Sign-magnitude numeral: ``sign * sum(d * radix**k)``."""

    sign: int
    radix: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        _check_radix(self.radix)
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign!r}")
        if not self.digits:
            raise DomainError("a numeral needs at least one digit")
        for d in self.digits:
            _check_int(d, "digit")
            if not 0 <= d < self.radix:
                raise DomainError(f"digit {d} out of range [0, {self.radix - 1}]")
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise DomainError("leading zero digit")
        if self.digits == (0,) and self.sign != 1:
            raise DomainError("zero must carry sign +1")

    @property
    def width(self) -> int:
        """Highest power index used (digit count minus one)."""
        return len(self.digits) - 1

    def __int__(self) -> int:
        return decode(self)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class BalancedTernaryNumeral:
    """Digits in {-1, 0, +1}, most-significant first; sign is that of the lead digit."""

    digits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise DomainError("a numeral needs at least one digit")
        for d in self.digits:
            _check_int(d, "digit")
            if d not in (-1, 0, 1):
                raise DomainError(f"balanced ternary digit must be -1, 0 or 1, got {d}")
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise DomainError("leading zero digit")

    def __neg__(self) -> "BalancedTernaryNumeral":
        if self.digits == (0,):
            return self
        return BalancedTernaryNumeral(tuple(-d for d in self.digits))

    def __int__(self) -> int:
        return decode_balanced_ternary(self)

    def __str__(self) -> str:
        return render(self)


def _magnitude_digits(value: int, radix: int) -> list:
    if value == 0:
        return [0]
    out = []
    while value:
        value, d = divmod(value, radix)
        out.append(d)
    out.reverse()
    return out


def encode(value: int, radix: int) -> Numeral:
    """Encode an integer in base ``radix`` by repeated division.

    Negative values are stored sign-magnitude.

    >>> encode(255, 16).digits
    (15, 15)
    """
    _check_radix(radix)
    _check_int(value)
    sign = -1 if value < 0 else 1
    return Numeral(sign, radix, tuple(_magnitude_digits(abs(value), radix)))


def decode(n: Numeral) -> int:
    if not isinstance(n, Numeral):
        raise DomainError(f"expected a Numeral, got {type(n).__name__}")
    # re-run the invariant checks in case the instance was built around __init__
    Numeral(n.sign, n.radix, n.digits)
    total = 0
    for d in n.digits:
        total = total * n.radix + d
    return n.sign * total


def max_value(radix: int, width_w: int) -> int:
    """Largest value representable with ``width_w + 1`` digits: ``radix**(w+1) - 1``."""
    _check_radix(radix)
    _check_int(width_w, "width_w")
    if width_w < 0:
        raise DomainError(f"width_w must be >= 0, got {width_w}")
    return radix ** (width_w + 1) - 1


def width_for(value: int, radix: int) -> int:
    """Number of digits needed for ``value`` in base ``radix`` (zero takes one).

    Uses integer division only; float logarithms are off by one near exact powers.
    """
    _check_radix(radix)
    _check_int(value)
    if value < 0:
        raise DomainError(f"value must be >= 0, got {value}")
    count = 1
    value //= radix
    while value:
        value //= radix
        count += 1
    return count


def encode_balanced_ternary(value: int) -> BalancedTernaryNumeral:
    _check_int(value)
    if value == 0:
        return BalancedTernaryNumeral((0,))
    out = []
    while value:
        value, d = divmod(value, 3)
        if d == 2:
            d = -1
            value += 1
        out.append(d)
    out.reverse()
    return BalancedTernaryNumeral(tuple(out))


def decode_balanced_ternary(n: BalancedTernaryNumeral) -> int:
    if not isinstance(n, BalancedTernaryNumeral):
        raise DomainError(f"expected a BalancedTernaryNumeral, got {type(n).__name__}")
    BalancedTernaryNumeral(n.digits)
    total = 0
    for d in n.digits:
        total = total * 3 + d
    return total


def render(n: Union[Numeral, BalancedTernaryNumeral]) -> str:
    """Text form of a numeral.

    Radix <= 36 uses 0-9A-Z, larger radices use dot-separated decimal digits;
    both get an ``_<radix>`` suffix, e.g. ``FF_16`` or ``12.40.7_61``.
    Balanced ternary writes -1 as ``T`` and has no suffix: ``1TT``.
    """
    if isinstance(n, BalancedTernaryNumeral):
        return "".join(_BT_SYMBOLS[d] for d in n.digits)
    if not isinstance(n, Numeral):
        raise DomainError(f"cannot render {type(n).__name__}")
    if n.radix <= 36:
        body = "".join(_SYMBOLS[d] for d in n.digits)
    else:
        body = ".".join(str(d) for d in n.digits)
    prefix = "-" if n.sign < 0 else ""
    return f"{prefix}{body}_{n.radix}"


def from_digits(digits: Sequence[int], radix: int, sign: int = 1) -> Numeral:
    """Build a numeral from raw digits, stripping leading zeros."""
    digits = list(digits)
    while len(digits) > 1 and digits[0] == 0:
        digits.pop(0)
    if digits == [0]:
        sign = 1
    return Numeral(sign, radix, tuple(digits))
