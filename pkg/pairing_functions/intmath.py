"""Exact integer primitives: base-n length and integer roots.

Nothing on these paths touches floating point. Python integers are arbitrary
precision, so the results stay exact for inputs of any size.
"""

import math
from typing import Tuple

from .errors import DomainError

Point = Tuple[int, ...]
"""A point of N^d as a flat tuple of non-negative integers."""


def _require_nat(x: int, name: str = "x") -> None:
    if x < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {x}")


def len_base(n: int, x: int) -> int:
    """Number of digits in the base-n representation of x.

    The length of 0 is 0, and ``len_base(n, x) <= k`` holds exactly when
    ``x < n**k``.

    Args:
        n: Base, at least 2
        x: Non-negative integer

    Returns:
        Digit count of x in base n

    Raises:
        DomainError: If n < 2 or x < 0
    """
    if n < 2:
        raise DomainError(f"Base must be at least 2, got {n}")
    _require_nat(x)

    if n & (n - 1) == 0:
        # Powers of two: whole digits are fixed-size bit groups
        shift = n.bit_length() - 1
        return -(-x.bit_length() // shift)

    count = 0
    while x:
        x //= n
        count += 1
    return count


def floor_root(x: int, a: int) -> int:
    """Largest m with m**a <= x.

    Integer Newton iteration started from a power of two above the root; the
    iterates decrease monotonically and stop at the floor.

    Args:
        x: Non-negative integer
        a: Root degree, at least 1

    Returns:
        The floor of the a-th root of x

    Raises:
        DomainError: If a < 1 or x < 0
    """
    if a < 1:
        raise DomainError(f"Root degree must be at least 1, got {a}")
    _require_nat(x)

    if a == 1 or x < 2:
        return x
    if a == 2:
        return math.isqrt(x)

    u = 1 << (x.bit_length() // a + 1)
    while True:
        t = ((a - 1) * u + x // u ** (a - 1)) // a
        if t >= u:
            return u
        u = t


def ceil_root(x: int, a: int) -> int:
    """Smallest m with m**a >= x.

    Args:
        x: Non-negative integer
        a: Root degree, at least 1

    Returns:
        The ceiling of the a-th root of x

    Raises:
        DomainError: If a < 1 or x < 0
    """
    m = floor_root(x, a)
    return m if m**a == x else m + 1
