"""Proportional pairing functions p_{a,b}.

p_{a,b} is base-n proportional for every base n: if ``len_n(x) <= a*k`` and
``len_n(y) <= b*k`` then ``len_n(p_{a,b}(x, y)) <= (a + b) * k``. It is the
generic phi_g for ``g_{a,b}(x) = (floor(x^(1/a)) + 1)^b - 1``, computed here
in closed form.

Usage:
    from pairing_functions.proportional import Proportions, pair, unpair

    p = Proportions(3, 2)
    assert pair(p, 8, 4) == 76
    assert unpair(p, 76) == (8, 4)
"""

import logging
import math
from dataclasses import dataclass
from typing import Tuple

from .errors import DomainError
from .intmath import floor_root
from .pairing_core import MonotoneSource

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Proportions:
    """Constants of proportionality (a, b), both positive."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise DomainError(
                f"Proportions must be positive integers, got ({self.a}, {self.b})"
            )

    def __str__(self) -> str:
        return f"p_{{{self.a},{self.b}}}"


def g_ab(p: Proportions, x: int) -> int:
    """g_{a,b}(x) = (floor(x^(1/a)) + 1)^b - 1."""
    return (floor_root(x, p.a) + 1) ** p.b - 1


def pseudo_inverse_ab(p: Proportions, y: int) -> int:
    """Closed form of g_{a,b}+(y) = floor(y^(1/b))^a."""
    return floor_root(y, p.b) ** p.a


def step_point_ab(p: Proportions, k: int) -> int:
    """Step points of g_{a,b} are the a-th powers."""
    return k**p.a


def source(p: Proportions) -> MonotoneSource:
    """g_{a,b} as a MonotoneSource with its closed-form pseudo-inverse."""
    return MonotoneSource(
        lambda x: g_ab(p, x),
        description=f"g_{{{p.a},{p.b}}}",
        pseudo_inverse_hint=lambda y: pseudo_inverse_ab(p, y),
    )


def pair(p: Proportions, x: int, y: int) -> int:
    """Encode (x, y) with p_{a,b}.

    Args:
        p: Constants of proportionality
        x: First coordinate
        y: Second coordinate

    Returns:
        ``y * floor(y^(1/b))^a + x`` when floor(y^(1/b)) > floor(x^(1/a)),
        otherwise ``x * (floor(x^(1/a)) + 1)^b + y``
    """
    if x < 0 or y < 0:
        raise DomainError(f"Coordinates must be non-negative, got ({x}, {y})")
    rx = floor_root(x, p.a)
    ry = floor_root(y, p.b)
    if ry > rx:
        return y * ry**p.a + x
    return x * (rx + 1) ** p.b + y


def unpair(p: Proportions, z: int) -> Tuple[int, int]:
    """Decode z with the inverse of p_{a,b}.

    With ``m = floor(z^(1/(a+b)))`` the result is
    ``(z mod m^a, z // m^a)`` if ``z < m^a (m+1)^b``, else
    ``(z // (m+1)^b, z mod (m+1)^b)``. The branch is tested first, so
    m = 0 never divides by zero.
    """
    if z < 0:
        raise DomainError(f"z must be a non-negative integer, got {z}")
    m = floor_root(z, p.a + p.b)
    ma = m**p.a
    mb = (m + 1) ** p.b
    if z < ma * mb:
        return z % ma, z // ma
    return z // mb, z % mb


def unpair_fast(p: Proportions, z: int) -> Tuple[int, int]:
    """Inverse of p_{a,b} with the specialised forms for a = 1 or b = 1.

    Returns the same values as ``unpair`` for every z; other proportions fall
    through to ``unpair``.
    """
    if z < 0:
        raise DomainError(f"z must be a non-negative integer, got {z}")
    m = floor_root(z, p.a + p.b)

    if p.a == 1 and p.b == 1:
        t = z - m * m
        return (t, m) if t < m else (m, t - m)

    if p.a == 1:
        low = m * (m + 1) ** p.b
        if z < low:
            return z % m, z // m
        return m, z - low

    if p.b == 1:
        ma = m**p.a
        if z < ma * (m + 1):
            return z - ma * m, m
        return z // (m + 1), z % (m + 1)

    logger.debug(f"No specialised inverse for {p}, using the general form")
    return unpair(p, z)


def shell(p: Proportions, x: int, y: int) -> int:
    """Shell numbering max(floor(x^(1/a)), floor(y^(1/b))) of p_{a,b}."""
    return max(floor_root(x, p.a), floor_root(y, p.b))


def reduce(p: Proportions) -> Proportions:
    """Divide both constants by their gcd.

    p_{a,b} and the reduced function are different bijections, but the reduced
    one keeps every proportionality guarantee of the original.
    """
    g = math.gcd(p.a, p.b)
    return Proportions(p.a // g, p.b // g)
