"""Rosenberg-Strong pairing and d-tupling functions.

r_d numbers N^d in cubic shells: every point with max coordinate m gets a code
in ``[m^d, (m+1)^d)``. The dimension is a runtime argument.
"""

import math
from typing import Sequence

from .errors import DomainError
from .intmath import Point, floor_root


def rs_pair(xs: Sequence[int]) -> int:
    """Encode a point of N^d with r_d.

    r_1(x) = x, and for d > 1 the code adds
    ``m^d + (m - x_d)((m+1)^(d-1) - m^(d-1))`` to r_{d-1}(x_1..x_{d-1}),
    with m the maximum of all d coordinates.

    Args:
        xs: Coordinates, at least one

    Returns:
        The code of xs

    Raises:
        DomainError: If xs is empty or has a negative coordinate
    """
    if len(xs) == 0:
        raise DomainError("Cannot encode an empty tuple")
    if min(xs) < 0:
        raise DomainError(f"Coordinates must be non-negative, got {tuple(xs)}")

    z = xs[0]
    for d in range(2, len(xs) + 1):
        m = max(xs[:d])
        if d == 2:
            # m >= y keeps (m + x) - y in N
            z = m * m + (m + xs[0]) - xs[1]
            continue
        z += m**d + (m - xs[d - 1]) * ((m + 1) ** (d - 1) - m ** (d - 1))
    return z


def rs2_unpair(z: int) -> Point:
    """Closed-form inverse of r_2.

    With ``m = floor(sqrt(z))``: ``(z - m^2, m)`` if ``z - m^2 < m``,
    else ``(m, m^2 + 2m - z)``.
    """
    if z < 0:
        raise DomainError(f"z must be a non-negative integer, got {z}")
    m = math.isqrt(z)
    t = z - m * m
    if t < m:
        return (t, m)
    return (m, m * m + 2 * m - z)


def rs_unpair(d: int, z: int, closed_form: bool = True) -> Point:
    """Decode z with the inverse of r_d.

    Peels off the last coordinate and recurses on the remainder, with
    ``m = floor(z^(1/d))`` and
    ``x_d = m - max(0, z - m^d - m^(d-1)) // ((m+1)^(d-1) - m^(d-1))``.

    Args:
        d: Dimension, at least 1
        z: Code to decode
        closed_form: Finish with rs2_unpair instead of peeling down to d = 1

    Returns:
        The d coordinates of z

    Raises:
        DomainError: If d < 1 or z < 0
    """
    if d < 1:
        raise DomainError(f"Dimension must be at least 1, got {d}")
    if z < 0:
        raise DomainError(f"z must be a non-negative integer, got {z}")

    stop = 2 if closed_form else 1
    tail = []
    for k in range(d, stop, -1):
        m = floor_root(z, k)
        step = (m + 1) ** (k - 1) - m ** (k - 1)
        excess = max(0, z - m**k - m ** (k - 1))
        xk = m - excess // step
        z -= m**k + (m - xk) * step
        tail.append(xk)

    head = rs2_unpair(z) if closed_form and d >= 2 else (z,)
    return head + tuple(reversed(tail))


def rs_shell(xs: Sequence[int]) -> int:
    """Cubic shell numbering max(x_1..x_d) of r_d."""
    return max(xs)
