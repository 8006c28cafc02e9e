"""Generic pairing functions built from a non-decreasing unbounded function g.

Given g, the pairing function phi_g walks the plane in shells. Shell k is
bounded by the step points s_k < s_{k+1} of g: the rectangle
``x < s_{k+1}, y <= g(s_k)`` holds exactly the points whose codes are below
``s_{k+1} * (g(s_k) + 1)``.

Usage:
    from pairing_functions.pairing_core import MonotoneSource, phi, psi

    g = MonotoneSource(lambda x: x // 2, "floor(x/2)")
    z = phi(g, 3, 1)
    assert psi(g, z) == (3, 1)
"""

import logging
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, List, Optional, Sequence, Tuple

from .enums import CheckStrictness
from .errors import ContractViolation, DomainError
from .settings import DEFAULT_GALLOP_CAP

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class MonotoneSource:
    """Evaluation oracle for a non-decreasing unbounded g: N -> N.

    Neither property can be proven from an oracle. ``check_contract`` samples
    monotonicity, and ``pseudo_inverse`` gives up past ``gallop_cap``.
    Step points are memoized per instance behind a lock.
    """

    evaluate: Callable[[int], int]
    description: str = field(default="g", metadata={"description": "Text label"})
    gallop_cap: int = field(
        default=DEFAULT_GALLOP_CAP,
        metadata={"description": "Largest x probed while searching for g+(y)"},
    )
    pseudo_inverse_hint: Optional[Callable[[int], int]] = field(
        default=None,
        repr=False,
        metadata={"description": "Closed form of g+ used instead of searching"},
    )
    _steps: List[int] = field(default_factory=lambda: [0], init=False, repr=False)
    _lock: Any = field(default_factory=threading.RLock, init=False, repr=False)

    def __call__(self, x: int) -> int:
        return self.evaluate(x)

    @classmethod
    def identity(cls) -> "MonotoneSource":
        """g(x) = x, whose pairing function is p_{1,1}."""
        return cls(lambda x: x, "x", pseudo_inverse_hint=lambda y: y)

    @classmethod
    def from_table(
        cls,
        values: Sequence[int],
        tail: Callable[[int], int],
        description: str = "table",
    ) -> "MonotoneSource":
        """Build g from a finite prefix table followed by a tail function.

        Args:
            values: g(0), g(1), ..., g(len(values) - 1)
            tail: g(x) for every x >= len(values)
            description: Text label

        Returns:
            MonotoneSource over the combined function
        """
        table = tuple(values)

        def evaluate(x: int) -> int:
            return table[x] if x < len(table) else tail(x)

        return cls(evaluate, description)


@dataclass(frozen=True)
class ShellDescriptor:
    """Bounds of shell k of phi_g.

    A_k is the rectangle ``x < step_hi, y <= g_at_step`` and holds exactly
    ``b_bound`` points; phi_g maps it onto ``range(b_bound)``.
    """

    index: int
    step_lo: int
    step_hi: int
    g_at_step: int
    b_bound: int

    def contains(self, x: int, y: int) -> bool:
        """True when (x, y) lies in A_k."""
        return x < self.step_hi and y <= self.g_at_step


def pseudo_inverse(g: MonotoneSource, y: int) -> int:
    """Smallest x with g(x) >= y.

    Gallops x = 1, 2, 4, ... until g(x) >= y, then binary searches the last
    doubling interval. Only valid because g is non-decreasing.

    Args:
        g: Source satisfying the MonotoneSource contract
        y: Non-negative integer

    Returns:
        g+(y)

    Raises:
        ContractViolation: If no x up to g.gallop_cap reaches y
    """
    if y < 0:
        raise DomainError(f"y must be a non-negative integer, got {y}")
    if g.pseudo_inverse_hint is not None:
        return g.pseudo_inverse_hint(y)
    if g(0) >= y:
        return 0

    lo, hi = 0, 1
    while g(hi) < y:
        if hi >= g.gallop_cap:
            raise ContractViolation(
                f"{g.description} stays below {y} up to x = {g.gallop_cap}; "
                "it does not look unbounded"
            )
        lo, hi = hi, min(hi * 2, g.gallop_cap)

    # g(lo) < y <= g(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if g(mid) >= y:
            hi = mid
        else:
            lo = mid
    return hi


def step_point(g: MonotoneSource, k: int) -> int:
    """The k-th step point s_k of g.

    Uses s_0 = 0 and s_{k+1} = g+(g(s_k) + 1), memoized on the source.

    Args:
        g: Source satisfying the MonotoneSource contract
        k: Shell index

    Returns:
        s_k

    Raises:
        ContractViolation: If a pseudo-inverse search exceeds the gallop cap
    """
    if k < 0:
        raise DomainError(f"Step index must be non-negative, got {k}")
    with g._lock:
        steps = g._steps
        while len(steps) <= k:
            steps.append(pseudo_inverse(g, g(steps[-1]) + 1))
        return steps[k]


def shell_descriptor(g: MonotoneSource, k: int) -> ShellDescriptor:
    """Describe shell k: its step points, g(s_k) and the code bound."""
    lo = step_point(g, k)
    hi = step_point(g, k + 1)
    g_lo = g(lo)
    return ShellDescriptor(
        index=k, step_lo=lo, step_hi=hi, g_at_step=g_lo, b_bound=hi * (g_lo + 1)
    )


def phi(g: MonotoneSource, x: int, y: int) -> int:
    """The pairing function phi_g.

    Args:
        g: Source satisfying the MonotoneSource contract
        x: First coordinate
        y: Second coordinate

    Returns:
        ``y * g+(y) + x`` if y > g(x), else ``x * (g(x) + 1) + y``
    """
    if x < 0 or y < 0:
        raise DomainError(f"Coordinates must be non-negative, got ({x}, {y})")
    gx = g(x)
    if y > gx:
        return y * pseudo_inverse(g, y) + x
    return x * (gx + 1) + y


def psi(g: MonotoneSource, z: int) -> Tuple[int, int]:
    """Inverse of phi_g.

    Walks the shells until ``z < s_{m+1} * (g(s_m) + 1)``. In shell 0 the
    first branch is empty since s_0 = 0, so no division by zero occurs.
    The walk takes one step per shell, about sqrt(z) steps for g(x) = x, and
    every step point found stays memoized on g.

    Args:
        g: Source satisfying the MonotoneSource contract
        z: Code to decode

    Returns:
        The unique (x, y) with phi(g, x, y) == z
    """
    if z < 0:
        raise DomainError(f"z must be a non-negative integer, got {z}")
    m = 0
    while True:
        shell = shell_descriptor(g, m)
        if z < shell.b_bound:
            break
        m += 1

    width = shell.g_at_step + 1
    if z < shell.step_lo * width:
        return z % shell.step_lo, z // shell.step_lo
    return z // width, z % width


def shell_index(g: MonotoneSource, x: int, y: int) -> int:
    """Smallest k with (x, y) in A_k; a shell numbering for phi_g.

    Walks the shells one at a time, like psi.
    """
    if x < 0 or y < 0:
        raise DomainError(f"Coordinates must be non-negative, got ({x}, {y})")
    k = 0
    while not shell_descriptor(g, k).contains(x, y):
        k += 1
    return k


def check_contract(
    g: MonotoneSource,
    bound: int,
    strictness: CheckStrictness = CheckStrictness.STRICT,
) -> bool:
    """Sample g for monotonicity on 0..bound.

    Args:
        g: Source to check
        bound: Last x compared against its successor
        strictness: STRICT raises, LENIENT logs, PERMISSIVE skips the check

    Returns:
        True if no violation was seen (or the check was skipped)

    Raises:
        ContractViolation: Under STRICT, on the first negative value or decrease
    """
    if strictness == CheckStrictness.PERMISSIVE:
        return True

    previous = g(0)
    for x in range(bound + 1):
        current = g(x + 1)
        problem = None
        if previous < 0:
            problem = f"g({x}) = {previous} is negative"
        elif current < 0:
            problem = f"g({x + 1}) = {current} is negative"
        elif current < previous:
            problem = f"g({x + 1}) = {current} < g({x}) = {previous}"
        if problem is not None:
            message = f"{g.description} is not a non-decreasing map to N: {problem}"
            if strictness == CheckStrictness.STRICT:
                raise ContractViolation(message)
            logger.warning(message)
            return False
        previous = current

    logger.debug(f"{g.description} passed monotonicity sampling up to {bound + 1}")
    return True
