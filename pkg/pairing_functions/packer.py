"""Bit-budget key packing with proportional pairing functions.

A plan for field widths ``w_1, ..., w_m`` folds the fields from the left:
``p_{a_1,b_1}(x_1, x_2)``, then ``p_{a_2,b_2}(that, x_3)`` and so on. Step i
joins the accumulated width W with the next width w, using constants a/b equal
to W/w in lowest terms. Each step is base-2 proportional, so the packed key
never needs more than ``sum(widths)`` bits.

Usage:
    from pairing_functions.packer import pack, plan, unpack

    key_plan = plan([32, 48, 64])
    z = pack(key_plan, [1, 2, 3])
    assert z.bit_length() <= key_plan.total_bits
    assert unpack(key_plan, z) == [1, 2, 3]
"""

import logging
import math
from dataclasses import dataclass, field
from functools import reduce as fold
from typing import List, Sequence, Tuple

from . import proportional
from .errors import DocumentError, DomainError, IntegrityError, UsageError
from .intmath import Point, len_base
from .json_document import JsonDocument
from .proportional import Proportions

logger = logging.getLogger(__name__)


@dataclass
class PackStep(JsonDocument):
    """Constants of one fold step."""

    a: int = field(default=1, metadata={"description": "Weight of the accumulated key"})
    b: int = field(default=1, metadata={"description": "Weight of the next field"})

    def validate(self) -> None:
        if self.a < 1:
            raise DocumentError(f"must be >= 1, got {self.a}", field="a")
        if self.b < 1:
            raise DocumentError(f"must be >= 1, got {self.b}", field="b")

    @property
    def proportions(self) -> Proportions:
        return Proportions(self.a, self.b)


@dataclass
class PackPlan(JsonDocument):
    """Compiled packing plan. Treat as immutable once built.

    JSON form::

        {"k": 16, "widths": [32, 48, 64],
         "steps": [{"a": 2, "b": 3}, {"a": 5, "b": 4}], "total_bits": 144}
    """

    k: int = field(default=1, metadata={"description": "gcd of all widths"})
    widths: List[int] = field(
        default_factory=list, metadata={"description": "Bit width of each field"}
    )
    steps: List[PackStep] = field(
        default_factory=list, metadata={"description": "One step per joined field"}
    )
    total_bits: int = field(default=0, metadata={"description": "Sum of the widths"})

    def validate(self) -> None:
        """Re-derive every step from the widths and compare."""
        _check_widths(self.widths)
        expected_k = fold(math.gcd, self.widths)
        if self.k != expected_k:
            raise DocumentError(f"must be {expected_k}, got {self.k}", field="k")
        if self.total_bits != sum(self.widths):
            raise DocumentError(
                f"must be {sum(self.widths)}, got {self.total_bits}",
                field="total_bits",
            )
        if len(self.steps) != len(self.widths) - 1:
            raise DocumentError(
                f"expected {len(self.widths) - 1} steps, got {len(self.steps)}",
                field="steps",
            )
        for i, (step, expected) in enumerate(zip(self.steps, _fold_steps(self.widths))):
            if (step.a, step.b) != (expected.a, expected.b):
                raise DocumentError(
                    f"expected ({expected.a}, {expected.b}), got ({step.a}, {step.b})",
                    field=f"steps[{i}]",
                )

    @property
    def proportions(self) -> List[Proportions]:
        return [step.proportions for step in self.steps]


def _check_widths(widths: Sequence[int]) -> None:
    if len(widths) == 0:
        raise DocumentError("at least one field width is required", field="widths")
    for i, w in enumerate(widths):
        if w < 1:
            raise DocumentError(f"must be >= 1, got {w}", field=f"widths[{i}]")


def _fold_steps(widths: Sequence[int]) -> List[Proportions]:
    k = fold(math.gcd, widths)
    steps = []
    accumulated = widths[0]
    for w in widths[1:]:
        steps.append(proportional.reduce(Proportions(accumulated // k, w // k)))
        accumulated += w
    return steps


def plan(widths: Sequence[int]) -> PackPlan:
    """Compile field widths into a packing plan.

    Args:
        widths: Bit width of each field, in packing order

    Returns:
        The plan; a single field yields no steps

    Raises:
        DomainError: If widths is empty or holds a width below 1
    """
    try:
        _check_widths(widths)
    except DocumentError as e:
        raise DomainError(str(e)) from e

    steps = _fold_steps(widths)
    result = PackPlan(
        k=fold(math.gcd, widths),
        widths=list(widths),
        steps=[PackStep(p.a, p.b) for p in steps],
        total_bits=sum(widths),
    )
    logger.debug(
        f"Plan for {list(widths)}: k={result.k}, steps {[str(p) for p in steps]}"
    )
    return result


def plan_from_file(file_path: str) -> PackPlan:
    """Load a plan from JSON and re-validate it."""
    return PackPlan.from_file(file_path)


def _fold(steps: Sequence[Proportions], values: Sequence[int]) -> int:
    z = values[0]
    for p, value in zip(steps, values[1:]):
        z = proportional.pair(p, z, value)
    return z


def _unfold(steps: Sequence[Proportions], z: int) -> List[int]:
    tail = []
    for p in reversed(steps):
        z, value = proportional.unpair_fast(p, z)
        tail.append(value)
    return [z] + tail[::-1]


def pack(key_plan: PackPlan, values: Sequence[int]) -> int:
    """Pack field values into one integer of at most ``total_bits`` bits.

    Raises:
        UsageError: If the number of values differs from the number of widths
        DomainError: If a value is negative or wider than its field
    """
    if len(values) != len(key_plan.widths):
        raise UsageError(
            f"Plan has {len(key_plan.widths)} fields, got {len(values)} values"
        )
    for i, (value, width) in enumerate(zip(values, key_plan.widths)):
        if value < 0:
            raise DomainError(f"Field {i} must be non-negative, got {value}")
        if len_base(2, value) > width:
            raise DomainError(f"Field {i} value {value} does not fit in {width} bits")
    return _fold(key_plan.proportions, values)


def unpack(key_plan: PackPlan, z: int) -> List[int]:
    """Inverse of ``pack``.

    Raises:
        DomainError: If z is negative
        IntegrityError: If a decoded field is wider than its declared width
    """
    if z < 0:
        raise DomainError(f"z must be a non-negative integer, got {z}")
    values = _unfold(key_plan.proportions, z)
    for i, (value, width) in enumerate(zip(values, key_plan.widths)):
        if len_base(2, value) > width:
            raise IntegrityError(
                f"{z} was not packed with this plan: field {i} decodes to "
                f"{value}, wider than {width} bits"
            )
    return values


@dataclass(frozen=True)
class PerfectTupler:
    """``p_{d-1,1}(... p_{2,1}(p_{1,1}(x_1, x_2), x_3) ..., x_d)``.

    Joining d equal-width fields gives a base-n perfect d-tupling function for
    every n, with no width limit on the inputs.
    """

    arity: int
    steps: Tuple[Proportions, ...]

    def pack(self, xs: Sequence[int]) -> int:
        if len(xs) != self.arity:
            raise DomainError(f"Expected {self.arity} coordinates, got {len(xs)}")
        if min(xs) < 0:
            raise DomainError(f"Coordinates must be non-negative, got {tuple(xs)}")
        return _fold(self.steps, xs)

    def unpack(self, z: int) -> Point:
        if z < 0:
            raise DomainError(f"z must be a non-negative integer, got {z}")
        return tuple(_unfold(self.steps, z))


def perfect_tupler(d: int) -> PerfectTupler:
    if d < 1:
        raise DomainError(f"Dimension must be at least 1, got {d}")
    return PerfectTupler(d, tuple(Proportions(i, 1) for i in range(1, d)))
