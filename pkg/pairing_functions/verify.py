"""Bounded checkers for the definitional properties of tupling functions.

Every checker returns a VerificationResult. A failed result carries a
Counterexample whose stored inputs reproduce the violation when passed back
through ``reverify``.

Boxes small enough for the sample budget are scanned exhaustively in
lexicographic order. Larger boxes are scanned on their digit-length boundary
points (each coordinate 0 or n^k - 1) followed by budget-many pseudo-random
interior points drawn from a seeded generator, so repeated runs visit the same
points.
"""

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from . import packer, proportional, rosenberg_strong, sfc
from .enums import CheckStrictness, Predicate
from .errors import DomainError, UsageError
from .intmath import Point, len_base
from .pairing_core import MonotoneSource, check_contract, phi, psi
from .proportional import Proportions
from .settings import DEFAULT_SAMPLE_BUDGET, DEFAULT_SAMPLE_SEED

logger = logging.getLogger(__name__)

ShellFunction = Callable[[Point], int]
Box = Union[int, Sequence[int]]


@dataclass(frozen=True)
class TuplerHandle:
    """A d-tupling function under test, with its inverse when known."""

    arity: int
    forward: Callable[[Point], int]
    backward: Optional[Callable[[int], Point]] = None
    label: str = "f"


@dataclass(frozen=True)
class Counterexample:
    """Witness that a predicate fails.

    Attributes:
        predicate: The violated condition
        inputs: One or two points of N^d
        observed: Values that exhibit the violation
        params: Predicate parameters needed to re-evaluate it (n, k, a, b, z)
        detail: Human readable description
    """

    predicate: Predicate
    inputs: Tuple[Point, ...]
    observed: Tuple[int, ...]
    params: Dict[str, int] = field(default_factory=dict)
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "predicate": self.predicate.value,
            "inputs": [list(p) for p in self.inputs],
            "observed": list(self.observed),
            "params": dict(self.params),
            "detail": self.detail,
        }

    def __str__(self) -> str:
        points = ", ".join(str(p) for p in self.inputs)
        return f"{self.predicate.value} fails at {points}: {self.detail}"


@dataclass
class VerificationResult:
    """Outcome of one checker run."""

    passed: bool
    counterexample: Optional[Counterexample] = None
    points_checked: int = 0
    exhaustive: bool = True

    def __bool__(self) -> bool:
        return self.passed

    def __str__(self) -> str:
        mode = "exhaustive" if self.exhaustive else "sampled"
        status = "PASS" if self.passed else "FAIL"
        result = f"{status} ({self.points_checked} points, {mode})"
        if self.counterexample is not None:
            result += f"\n  {self.counterexample}"
        return result


# Handle factories


def handle_pab(p: Proportions) -> TuplerHandle:
    return TuplerHandle(
        2,
        lambda xs: proportional.pair(p, xs[0], xs[1]),
        lambda z: proportional.unpair(p, z),
        str(p),
    )


def handle_rs(d: int) -> TuplerHandle:
    if d < 1:
        raise DomainError(f"Dimension must be at least 1, got {d}")
    return TuplerHandle(
        d,
        rosenberg_strong.rs_pair,
        lambda z: rosenberg_strong.rs_unpair(d, z),
        f"r_{d}",
    )


def handle_curve(spec: sfc.CurveSpec) -> TuplerHandle:
    return TuplerHandle(
        spec.dim,
        lambda xs: sfc.encode(spec, xs),
        lambda z: sfc.decode(spec, z),
        spec.name,
    )


def handle_phi(
    g: MonotoneSource,
    strictness: CheckStrictness = CheckStrictness.PERMISSIVE,
    sample_bound: int = 256,
) -> TuplerHandle:
    """Handle for phi_g, sampling the contract of g first."""
    check_contract(g, sample_bound, strictness)
    return TuplerHandle(
        2,
        lambda xs: phi(g, xs[0], xs[1]),
        lambda z: psi(g, z),
        f"phi_{g.description}",
    )


def handle_tuple_pack(d: int) -> TuplerHandle:
    tupler = packer.perfect_tupler(d)
    return TuplerHandle(d, tupler.pack, tupler.unpack, f"tupler_{d}")


# Point iteration


def _as_bounds(box: Box, arity: int) -> List[int]:
    if isinstance(box, int):
        return [box] * arity
    if len(box) != arity:
        raise UsageError(f"Box has {len(box)} axes, expected {arity}")
    return list(box)


def _box_size(bounds: Sequence[int]) -> int:
    size = 1
    for b in bounds:
        size *= b
    return size


def _points(
    bounds: Sequence[int],
    extremes: Sequence[Sequence[int]],
    budget: int,
    seed: int,
) -> Tuple[Iterator[Point], bool]:
    """Points of the box ``[0, bounds[i])``, exhaustive or sampled.

    Args:
        bounds: Exclusive upper bound per axis
        extremes: Boundary values per axis used when sampling
        budget: Exhaustive scan when the box has at most this many points
        seed: Seed of the interior sample

    Returns:
        (points, exhaustive flag)
    """
    if _box_size(bounds) <= budget:
        return itertools.product(*(range(b) for b in bounds)), True

    logger.debug(f"Box {list(bounds)} exceeds budget {budget}; sampling")

    def sampled() -> Iterator[Point]:
        yield from itertools.product(
            *(sorted({v for v in axis if v < b}) for axis, b in zip(extremes, bounds))
        )
        rng = random.Random(seed)
        for _ in range(budget):
            yield tuple(rng.randrange(b) for b in bounds)

    return sampled(), False


def _length_extremes(n: int, exponents: Iterable[int]) -> List[int]:
    return sorted({0} | {n**k - 1 for k in exponents if k > 0})


def _require_depth(n: int, k_max: int) -> None:
    if n < 2:
        raise DomainError(f"Base must be at least 2, got {n}")
    if k_max < 0:
        raise DomainError(f"k_max must be non-negative, got {k_max}")


# Checkers


def check_bijection(t: TuplerHandle, z_max: int) -> VerificationResult:
    """Verify forward(backward(z)) == z for every z <= z_max.

    The round trip also makes the backward images distinct, since forward
    cannot send one point to two codes.

    Raises:
        UsageError: If the handle has no backward map
    """
    if t.backward is None:
        raise UsageError(f"{t.label} has no inverse; cannot check bijection")

    for z in range(z_max + 1):
        point = tuple(t.backward(z))
        image = t.forward(point)
        if image != z:
            return VerificationResult(
                False,
                Counterexample(
                    Predicate.BIJECTION,
                    (point,),
                    (z, image),
                    {"z": z},
                    f"forward(backward({z})) = {image}",
                ),
                z + 1,
            )
    return VerificationResult(True, points_checked=z_max + 1)


def check_base_n_perfect(
    t: TuplerHandle,
    n: int,
    k_max: int,
    budget: int = DEFAULT_SAMPLE_BUDGET,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationResult:
    """Check ``len_n(f(x)) <= d * max(len_n(x_i))`` over ``[0, n^k_max)^d``."""
    _require_depth(n, k_max)
    d = t.arity
    bounds = [n**k_max] * d
    extremes = [_length_extremes(n, range(k_max + 1))] * d
    points, exhaustive = _points(bounds, extremes, budget, seed)

    checked = 0
    for point in points:
        checked += 1
        k = max(len_base(n, c) for c in point)
        image = t.forward(point)
        length = len_base(n, image)
        if length > d * k:
            return VerificationResult(
                False,
                Counterexample(
                    Predicate.BASE_N_PERFECT,
                    (point,),
                    (image, length, d * k),
                    {"n": n},
                    f"len_{n}({image}) = {length} > {d} * {k}",
                ),
                checked,
                exhaustive,
            )
    return VerificationResult(True, points_checked=checked, exhaustive=exhaustive)


def check_base_n_perfect_by_definition(
    t: TuplerHandle, n: int, k_max: int
) -> VerificationResult:
    """Quantifier form: for each k <= k_max, every x in [0, n^k)^d has
    ``len_n(f(x)) <= d * k``. Always exhaustive."""
    _require_depth(n, k_max)
    d = t.arity
    checked = 0
    for k in range(k_max + 1):
        for point in itertools.product(range(n**k), repeat=d):
            checked += 1
            image = t.forward(point)
            length = len_base(n, image)
            if length > d * k:
                return VerificationResult(
                    False,
                    Counterexample(
                        Predicate.BASE_N_PERFECT,
                        (point,),
                        (image, length, d * k),
                        {"n": n, "k": k},
                        f"len_{n}({image}) = {length} > {d} * {k}",
                    ),
                    checked,
                )
    return VerificationResult(True, points_checked=checked)


def check_proportional(
    t: TuplerHandle,
    n: int,
    p: Proportions,
    k_max: int,
    budget: int = DEFAULT_SAMPLE_BUDGET,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> VerificationResult:
    """For each k <= k_max check ``len_n(f(x, y)) <= (a + b) k`` on
    ``x < n^(a k)``, ``y < n^(b k)``.

    Raises:
        UsageError: If the handle is not a pairing function
        DomainError: If n < 2 or k_max < 0
    """
    if t.arity != 2:
        raise UsageError(f"{t.label} has arity {t.arity}; proportionality needs 2")
    _require_depth(n, k_max)

    checked = 0
    exhaustive = True
    for k in range(k_max + 1):
        bounds = [n ** (p.a * k), n ** (p.b * k)]
        extremes = [
            _length_extremes(n, [p.a * k]),
            _length_extremes(n, [p.b * k]),
        ]
        points, box_exhaustive = _points(bounds, extremes, budget, seed)
        exhaustive = exhaustive and box_exhaustive
        limit = (p.a + p.b) * k
        for point in points:
            checked += 1
            image = t.forward(point)
            length = len_base(n, image)
            if length > limit:
                return VerificationResult(
                    False,
                    Counterexample(
                        Predicate.PROPORTIONAL,
                        (point,),
                        (image, length, limit),
                        {"n": n, "k": k, "a": p.a, "b": p.b},
                        f"len_{n}({image}) = {length} > ({p.a} + {p.b}) * {k}",
                    ),
                    checked,
                    box_exhaustive,
                )
    return VerificationResult(True, points_checked=checked, exhaustive=exhaustive)


def check_shell_numbering(
    t: TuplerHandle,
    s: ShellFunction,
    box: Box,
    predicate: Predicate = Predicate.SHELL_NUMBERING,
    params: Optional[Dict[str, int]] = None,
) -> VerificationResult:
    """Check that ``s(x) < s(y)`` implies ``f(x) < f(y)`` on a box.

    Points are grouped by shell; the condition holds exactly when the largest
    code of every shell is below the smallest code of each later shell.

    Args:
        t: Function under test
        s: Candidate shell numbering
        box: Exclusive bound for every axis, or one bound per axis
        predicate: Name recorded on a counterexample
        params: Parameters recorded on a counterexample

    Returns:
        Result with a two-point counterexample on failure
    """
    bounds = _as_bounds(box, t.arity)
    lowest: Dict[int, Tuple[int, Point]] = {}
    highest: Dict[int, Tuple[int, Point]] = {}
    checked = 0
    for point in itertools.product(*(range(b) for b in bounds)):
        checked += 1
        shell = s(point)
        image = t.forward(point)
        if shell not in lowest or image < lowest[shell][0]:
            lowest[shell] = (image, point)
        if shell not in highest or image > highest[shell][0]:
            highest[shell] = (image, point)

    running: Optional[Tuple[int, Point]] = None
    for shell in sorted(lowest):
        if running is not None and running[0] >= lowest[shell][0]:
            p, q = running[1], lowest[shell][1]
            return VerificationResult(
                False,
                Counterexample(
                    predicate,
                    (p, q),
                    (s(p), s(q), running[0], lowest[shell][0]),
                    dict(params or {}),
                    f"s{p} = {s(p)} < s{q} = {s(q)} but "
                    f"f{p} = {running[0]} >= f{q} = {lowest[shell][0]}",
                ),
                checked,
            )
        if running is None or highest[shell][0] > running[0]:
            running = highest[shell]
    return VerificationResult(True, points_checked=checked)


def base_n_shell_number(n: int) -> ShellFunction:
    """s(x) = max(len_n(x_1), ..., len_n(x_d))."""
    return lambda point: max(len_base(n, c) for c in point)


def cubic_shell_number(point: Point) -> int:
    return max(point)


def check_base_n_shells(t: TuplerHandle, n: int, box: Box) -> VerificationResult:
    """check_shell_numbering with the base-n length shells."""
    return check_shell_numbering(
        t, base_n_shell_number(n), box, Predicate.BASE_N_SHELLS, {"n": n}
    )


def reverify(
    t: TuplerHandle,
    counterexample: Counterexample,
    s: Optional[ShellFunction] = None,
) -> bool:
    """Re-evaluate a counterexample's predicate on its stored inputs.

    Args:
        t: The handle the counterexample was found on
        counterexample: Witness to replay
        s: Shell numbering, required for SHELL_NUMBERING witnesses

    Returns:
        True if the violation reproduces
    """
    cx = counterexample
    params = cx.params
    if cx.predicate == Predicate.BIJECTION:
        if t.backward is None:
            raise UsageError(f"{t.label} has no inverse; cannot replay bijection")
        return t.forward(tuple(t.backward(params["z"]))) != params["z"]

    if cx.predicate == Predicate.BASE_N_PERFECT:
        n = params["n"]
        point = cx.inputs[0]
        k = max(len_base(n, c) for c in point)
        return len_base(n, t.forward(point)) > t.arity * k

    if cx.predicate == Predicate.PROPORTIONAL:
        n, k, a, b = params["n"], params["k"], params["a"], params["b"]
        x, y = cx.inputs[0]
        in_box = x < n ** (a * k) and y < n ** (b * k)
        return in_box and len_base(n, t.forward((x, y))) > (a + b) * k

    if cx.predicate == Predicate.BASE_N_SHELLS:
        s = base_n_shell_number(params["n"])
    elif s is None:
        raise UsageError("A shell numbering is needed to replay this counterexample")

    p, q = cx.inputs
    return s(p) < s(q) and t.forward(p) >= t.forward(q)


def shell_base_witness(counterexample: Counterexample) -> int:
    """Base n at which a cubic-shell violation is also a base-n shell violation.

    Given points p, q with ``max(p) < max(q)`` and ``f(p) >= f(q)``, every
    coordinate of p has at most one digit in base ``max(p) + 1`` while some
    coordinate of q has two. When p is the origin base 2 works.
    """
    p, q = counterexample.inputs
    if max(p) >= max(q):
        raise UsageError(f"{counterexample} is not a cubic-shell violation")
    m = max(p)
    return 2 if m == 0 else m + 1
