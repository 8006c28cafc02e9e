"""Discrete space-filling curves defined by permutations.

A base-n curve in d dimensions (d = 2 or 3) is fixed by a seed permutation
tau and one permutation sigma_i per output digit, all on n^d symbols. Each
point is written as m base-n digit columns, most significant first, and each
column (c_1, ..., c_d) is packed into one symbol ``c_1 n^(d-1) + ... + c_d``.
The first output digit is ``sigma_0^-(m-1) . tau`` of the first symbol; after
emitting digit z_j the running map is composed on the left with sigma_{z_j}.

Usage:
    from pairing_functions.sfc import builtin, decode, encode

    hilbert = builtin("hilbert2")
    assert encode(hilbert, (1, 1)) == 2
    assert decode(hilbert, 2) == (1, 1)
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .errors import DocumentError, DomainError, UnknownCurveError
from .intmath import Point, len_base
from .json_document import JsonDocument
from .permutation import Permutation

logger = logging.getLogger(__name__)

SUPPORTED_DIMENSIONS = (2, 3)


def _validate_tables(
    base: int, dim: int, tau: Sequence[int], sigmas: Sequence[Sequence[int]]
) -> None:
    """Raise DocumentError naming the first field that breaks a curve invariant."""
    if base < 2:
        raise DocumentError(f"must be at least 2, got {base}", field="base")
    if dim not in SUPPORTED_DIMENSIONS:
        raise DocumentError(f"must be 2 or 3, got {dim}", field="dim")

    symbols = base**dim
    tables = [("tau", tau)] + [(f"sigmas[{i}]", s) for i, s in enumerate(sigmas)]
    for name, table in tables:
        if len(table) != symbols:
            raise DocumentError(
                f"must have {symbols} entries, got {len(table)}", field=name
            )
        if sorted(table) != list(range(symbols)):
            raise DocumentError(f"{list(table)} is not a permutation", field=name)

    if len(sigmas) != symbols:
        raise DocumentError(
            f"must hold {symbols} permutations, got {len(sigmas)}", field="sigmas"
        )
    if tau[0] != 0:
        raise DocumentError(f"must map 0 to 0, got {tau[0]}", field="tau")
    if sigmas[0][0] != 0:
        raise DocumentError(
            f"must map 0 to 0, got {sigmas[0][0]}", field="sigmas[0]"
        )


@dataclass(frozen=True)
class CurveSpec:
    """A validated discrete space-filling curve. Immutable."""

    name: str
    base: int
    dim: int
    tau: Permutation
    sigmas: Tuple[Permutation, ...]
    tau_inv: Permutation = field(init=False, repr=False, compare=False)
    sigma_inv: Tuple[Permutation, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        _validate_tables(
            self.base, self.dim, list(self.tau), [list(s) for s in self.sigmas]
        )
        object.__setattr__(self, "tau_inv", self.tau.inverse())
        object.__setattr__(self, "sigma_inv", tuple(s.inverse() for s in self.sigmas))

    @classmethod
    def from_tables(
        cls,
        name: str,
        base: int,
        dim: int,
        tau: Sequence[int],
        sigmas: Sequence[Sequence[int]],
    ) -> "CurveSpec":
        """Build a spec from bottom rows of the two-row notation."""
        _validate_tables(base, dim, tau, sigmas)
        return cls(
            name=name,
            base=base,
            dim=dim,
            tau=Permutation(tau),
            sigmas=tuple(Permutation(s) for s in sigmas),
        )

    @property
    def symbols(self) -> int:
        """Number of symbols n^d every permutation acts on."""
        return self.base**self.dim

    def to_document(self) -> "CurveDocument":
        return CurveDocument(
            name=self.name,
            base=self.base,
            dim=self.dim,
            tau=list(self.tau),
            sigmas=[list(s) for s in self.sigmas],
        )


@dataclass
class CurveDocument(JsonDocument):
    """JSON form of a curve spec.

    ``tau`` and every entry of ``sigmas`` are bottom rows of the two-row
    notation, each listing n^d symbols.
    """

    name: str = "custom"
    base: int = 2
    dim: int = 2
    tau: List[int] = field(default_factory=list)
    sigmas: List[List[int]] = field(default_factory=list)

    def validate(self) -> None:
        _validate_tables(self.base, self.dim, self.tau, self.sigmas)

    def to_spec(self) -> CurveSpec:
        self.validate()
        return CurveSpec.from_tables(
            self.name, self.base, self.dim, self.tau, self.sigmas
        )


def load_curve(file_path: str) -> CurveSpec:
    """Load and validate a curve spec from a JSON file."""
    return CurveDocument.from_file(file_path).to_spec()


def delta(spec: CurveSpec, column: Sequence[int]) -> int:
    """Pack one digit column into a symbol, first coordinate most significant."""
    symbol = 0
    for digit in column:
        symbol = symbol * spec.base + digit
    return symbol


def undelta(spec: CurveSpec, symbol: int) -> Point:
    """Unpack a symbol into its digit column."""
    column = []
    for _ in range(spec.dim):
        symbol, digit = divmod(symbol, spec.base)
        column.append(digit)
    return tuple(reversed(column))


def encode(spec: CurveSpec, coords: Sequence[int]) -> int:
    """Map a point of N^d to its position along the curve.

    Args:
        spec: Curve to follow
        coords: Exactly spec.dim non-negative coordinates

    Returns:
        Curve index of coords; the origin maps to 0

    Raises:
        DomainError: If the number of coordinates differs from spec.dim
    """
    if len(coords) != spec.dim:
        raise DomainError(
            f"{spec.name} takes {spec.dim} coordinates, got {len(coords)}"
        )
    n = spec.base
    m = max(len_base(n, c) for c in coords)
    if m == 0:
        return 0

    # digits[i][j] is digit j (least significant first) of coordinate i
    digits = []
    for c in coords:
        row = []
        for _ in range(m):
            c, digit = divmod(c, n)
            row.append(digit)
        digits.append(row)

    chain = (spec.sigmas[0] ** -(m - 1)) * spec.tau
    z = 0
    for j in range(m - 1, -1, -1):
        zj = chain(delta(spec, [row[j] for row in digits]))
        z = z * spec.symbols + zj
        chain = spec.sigmas[zj] * chain
    return z


def decode(spec: CurveSpec, z: int) -> Point:
    """Map a curve position back to its point; inverse of ``encode``."""
    if z < 0:
        raise DomainError(f"z must be a non-negative integer, got {z}")
    m = len_base(spec.symbols, z)
    if m == 0:
        return (0,) * spec.dim

    out_digits = []
    for _ in range(m):
        z, zj = divmod(z, spec.symbols)
        out_digits.append(zj)

    chain = spec.tau_inv * (spec.sigmas[0] ** (m - 1))
    coords = [0] * spec.dim
    for zj in reversed(out_digits):
        column = undelta(spec, chain(zj))
        coords = [c * spec.base + digit for c, digit in zip(coords, column)]
        chain = chain * spec.sigma_inv[zj]
    return tuple(coords)


def trace(spec: CurveSpec, count: int) -> List[Point]:
    """The first ``count`` points visited by the curve."""
    return [decode(spec, z) for z in range(count)]


def cell_map(spec: CurveSpec, i: int) -> Permutation:
    """tau^-1 . sigma_i^-1 . tau, the action of sigma_i on grid cells."""
    return spec.tau_inv * spec.sigma_inv[i] * spec.tau


def is_isometric(spec: CurveSpec, i: int) -> bool:
    """True if sigma_i moves grid cells by a symmetry of the grid."""
    return cell_map(spec, i).is_grid_isometry(spec.base, spec.dim)


_IDENTITY_4 = [0, 1, 2, 3]
_IDENTITY_9 = list(range(9))

_PEANO_FLIP_X = [6, 7, 8, 3, 4, 5, 0, 1, 2]
_PEANO_FLIP_Y = [2, 1, 0, 5, 4, 3, 8, 7, 6]

_BUILTIN_TABLES: Dict[str, Tuple[int, int, List[int], List[List[int]]]] = {
    "peano3": (
        3,
        2,
        [0, 1, 2, 5, 4, 3, 6, 7, 8],
        [
            _IDENTITY_9,
            _PEANO_FLIP_X,
            _IDENTITY_9,
            _PEANO_FLIP_Y,
            [8, 7, 6, 5, 4, 3, 2, 1, 0],
            _PEANO_FLIP_Y,
            _IDENTITY_9,
            _PEANO_FLIP_X,
            _IDENTITY_9,
        ],
    ),
    "hilbert2": (
        2,
        2,
        [0, 1, 3, 2],
        [[0, 3, 2, 1], _IDENTITY_4, _IDENTITY_4, [2, 1, 0, 3]],
    ),
    "zorder2": (2, 2, _IDENTITY_4, [_IDENTITY_4] * 4),
    "gray2": (
        2,
        2,
        [0, 1, 3, 2],
        [_IDENTITY_4, [2, 3, 0, 1], [2, 3, 0, 1], _IDENTITY_4],
    ),
    "nonisometric2": (
        2,
        2,
        _IDENTITY_4,
        [[0, 3, 1, 2], [0, 1, 3, 2], [1, 0, 2, 3], [1, 2, 0, 3]],
    ),
    "hilbert3": (
        2,
        3,
        [0, 1, 3, 2, 7, 6, 4, 5],
        [
            [0, 7, 4, 3, 2, 5, 6, 1],
            [0, 1, 6, 7, 4, 5, 2, 3],
            [0, 1, 6, 7, 4, 5, 2, 3],
            [2, 3, 0, 1, 6, 7, 4, 5],
            [2, 3, 0, 1, 6, 7, 4, 5],
            [4, 5, 2, 3, 0, 1, 6, 7],
            [4, 5, 2, 3, 0, 1, 6, 7],
            [6, 1, 2, 5, 4, 3, 0, 7],
        ],
    ),
}


def builtin_names() -> List[str]:
    """Names accepted by ``builtin``."""
    return sorted(_BUILTIN_TABLES)


@lru_cache(maxsize=None)
def builtin(name: str) -> CurveSpec:
    """Return one of the built-in curves.

    Args:
        name: One of peano3, hilbert2, zorder2, gray2, nonisometric2, hilbert3

    Returns:
        The validated curve spec

    Raises:
        UnknownCurveError: If name is not a built-in curve
    """
    try:
        base, dim, tau, sigmas = _BUILTIN_TABLES[name]
    except KeyError:
        raise UnknownCurveError(
            f"Unknown curve {name!r}; valid names: {', '.join(builtin_names())}"
        ) from None
    logger.debug(f"Building built-in curve {name} (base {base}, dim {dim})")
    return CurveSpec.from_tables(name, base, dim, tau, sigmas)
