"""Permutations on n symbols.

A permutation is stored as its bottom row in two-row notation: ``mapping[i]``
is the image of i. Composition follows the usual right-to-left convention,
``(f * g)(x) == f(g(x))``.
"""

import itertools
import math
from functools import reduce
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import DomainError


class Permutation:
    """A bijection on {0, ..., n - 1}."""

    __slots__ = ("_map",)

    def __init__(self, mapping: Iterable[int], check: bool = True) -> None:
        """Create a permutation from its bottom row.

        Args:
            mapping: Image of 0, 1, ..., n - 1 in order
            check: Verify that every symbol appears exactly once

        Raises:
            DomainError: If mapping is not a bijection on its index range
        """
        self._map: Tuple[int, ...] = tuple(mapping)
        if check and sorted(self._map) != list(range(len(self._map))):
            raise DomainError(f"{list(self._map)} is not a permutation")

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        """The identity permutation I on size symbols."""
        if size < 0:
            raise DomainError(f"Permutation size must be non-negative, got {size}")
        return cls(range(size), check=False)

    def __getitem__(self, idx: int) -> int:
        return self._map[idx]

    def __call__(self, x: int) -> int:
        return self._map[x]

    def __len__(self) -> int:
        return len(self._map)

    def __iter__(self) -> Iterator[int]:
        return iter(self._map)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self) -> int:
        return hash(self._map)

    def __repr__(self) -> str:
        return f"Permutation({list(self._map)})"

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(x) == self(other(x))."""
        if len(self) != len(other):
            raise DomainError(
                f"Cannot compose permutations on {len(self)} and {len(other)} symbols"
            )
        return Permutation((self._map[i] for i in other._map), check=False)

    def __pow__(self, power: int) -> "Permutation":
        """self composed with itself ``power`` times; negative powers invert.

        Runs in O(n) for any exponent by rotating each cycle by
        ``power mod len(cycle)``.
        """
        perm = list(range(len(self)))
        for cycle in self.cycles():
            for pos, index in enumerate(cycle):
                perm[index] = cycle[(pos + power) % len(cycle)]
        return Permutation(perm, check=False)

    def inverse(self) -> "Permutation":
        """The inverse permutation."""
        inv = [0] * len(self)
        for i, image in enumerate(self._map):
            inv[image] = i
        return Permutation(inv, check=False)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Cycle decomposition, each cycle starting at its smallest element."""
        seen = [False] * len(self)
        result = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self._map[i]
            result.append(tuple(cycle))
        return result

    def order(self) -> int:
        """Smallest k > 0 with self ** k == I."""
        lengths = [len(c) for c in self.cycles()]
        return reduce(lambda x, y: x * y // math.gcd(x, y), lengths, 1)

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self._map))

    def is_grid_isometry(self, n: int, d: int) -> bool:
        """True if self, read as a map on mixed-radix cells of {0..n-1}^d, is a
        symmetry of the grid (an axis permutation combined with reflections).

        Cell (c_1, ..., c_d) has index ``c_1 n^(d-1) + ... + c_d``.
        """
        if len(self) != n**d:
            raise DomainError(f"{self!r} does not act on {n}^{d} cells")
        cells = list(itertools.product(range(n), repeat=d))
        for axes in itertools.permutations(range(d)):
            for flips in itertools.product((False, True), repeat=d):
                if all(
                    self._map[index] == _cell_index(_move(cell, axes, flips, n), n)
                    for index, cell in enumerate(cells)
                ):
                    return True
        return False


def _move(
    cell: Sequence[int], axes: Sequence[int], flips: Sequence[bool], n: int
) -> Tuple[int, ...]:
    return tuple(
        n - 1 - cell[axis] if flip else cell[axis] for axis, flip in zip(axes, flips)
    )


def _cell_index(cell: Sequence[int], n: int) -> int:
    index = 0
    for digit in cell:
        index = index * n + digit
    return index


def perm_compose(f: Permutation, g: Permutation) -> Permutation:
    """f composed with g: x -> f(g(x))."""
    return f * g


def perm_power(s: Permutation, e: int) -> Permutation:
    """s ** e for any signed exponent, reduced modulo each cycle length."""
    return s**e
