from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

from partfin.errors import PreconditionError
from partfin.models.carrier import Carrier


@dataclass(frozen=True)
class MarkerUniverse:
    """Base carrier followed by marker labels m0, m1, ..."""

    base: Carrier
    marker_count: int

    def __post_init__(self):
        if self.marker_count < 0:
            raise PreconditionError(f"marker count must be nonnegative, got {self.marker_count}")

    @cached_property
    def combined(self):
        base_names = [self.base.name(x) for x in self.base.labels]
        marker_names = [f"m{j}" for j in range(self.marker_count)]
        if set(base_names) & set(marker_names):
            raise PreconditionError("base names collide with marker names")
        return Carrier.named(base_names + marker_names)

    @property
    def size(self):
        return self.base.size + self.marker_count

    def marker(self, j):
        if not 0 <= j < self.marker_count:
            raise PreconditionError(f"marker m{j} outside budget of {self.marker_count}")
        return self.base.size + j

    def is_marker(self, label):
        return self.base.size <= label < self.size

    def is_base(self, label):
        return 0 <= label < self.base.size

    def marker_index(self, label):
        if not self.is_marker(label):
            raise PreconditionError(f"label {label} is not a marker")
        return label - self.base.size

    def __repr__(self):
        return f"<MarkerUniverse base={self.base.size} markers={self.marker_count}>"


def grid_cell_name(j, i, n):
    if n + 2 <= 10:
        return f"a{j}{i}"
    return f"a{j}_{i}"


@dataclass(frozen=True)
class MarkerGrid:
    """(n+2) x (n+2) distinguished carrier labels; ``cells[j][i]`` is a^j_i.

    Row ``j`` of the grid is the set A_j = {a^j_i : i <= n+1}.
    """

    n: int
    carrier: Carrier
    cells: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"length bound must be nonnegative, got {self.n}")

        width = self.n + 2
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)

        if len(cells) != width or any(len(row) != width for row in cells):
            raise PreconditionError(f"grid for n={self.n} must be {width}x{width}")

        flat = [x for row in cells for x in row]
        if len(set(flat)) != len(flat):
            raise PreconditionError("grid cells must be pairwise distinct")
        for x in flat:
            self.carrier.check(x)

    @classmethod
    def leading(cls, n, carrier):
        """Grid on the first (n+2)^2 labels of ``carrier``, row-major."""
        width = n + 2
        if carrier.size < width * width:
            raise PreconditionError(
                f"carrier of size {carrier.size} cannot hold a {width}x{width} grid"
            )
        cells = tuple(tuple(j * width + i for i in range(width)) for j in range(width))
        return cls(n, carrier, cells)

    @classmethod
    def with_plain(cls, n, plain_names=("x",)):
        """Named carrier: grid cells a{j}{i} first, then the plain elements."""
        width = n + 2
        names = [grid_cell_name(j, i, n) for j in range(width) for i in range(width)]
        carrier = Carrier.named(names + list(plain_names))
        return cls.leading(n, carrier)

    @property
    def width(self):
        return self.n + 2

    def cell(self, j, i):
        return self.cells[j][i]

    @cached_property
    def rows(self):
        return tuple(frozenset(row) for row in self.cells)

    def row(self, j):
        return self.rows[j]

    def position(self, label):
        return self._positions.get(label)

    @cached_property
    def _positions(self):
        return {x: (j, i) for j, row in enumerate(self.cells) for i, x in enumerate(row)}

    def __repr__(self):
        return f"<MarkerGrid n={self.n} carrier={self.carrier.size}>"
