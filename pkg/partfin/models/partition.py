from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

from partfin.errors import PreconditionError


@dataclass(frozen=True)
class SetPartition:
    """Partition of {0, ..., n - 1} in restricted-growth-string form.

    ``rgs[x]`` is the index of the block holding ``x``; blocks are numbered
    in order of their least element, so every partition has exactly one
    representation and equality is tuple equality.
    """

    rgs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rgs", tuple(self.rgs))

        top = -1
        for x, b in enumerate(self.rgs):
            if not isinstance(b, int) or b < 0 or b > top + 1:
                raise PreconditionError(
                    f"not a restricted growth string at position {x}: {self.rgs}"
                )
            top = max(top, b)

    @classmethod
    def from_blocks(cls, blocks, size, fill_singletons=False):
        """Canonicalize ``blocks`` over a carrier of ``size`` labels.

        With ``fill_singletons`` labels missing from every block become
        singletons; otherwise the blocks must cover the carrier.
        """
        owner = [None] * size
        for i, block in enumerate(blocks):
            block = list(block)
            if not block:
                raise PreconditionError("partition blocks must be nonempty")
            for x in block:
                if not isinstance(x, int) or not 0 <= x < size:
                    raise PreconditionError(f"label {x!r} outside carrier of size {size}")
                if owner[x] is not None:
                    raise PreconditionError(f"label {x} appears in two blocks")
                owner[x] = i

        if not fill_singletons and None in owner:
            raise PreconditionError(f"blocks do not cover label {owner.index(None)}")

        renumber = {}
        rgs = []
        for x, key in enumerate(owner):
            if key is None:
                key = ("singleton", x)
            if key not in renumber:
                renumber[key] = len(renumber)
            rgs.append(renumber[key])

        return cls(tuple(rgs))

    @classmethod
    def singletons(cls, size):
        return cls(tuple(range(size)))

    @property
    def size(self):
        return len(self.rgs)

    @cached_property
    def blocks(self):
        """Blocks as frozensets, ordered by least element."""
        grouped = [[] for _ in range(max(self.rgs, default=-1) + 1)]
        for x, b in enumerate(self.rgs):
            grouped[b].append(x)
        return tuple(frozenset(block) for block in grouped)

    def block_index(self, x):
        if not 0 <= x < self.size:
            raise PreconditionError(f"label {x!r} outside carrier of size {self.size}")
        return self.rgs[x]

    def block_sizes(self):
        return tuple(len(block) for block in self.blocks)

    def max_block(self):
        return max(self.block_sizes(), default=0)

    def __repr__(self):
        inner = ",".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)
        return "{" + inner + "}"
