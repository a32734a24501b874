from dataclasses import dataclass, field
from typing import Tuple

from partfin.errors import PreconditionError


@dataclass(frozen=True)
class FinSeq:
    """A finite sequence of labels.

    ``injective`` is a claim, checked on construction: when set, the
    entries must be pairwise distinct.
    """

    entries: Tuple[int, ...] = ()
    injective: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

        if any(not isinstance(e, int) or e < 0 for e in self.entries):
            raise PreconditionError(f"sequence entries must be nonnegative labels: {self.entries}")
        if self.injective and not self.is_injective():
            raise PreconditionError(f"sequence {self.entries} is flagged injective but repeats an entry")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def is_injective(self):
        return len(set(self.entries)) == len(self.entries)

    def entry_set(self):
        return frozenset(self.entries)

    def __repr__(self):
        return "<" + ",".join(map(str, self.entries)) + ">"
