from dataclasses import dataclass
from typing import Optional, Tuple

from partfin.errors import PreconditionError


@dataclass(frozen=True)
class Carrier:
    """Finite labeled set {0, ..., size - 1}, optionally with display names."""

    size: int
    names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 0:
            raise PreconditionError(f"carrier size must be nonnegative, got {self.size}")

        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != self.size:
                raise PreconditionError(
                    f"{len(self.names)} names given for a carrier of size {self.size}"
                )
            if len(set(self.names)) != self.size:
                raise PreconditionError("carrier names must be pairwise distinct")

    @classmethod
    def named(cls, names):
        names = tuple(names)
        return cls(len(names), names)

    @property
    def labels(self):
        return range(self.size)

    def __len__(self):
        return self.size

    def __contains__(self, label):
        return isinstance(label, int) and 0 <= label < self.size

    def check(self, label):
        if label not in self:
            raise PreconditionError(f"label {label!r} outside carrier of size {self.size}")
        return label

    def name(self, label):
        self.check(label)
        return self.names[label] if self.names is not None else str(label)

    def label_of(self, name):
        if self.names is not None:
            try:
                return self.names.index(name)
            except ValueError:
                raise PreconditionError(f"unknown element name {name!r}") from None

        try:
            return self.check(int(name))
        except ValueError:
            raise PreconditionError(f"unknown element name {name!r}") from None

    def __repr__(self):
        return f"<Carrier size={self.size} named={self.names is not None}>"
