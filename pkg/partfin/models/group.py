import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Optional, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from partfin.config import Config
from partfin.errors import FormatError, LimitExceeded, PreconditionError
from partfin.models.carrier import Carrier


def identity(degree):
    return Permutation(list(range(degree)))


def transposition(a, b, degree):
    """The permutation (a;b): swaps a and b, fixes every other atom."""
    if a == b or not (0 <= a < degree and 0 <= b < degree):
        raise PreconditionError(f"({a};{b}) is not a transposition of {degree} atoms")
    return Permutation([[a, b]], size=degree)


def cycle_notation(perm):
    """Cycles written as (a;b;...), fixed points omitted; identity is ``()``."""
    cycles = [c for c in perm.cyclic_form if len(c) > 1]
    if not cycles:
        return "()"
    return "".join("(" + ";".join(map(str, c)) + ")" for c in cycles)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree):
    text = text.strip()
    if not re.fullmatch(r"(\([^()]*\))*", text):
        raise FormatError(f"malformed cycle notation {text!r}")

    cycles = []
    for body in _CYCLE.findall(text):
        if not body.strip():
            continue
        try:
            cycle = [int(part) for part in body.split(";")]
        except ValueError:
            raise FormatError(f"malformed cycle ({body})") from None
        if any(not 0 <= a < degree for a in cycle) or len(set(cycle)) != len(cycle):
            raise FormatError(f"cycle ({body}) is not a cycle on {degree} atoms")
        cycles.append(cycle)

    return Permutation(cycles, size=degree) if cycles else identity(degree)


@dataclass(frozen=True)
class AtomSet:
    carrier: Carrier

    def __post_init__(self):
        if self.carrier.size < 2:
            raise PreconditionError(f"an atom set needs at least 2 atoms, got {self.carrier.size}")

    @classmethod
    def of_size(cls, size):
        return cls(Carrier(size))

    @property
    def size(self):
        return self.carrier.size

    @property
    def atoms(self):
        return self.carrier.labels

    def __repr__(self):
        return f"<AtomSet size={self.size}>"


@dataclass(frozen=True)
class Support:
    atoms: FrozenSet[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "atoms", frozenset(self.atoms))

    @classmethod
    def leading(cls, size):
        return cls(frozenset(range(size)))

    def check_within(self, atom_set):
        for a in self.atoms:
            if a not in atom_set.carrier:
                raise PreconditionError(f"support atom {a} outside {atom_set.size} atoms")
        return self

    def outside(self, atom_set):
        return [a for a in atom_set.atoms if a not in self.atoms]

    def __len__(self):
        return len(self.atoms)

    def __repr__(self):
        return "E{" + ",".join(map(str, sorted(self.atoms))) + "}"


class AtomGroup:
    """Elements come out as sorted array-form tuples."""

    def __init__(self, degree, generators=(), limit=None):
        self.degree = degree
        self.generators = tuple(generators)
        for g in self.generators:
            if g.size != degree:
                raise PreconditionError(f"generator {g} does not act on {degree} atoms")
        self.limit = Config.GROUP_ATOM_LIMIT if limit is None else limit

    @classmethod
    def symmetric(cls, atoms, degree=None):
        """Full symmetric group on ``atoms`` (adjacent transpositions), fixing the rest."""
        atoms = sorted(atoms)
        degree = max(atoms, default=-1) + 1 if degree is None else degree
        gens = [transposition(a, b, degree) for a, b in zip(atoms, atoms[1:])]
        return cls(degree, gens)

    @cached_property
    def _sympy_group(self):
        return PermutationGroup(list(self.generators) or [identity(self.degree)])

    @cached_property
    def order(self):
        return int(self._sympy_group.order())

    @property
    def generator_forms(self):
        return [tuple(g.array_form) for g in self.generators]

    def elements(self):
        bound = math.factorial(self.limit)
        if self.order > bound:
            raise LimitExceeded("group order", self.order, bound)
        return self._elements

    @cached_property
    def _elements(self):
        return sorted(tuple(p.array_form) for p in self._sympy_group.generate())

    def __repr__(self):
        gens = ", ".join(cycle_notation(g) for g in self.generators) or "trivial"
        return f"<AtomGroup degree={self.degree} order={self.order} gens={gens}>"


@dataclass(frozen=True)
class OrbitRecord:
    representative: object
    members: Tuple[object, ...]
    stabilizer: Tuple[Tuple[int, ...], ...]

    @property
    def size(self):
        return len(self.members)

    def satisfies_orbit_stabilizer(self, group_order):
        return self.size * len(self.stabilizer) == group_order

    def __repr__(self):
        return f"<OrbitRecord rep={self.representative!r} size={self.size} stab={len(self.stabilizer)}>"


@dataclass(frozen=True)
class NonexistenceCertificate:
    """Why no equivariant injection X -> Y exists.

    ``supported_x``/``supported_y`` count the elements fixed by the whole
    group; when the first exceeds the second, pigeonhole alone rules the
    injection out. ``obstruction`` lists, per stabilizer class, how many
    X-orbits need a partner and how many Y-orbits offer one.
    """

    supported_x: int
    supported_y: int
    x_orbits: int
    y_orbits: int
    matching_size: int
    obstruction: Tuple[Tuple[int, int, int, int], ...] = field(default=())
    unmatched_representative: Optional[object] = None

    @property
    def pigeonhole(self):
        return self.supported_x > self.supported_y

    def to_record(self):
        return {
            "supported_x": self.supported_x,
            "supported_y": self.supported_y,
            "pigeonhole": self.pigeonhole,
            "x_orbits": self.x_orbits,
            "y_orbits": self.y_orbits,
            "matching_size": self.matching_size,
            "obstruction": [
                {"stabilizer_order": s, "orbit_size": o, "x_orbits": x, "y_orbits": y}
                for s, o, x, y in self.obstruction
            ],
            "unmatched": repr(self.unmatched_representative),
        }

    def __repr__(self):
        return (
            f"<NonexistenceCertificate supported {self.supported_x} vs {self.supported_y} "
            f"matching {self.matching_size}/{self.x_orbits}>"
        )
