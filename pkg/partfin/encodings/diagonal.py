"""Diagonal family over lazily decided subsets of the naturals.

The two copies of omega are interleaved by F(2m) = (0, m), F(2m+1) = (1, m).
G(k) contains xi exactly when xi is not a member of the set F(xi) points
at, provided that set comes earlier than G(k); base sets occupy the first
copy and G(0), G(1), ... the second.
"""
import logging
import threading
from dataclasses import dataclass

from partfin.errors import PreconditionError
from partfin.models.lazy_subset import LazySubset, TwoCopyOrdinal

logger = logging.getLogger(__name__)


def pairing_F(xi):
    if xi < 0:
        raise PreconditionError(f"xi must be nonnegative, got {xi}")
    return TwoCopyOrdinal(xi % 2, xi // 2)


def pairing_F_inverse(t):
    return 2 * t.index + t.copy


@dataclass(frozen=True)
class DiagonalWitness:
    k: int
    earlier: TwoCopyOrdinal
    xi: int
    in_diagonal: bool
    in_earlier: bool

    @property
    def differs(self):
        return self.in_diagonal != self.in_earlier

    def to_record(self):
        return {
            "kind": "witness",
            "k": self.k,
            "earlier": [self.earlier.copy, self.earlier.index],
            "xi": self.xi,
            "in_diagonal": self.in_diagonal,
            "in_earlier": self.in_earlier,
            "differs": self.differs,
        }


class DiagonalFamily:
    """G(0), G(1), ... built on top of a base family."""

    def __init__(self, base):
        self.base = base
        self._sets = {}
        self._lock = threading.Lock()

    def _contains(self, k, xi):
        t = pairing_F(xi)
        if t.copy == 0:
            return xi not in self.base(t.index)
        if t.index < k:
            return xi not in self(t.index)
        return True

    def __call__(self, k):
        if k < 0:
            raise PreconditionError(f"k must be nonnegative, got {k}")

        with self._lock:
            subset = self._sets.get(k)
            if subset is None:
                subset = LazySubset(lambda xi: self._contains(k, xi), f"G({k})")
                self._sets[k] = subset
        return subset

    def indexed(self, t):
        """The set at position ``t``: base(m) for copy 0, G(m) for copy 1."""
        return self.base(t.index) if t.copy == 0 else self(t.index)

    def __repr__(self):
        return f"<DiagonalFamily over {self.base!r}>"


def diagonal_family(base):
    return DiagonalFamily(base)


def distinguishing_witness(family, k, earlier):
    """The point xi = F^-1(earlier) where G(k) and the earlier set disagree."""
    if not earlier < TwoCopyOrdinal(1, k):
        raise PreconditionError(f"{earlier!r} does not come before G({k}) = (1,{k})")

    xi = pairing_F_inverse(earlier)
    witness = DiagonalWitness(
        k=k,
        earlier=earlier,
        xi=xi,
        in_diagonal=xi in family(k),
        in_earlier=xi in family.indexed(earlier),
    )
    if not witness.differs:
        logger.error("no membership difference at xi=%d between G(%d) and %r", xi, k, earlier)
    return witness


def earlier_indices(k, window):
    """Every G(m) with m < k, and the base sets whose witness falls in 0..window."""
    base = [TwoCopyOrdinal(0, m) for m in range(window // 2 + 1)]
    diagonal = [TwoCopyOrdinal(1, m) for m in range(k)]
    return base + diagonal
