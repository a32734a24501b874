import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import List

from partfin.config import Config
from partfin.errors import PreconditionError
from partfin.models.carrier import Carrier
from partfin.models.finseq import FinSeq
from partfin.models.partition import SetPartition

logger = logging.getLogger(__name__)


def arrangement_count(n):
    """Number of injective sequences of every length over an n-element set.

    a(0) = 1, a(n+1) = (n+1) a(n) + 1.
    """
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")

    a = 1
    for k in range(n):
        a = (k + 1) * a + 1
    return a


def arrangement_numbers(n):
    table = [1]
    for k in range(n):
        table.append((k + 1) * table[-1] + 1)
    return table


def bell_count(n):
    """Number of partitions of an n-element set, by B(m+1) = sum_k C(m,k) B(k)."""
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")

    bell = [1]
    row = [1]
    for m in range(n):
        bell.append(sum(c * b for c, b in zip(row, bell)))
        row = [1] + [row[k] + row[k + 1] for k in range(m)] + [1]
    return bell[n]


def bell_numbers(n):
    # Bell triangle
    table = [1]
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
        table.append(row[0])
    return table


def partition_count_bounded(n, max_block):
    """Partitions of an n-element set whose blocks have at most ``max_block`` elements."""
    if n < 0:
        raise PreconditionError(f"n must be nonnegative, got {n}")
    if max_block is None:
        return bell_count(n)
    if max_block < 1:
        raise PreconditionError(f"block bound must be positive, got {max_block}")

    # The block of the newest element picks k companions among the m older ones.
    table = [1]
    for m in range(n):
        table.append(sum(math.comb(m, k) * table[m - k] for k in range(min(max_block - 1, m) + 1)))
    return table[n]


def enumerate_injective_sequences(carrier):
    for length in range(carrier.size + 1):
        for entries in itertools.permutations(range(carrier.size), length):
            yield FinSeq(entries, injective=True)


def enumerate_sequences(carrier, max_len):
    if max_len < 0:
        raise PreconditionError(f"max_len must be nonnegative, got {max_len}")

    for length in range(max_len + 1):
        for entries in itertools.product(range(carrier.size), repeat=length):
            yield FinSeq(entries)


def enumerate_partitions(carrier, max_block=None):
    """Restricted-growth order; ``max_block`` prunes branches that would overfill a block."""
    if max_block is not None and max_block < 1:
        raise PreconditionError(f"block bound must be positive, got {max_block}")

    n = carrier.size
    rgs = [0] * n
    sizes = []

    def extend(x):
        if x == n:
            yield SetPartition(tuple(rgs))
            return

        for b in range(len(sizes) + 1):
            if b == len(sizes):
                sizes.append(1)
                rgs[x] = b
                yield from extend(x + 1)
                sizes.pop()
            elif max_block is None or sizes[b] < max_block:
                sizes[b] += 1
                rgs[x] = b
                yield from extend(x + 1)
                sizes[b] -= 1

    yield from extend(0)


def block_of(p, x):
    return p.blocks[p.block_index(x)]


@dataclass(frozen=True)
class InequalityRow:
    n: int
    arrangements: int
    bell: int
    enumerated: bool
    enumeration_agrees: bool = True

    @property
    def holds(self):
        return self.arrangements > self.bell and self.enumeration_agrees

    def to_record(self):
        return {
            "kind": "row",
            "n": self.n,
            "arrangements": self.arrangements,
            "bell": self.bell,
            "enumerated": self.enumerated,
            "holds": self.holds,
        }


@dataclass
class InequalityReport:
    rows: List[InequalityRow] = field(default_factory=list)

    @property
    def passed(self):
        return all(row.holds for row in self.rows)

    @property
    def first_failure(self):
        return next((row for row in self.rows if not row.holds), None)


def verify_finite_inequality(N, cutoff=None):
    """Rows n <= cutoff are also recounted by enumeration."""
    if N < 1:
        raise PreconditionError(f"N must be at least 1, got {N}")
    cutoff = Config.ENUMERATION_CUTOFF if cutoff is None else cutoff

    arrangements = arrangement_numbers(N)
    bells = bell_numbers(N)
    report = InequalityReport()

    for n in range(1, N + 1):
        enumerated = n <= cutoff
        agrees = True

        if enumerated:
            carrier = Carrier(n)
            seq_total = sum(1 for _ in enumerate_injective_sequences(carrier))
            part_total = sum(1 for _ in enumerate_partitions(carrier))
            agrees = seq_total == arrangements[n] and part_total == bells[n]
            if not agrees:
                logger.error(
                    "n=%d: enumeration gave %d sequences / %d partitions, recurrences %d / %d",
                    n, seq_total, part_total, arrangements[n], bells[n],
                )

        report.rows.append(InequalityRow(n, arrangements[n], bells[n], enumerated, agrees))

    logger.info("finite inequality checked up to n=%d, passed=%s", N, report.passed)
    return report
