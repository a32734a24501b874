"""Sequences of length <= n as partitions, using a (n+2) x (n+2) grid of cells.

For c = <c_0, ..., c_{k-1}> pick the first grid row A_j that c avoids, tie
each value of c to the row cells at its positions, and gather the unused
row cells a^j_k .. a^j_{n+1} into one tail block.
"""
import logging

from partfin.errors import NotInRange, PreconditionError
from partfin.models.finseq import FinSeq
from partfin.models.partition import SetPartition

logger = logging.getLogger(__name__)


def _check_sequence(c, g):
    if len(c) > g.n:
        raise PreconditionError(f"sequence of length {len(c)} exceeds the bound n={g.n}")
    for v in c:
        g.carrier.check(v)


def least_avoiding_row(c, g):
    _check_sequence(c, g)

    entries = set(c)
    for j in range(g.width):
        if not entries & g.row(j):
            return j

    # unreachable: at most n entries meet at most n of the n+2 rows
    raise AssertionError(f"{c!r} meets every row of {g!r}")


def bounded_seq_to_partition(c, g):
    j = least_avoiding_row(c, g)
    k = len(c)

    blocks = {}
    for m, v in enumerate(c):
        blocks.setdefault(v, [v]).append(g.cell(j, m))
    tail = [g.cell(j, i) for i in range(k, g.width)]

    return SetPartition.from_blocks([*blocks.values(), tail], g.carrier.size, fill_singletons=True)


def _tail_row(p, g):
    """The row j holding a block of size >= 2 inside A_j that contains a^j_{n+1}."""
    found = []
    for j in range(g.width):
        block = p.blocks[p.block_index(g.cell(j, g.n + 1))]
        if len(block) >= 2 and block <= g.row(j):
            found.append((j, block))

    if len(found) != 1:
        raise NotInRange(f"expected exactly one tail block, found {len(found)}")
    return found[0]


def bounded_partition_to_seq(p, g):
    if p.size != g.carrier.size:
        raise NotInRange(f"partition has {p.size} labels, carrier has {g.carrier.size}")

    j, tail = _tail_row(p, g)
    k = g.width - len(tail)
    if tail != frozenset(g.cell(j, i) for i in range(k, g.width)):
        raise NotInRange(f"tail block of row {j} is not a^{j}_{k}..a^{j}_{g.n + 1}")

    entries = []
    for m in range(k):
        outside = p.blocks[p.block_index(g.cell(j, m))] - g.row(j)
        if len(outside) != 1:
            raise NotInRange(f"block of a^{j}_{m} has {len(outside)} labels off row {j}")
        entries.append(next(iter(outside)))

    c = FinSeq(tuple(entries))
    if least_avoiding_row(c, g) != j or bounded_seq_to_partition(c, g) != p:
        raise NotInRange(f"partition is not the image of the recovered sequence {c!r}")
    return c


def bounded_distinguishing_label(b, c, g):
    """Return ``(case, label)``: a label whose block differs between the images.

    Case 1 (same row): the row cell at the first differing position, or at
    the length of the shorter sequence when one is a prefix of the other.
    Case 2 (different rows): the last cell a^{j_b}_{n+1} of b's row.
    """
    if tuple(b) == tuple(c):
        raise PreconditionError("sequences are equal; nothing distinguishes their images")

    jb, jc = least_avoiding_row(b, g), least_avoiding_row(c, g)
    if jb != jc:
        return 2, g.cell(jb, g.n + 1)

    diff = next((i for i, (x, y) in enumerate(zip(b, c)) if x != y), None)
    if diff is None:
        diff = min(len(b), len(c))
    return 1, g.cell(jb, diff)


def bounded_escape_seed(g):
    """Every grid row as one block, everything else a singleton; never an encoder image."""
    return SetPartition.from_blocks(g.cells, g.carrier.size, fill_singletons=True)
