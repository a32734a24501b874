"""Sequences over a base set as partitions of base + markers.

A sequence a = <a_0, ..., a_{k-1}> becomes the partition whose blocks are
{v} + {m_j : a_j = v} for each value v of a, and singletons elsewhere.
"""
from partfin.errors import NotInRange, PreconditionError
from partfin.models.finseq import FinSeq
from partfin.models.partition import SetPartition


def _check_sequence(a, u):
    if len(a) > u.marker_count:
        raise PreconditionError(
            f"sequence of length {len(a)} exceeds the marker budget {u.marker_count}"
        )
    for v in a:
        if not u.is_base(v):
            raise PreconditionError(f"entry {v} is not a base label of {u!r}")


def seq_to_partition_dedekind(a, u):
    _check_sequence(a, u)

    blocks = {}
    for j, v in enumerate(a):
        blocks.setdefault(v, [v]).append(u.marker(j))

    return SetPartition.from_blocks(blocks.values(), u.size, fill_singletons=True)


def partition_to_seq_dedekind(p, u):
    if p.size != u.size:
        raise NotInRange(f"partition has {p.size} labels, universe has {u.size}")

    entries = {}
    for block in p.blocks:
        base = sorted(x for x in block if u.is_base(x))
        markers = sorted(u.marker_index(x) for x in block if u.is_marker(x))

        if len(base) > 1:
            raise NotInRange(f"block {sorted(block)} holds {len(base)} base labels")
        if not base and len(markers) > 1:
            raise NotInRange(f"block {sorted(block)} holds markers but no base label")
        if base:
            for j in markers:
                entries[j] = base[0]

    length = len(entries)
    if sorted(entries) != list(range(length)):
        raise NotInRange(f"used markers {sorted(entries)} are not a prefix m0..m{length - 1}")

    return FinSeq(tuple(entries[j] for j in range(length)))


def dedekind_distinguishing_label(a, b, u):
    """A marker whose block differs between the images of ``a != b``.

    Equal lengths: the marker at the first differing position, whose block
    holds a_i in one image and b_i in the other. Otherwise the marker just
    past the shorter sequence, a singleton only in the shorter image.
    """
    if tuple(a) == tuple(b):
        raise PreconditionError("sequences are equal; nothing distinguishes their images")
    _check_sequence(a, u)
    _check_sequence(b, u)

    if len(a) == len(b):
        i = next(i for i, (x, y) in enumerate(zip(a, b)) if x != y)
        return u.marker(i)
    return u.marker(min(len(a), len(b)))


def dedekind_escape_seed(u):
    """Base singletons plus marker pairs {m_2i, m_2i+1}; never an encoder image."""
    if u.marker_count < 2 or u.marker_count % 2:
        raise PreconditionError("the escape seed pairs markers; the marker budget must be even and positive")

    pairs = [(u.marker(2 * i), u.marker(2 * i + 1)) for i in range(u.marker_count // 2)]
    return SetPartition.from_blocks(pairs, u.size, fill_singletons=True)
