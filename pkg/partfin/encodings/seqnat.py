import math

from partfin.errors import PreconditionError
from partfin.models.finseq import FinSeq


def cantor_pair(a, b):
    return (a + b) * (a + b + 1) // 2 + b


def cantor_unpair(z):
    w = (math.isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


def _tuple_code(entries):
    code = entries[-1]
    for a in reversed(entries[:-1]):
        code = cantor_pair(a, code)
    return code


def encode_seq_as_nat(s):
    """Bijection from finite sequences of naturals onto the naturals.

    <> -> 0; a sequence of length k >= 1 -> 1 + cantor(k - 1, code) with
    code the right-nested Cantor pairing of its entries.
    """
    entries = tuple(s)
    if any(e < 0 for e in entries):
        raise PreconditionError(f"entries must be natural numbers: {entries}")
    if not entries:
        return 0
    return 1 + cantor_pair(len(entries) - 1, _tuple_code(entries))


def decode_nat_as_seq(z):
    if z < 0:
        raise PreconditionError(f"code must be a natural number, got {z}")
    if z == 0:
        return FinSeq()

    extra, code = cantor_unpair(z - 1)
    entries = []
    for _ in range(extra):
        a, code = cantor_unpair(code)
        entries.append(a)
    entries.append(code)
    return FinSeq(tuple(entries))
