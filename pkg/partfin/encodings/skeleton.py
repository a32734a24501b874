"""Escape iteration, first-occurrence order and the fresh-label stream."""
import logging

from partfin.errors import EscapeCollision, StreamExhausted

logger = logging.getLogger(__name__)


def escape_iteration(f, g, seed, count):
    """[g(seed), g(f(g(seed))), ...]; a repeat raises EscapeCollision."""
    values = []
    first_seen = {}
    current = None

    for step in range(count):
        current = g(seed) if step == 0 else g(f(current))

        if current in first_seen:
            earlier = first_seen[current]
            if earlier == 0:
                cause = "seed lies in the range of f, or g is not injective"
            else:
                cause = "f or g is not injective"
            raise EscapeCollision(earlier, step, current, cause)

        first_seen[current] = step
        values.append(current)

    return values


def first_occurrence_order(seqs):
    """Labels of all sequences, ordered by (first sequence holding it, first position there)."""
    order = []
    seen = set()
    for s in seqs:
        for x in s:
            if x not in seen:
                seen.add(x)
                order.append(x)
    return order


def flatten_to_injective_stream(seqs):
    """First fresh entry of the earliest sequence that has one, until StreamExhausted."""
    emitted = []
    seen = set()

    for s in seqs:
        for x in s:
            if x not in seen:
                seen.add(x)
                emitted.append(x)
                yield x

    logger.debug("flattening exhausted after %d labels", len(emitted))
    raise StreamExhausted(emitted)
