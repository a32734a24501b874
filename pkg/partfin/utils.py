import json
import re

import click

from partfin.errors import FormatError, PartfinError
from partfin.models.finseq import FinSeq
from partfin.models.partition import SetPartition

_BLOCK = re.compile(r"\{([^{}]*)\}")


def parse_names(text):
    return tuple(text.split())


def parse_sequence(text, carrier):
    """Whitespace-separated element names -> FinSeq."""
    try:
        return FinSeq(tuple(carrier.label_of(name) for name in text.split()))
    except PartfinError as e:
        raise FormatError(str(e)) from e


def format_sequence(s, carrier):
    return " ".join(carrier.name(x) for x in s)


def parse_partition(text, carrier, fill_singletons=True):
    """Blocks in braces, e.g. ``{x m0} {y}``; unlisted elements become singletons."""
    leftover = _BLOCK.sub(" ", text)
    if leftover.strip():
        raise FormatError(f"unexpected text outside blocks: {leftover.strip()!r}")

    try:
        blocks = [[carrier.label_of(name) for name in body.split()] for body in _BLOCK.findall(text)]
        return SetPartition.from_blocks(blocks, carrier.size, fill_singletons=fill_singletons)
    except PartfinError as e:
        raise FormatError(str(e)) from e


def format_partition(p, carrier):
    """Blocks ordered by least element, elements ascending."""
    return " ".join(
        "{" + " ".join(carrier.name(x) for x in sorted(block)) + "}" for block in p.blocks
    )


def parse_naturals(text):
    try:
        values = tuple(int(part) for part in text.split())
    except ValueError:
        raise FormatError(f"expected natural numbers, got {text.strip()!r}") from None
    if any(v < 0 for v in values):
        raise FormatError(f"expected natural numbers, got {text.strip()!r}")
    return values


def dump_record(record):
    return json.dumps(record, sort_keys=True, separators=(",", ":"), default=repr)


def read_input(path):
    if path is None:
        return click.get_text_stream("stdin").read()
    with open(path, "r") as f:
        return f.read()
