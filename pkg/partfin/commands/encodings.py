import click

from partfin.config import Config
from partfin.encodings.bounded import bounded_partition_to_seq, bounded_seq_to_partition
from partfin.encodings.dedekind import partition_to_seq_dedekind, seq_to_partition_dedekind
from partfin.encodings.diagonal import diagonal_family, distinguishing_witness, earlier_indices
from partfin.encodings.seqnat import decode_nat_as_seq, encode_seq_as_nat
from partfin.errors import PartfinError
from partfin.models.carrier import Carrier
from partfin.models.lazy_subset import BaseFamily
from partfin.models.marker import MarkerGrid, MarkerUniverse
from partfin.utils import (
    format_partition, format_sequence, parse_names, parse_naturals, parse_partition, parse_sequence, read_input,
)

input_option = click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False),
                            default=None, help="Read input from FILE instead of stdin.")


def _run(action):
    try:
        return action()
    except PartfinError as e:
        raise click.UsageError(str(e)) from e


def _universe(base, markers):
    names = parse_names(base)
    u = _run(lambda: MarkerUniverse(Carrier.named(names), markers))
    _run(lambda: u.combined)
    return u


def _grid(n, plain):
    return _run(lambda: MarkerGrid.with_plain(n, parse_names(plain)))


dedekind_options = [
    click.option("--base", default="x y z", show_default=True, help="Names of the base elements."),
    click.option("--markers", "-M", type=click.IntRange(min=0), default=4, show_default=True,
                 help="Marker budget M."),
    input_option,
]

bounded_options = [
    click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Length bound n."),
    click.option("--plain", default="x", show_default=True, help="Names of the elements off the grid."),
    input_option,
]


def _apply(options):
    def decorate(f):
        for option in reversed(options):
            f = option(f)
        return f
    return decorate


@click.command("encode-dedekind")
@_apply(dedekind_options)
@click.pass_obj
def encode_dedekind(out, base, markers, in_path):
    """Sequence over the base -> partition of base + markers."""
    u = _universe(base, markers)
    a = _run(lambda: parse_sequence(read_input(in_path), u.base))
    p = _run(lambda: seq_to_partition_dedekind(a, u))

    out.line(format_partition(p, u.combined))
    out.record({"kind": "partition", "blocks": format_partition(p, u.combined)})


@click.command("decode-dedekind")
@_apply(dedekind_options)
@click.pass_obj
def decode_dedekind(out, base, markers, in_path):
    """Partition of base + markers -> the sequence it encodes."""
    u = _universe(base, markers)
    p = _run(lambda: parse_partition(read_input(in_path), u.combined))
    a = _run(lambda: partition_to_seq_dedekind(p, u))

    out.line(format_sequence(a, u.base))
    out.record({"kind": "sequence", "entries": format_sequence(a, u.base)})


@click.command("encode-bounded")
@_apply(bounded_options)
@click.pass_obj
def encode_bounded(out, n, plain, in_path):
    """Sequence of length <= n -> partition through the marker grid."""
    g = _grid(n, plain)
    c = _run(lambda: parse_sequence(read_input(in_path), g.carrier))
    p = _run(lambda: bounded_seq_to_partition(c, g))

    out.line(format_partition(p, g.carrier))
    out.record({"kind": "partition", "blocks": format_partition(p, g.carrier)})


@click.command("decode-bounded")
@_apply(bounded_options)
@click.pass_obj
def decode_bounded(out, n, plain, in_path):
    """Partition -> the bounded-length sequence it encodes."""
    g = _grid(n, plain)
    p = _run(lambda: parse_partition(read_input(in_path), g.carrier))
    c = _run(lambda: bounded_partition_to_seq(p, g))

    out.line(format_sequence(c, g.carrier))
    out.record({"kind": "sequence", "entries": format_sequence(c, g.carrier)})


@click.command("seqnat")
@click.argument("direction", type=click.Choice(["encode", "decode"]))
@input_option
@click.pass_obj
def seqnat(out, direction, in_path):
    """Finite sequences of naturals <-> naturals."""
    values = _run(lambda: parse_naturals(read_input(in_path)))

    if direction == "encode":
        z = encode_seq_as_nat(values)
        out.line(str(z))
        out.record({"kind": "seqnat", "sequence": list(values), "code": z})
        return

    if len(values) != 1:
        raise click.UsageError("decode expects exactly one natural number")
    s = decode_nat_as_seq(values[0])
    out.line(" ".join(map(str, s)))
    out.record({"kind": "seqnat", "sequence": list(s.entries), "code": values[0]})


@click.command("diagonal")
@click.option("--base", "description", required=True,
              help="Base family: singleton:m, upto:m, evens, odds, periodic:PATTERN.")
@click.option("--k", "k", type=click.IntRange(min=0), required=True, help="Index of G(k).")
@click.option("--window", type=click.IntRange(min=0), default=Config.DIAGONAL_WINDOW,
              show_default=True, help="Membership is printed on 0..window.")
@click.pass_obj
def diagonal(out, description, k, window):
    """Membership of G(k) and the witnesses separating it from every earlier set."""
    family = diagonal_family(_run(lambda: BaseFamily(description)))
    bits = family(k).bits(window)

    out.line(f"G({k}) on 0..{window}: {bits}")
    out.record({"kind": "membership", "k": k, "window": window, "bits": bits})

    for earlier in earlier_indices(k, window):
        w = distinguishing_witness(family, k, earlier)
        out.line(
            f"{earlier!r:>8} xi={w.xi:<4} G({k}):{int(w.in_diagonal)} "
            f"earlier:{int(w.in_earlier)} {'ok' if w.differs else 'SAME'}"
        )
        out.record(w.to_record())
