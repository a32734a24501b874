import click

from partfin import configure_logging
from partfin.config import Config
from partfin.utils import dump_record


class Output:
    """Writes either human-readable lines or one JSON record per line."""

    def __init__(self, fmt):
        self.fmt = fmt

    @property
    def records(self):
        return self.fmt == "records"

    def line(self, text):
        if not self.records:
            click.echo(text)

    def record(self, record):
        if self.records:
            click.echo(dump_record(record))


def create_cli():
    @click.group(context_settings={"help_option_names": ["-h", "--help"]})
    @click.option("--format", "fmt", type=click.Choice(["human", "records"]), default="human",
                  show_default=True, help="Human table or line-delimited JSON records.")
    @click.option("--log-level", default=None, help="Logging level for stderr diagnostics.")
    @click.pass_context
    def cli(ctx, fmt, log_level):
        """Finite sequences versus finite-block partitions, checked exactly."""
        configure_logging(log_level or Config.LOG_LEVEL)
        ctx.obj = Output(fmt)

    from partfin.commands.counting import table
    from partfin.commands.encodings import (
        encode_dedekind, decode_dedekind, encode_bounded, decode_bounded, seqnat, diagonal,
    )
    from partfin.commands.verify import verify
    from partfin.commands.fraenkel import fraenkel

    for command in (table, encode_dedekind, decode_dedekind, encode_bounded, decode_bounded,
                    verify, diagonal, fraenkel, seqnat):
        cli.add_command(command)

    return cli
