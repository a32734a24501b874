import sys

import click

from partfin.config import Config
from partfin.counting import verify_finite_inequality


@click.command("table")
@click.option("--max", "N", type=click.IntRange(min=1), required=True, help="Largest n to tabulate.")
@click.option("--cutoff", type=click.IntRange(min=0), default=Config.ENUMERATION_CUTOFF,
              show_default=True, help="Recount rows up to this n by enumeration.")
@click.pass_obj
def table(out, N, cutoff):
    """Tabulate arrangement numbers against Bell numbers."""
    report = verify_finite_inequality(N, cutoff=cutoff)

    out.line(f"{'n':>5} {'a(n)':>24} {'B(n)':>24}")
    for row in report.rows:
        out.line(f"{row.n:>5} {row.arrangements:>24} {row.bell:>24}{'' if row.holds else '  FAIL'}")
        out.record(row.to_record())

    out.line("PASS" if report.passed else "FAIL")
    out.record({"kind": "summary", "passed": report.passed, "max": N})
    if not report.passed:
        sys.exit(1)
