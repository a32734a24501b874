import sys

import click

from partfin.config import Config
from partfin.errors import PartfinError
from partfin.fraenkel import check_bundle
from partfin.tasks_celery import run_fraenkel_bundle


def _sizes(ctx, param, value):
    try:
        sizes = sorted({int(part) for part in value.split(",") if part.strip()})
    except ValueError:
        raise click.BadParameter("expected a comma-separated list of E sizes") from None
    if not sizes:
        raise click.BadParameter("at least one E size is required")
    return sizes


@click.command("fraenkel")
@click.option("--atoms", type=click.IntRange(min=2), required=True, help="Number of atoms.")
@click.option("--esizes", callback=_sizes, required=True, help="Comma-separated support sizes.")
@click.option("--b", "b", type=click.IntRange(min=1), required=True, help="Block bound b.")
@click.pass_obj
def fraenkel(out, atoms, esizes, b):
    """Certificate bundle: no fix(E)-equivariant injection into bounded-block partitions."""
    try:
        for e in esizes:
            check_bundle(atoms, e, b)
    except PartfinError as e:
        raise click.UsageError(str(e)) from e

    records = run_fraenkel_bundle(atoms, esizes, b)

    for record in records:
        if record["inequality_claimed"]:
            relation = ">" if record["inequality_holds"] else "<="
        else:
            relation = "vs"
        verdict = "YES" if record["injection_exists"] else "NO"
        out.line(
            f"e={record['e']}: {record['supported_sequences']} {relation} "
            f"{record['supported_partitions']}  injection: {verdict}  "
            f"{'PASS' if record['passed'] else 'FAIL'}"
        )
        out.record(record)

    passed = all(record["passed"] for record in records)
    out.line("PASS" if passed else "FAIL")
    out.record({"kind": "summary", "passed": passed, "atoms": atoms, "b": b})
    if not passed:
        sys.exit(1)
