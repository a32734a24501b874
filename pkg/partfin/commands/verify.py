import sys

import click

from partfin.suites import SUITES
from partfin.tasks_celery import run_suites


@click.command("verify")
@click.option("--suite", type=click.Choice([*SUITES, "all"]), default="all", show_default=True,
              help="Property suite to run.")
@click.pass_obj
def verify(out, suite):
    """Run exhaustive property suites; exit 1 on the first counterexample."""
    names = list(SUITES) if suite == "all" else [suite]
    records = run_suites(names)

    for record in records:
        status = "PASS" if record["passed"] else "FAIL"
        out.line(f"{record['name']:<10} {status} ({record['checks']} checks)")
        if not record["passed"]:
            out.line(f"  counterexample: {record['counterexample']}")
        out.record(record)

    passed = all(record["passed"] for record in records)
    out.line("PASS" if passed else "FAIL")
    out.record({"kind": "summary", "passed": passed, "suites": names})
    if not passed:
        sys.exit(1)
