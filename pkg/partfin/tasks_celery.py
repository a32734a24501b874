import logging

from celery import group

from partfin import suites
from partfin.celery_app import celery
from partfin.fraenkel import esize_report

logger = logging.getLogger(__name__)


@celery.task
def run_suite(name):
    return suites.run_suite(name).to_record()


@celery.task
def fraenkel_esize_report(atoms, e, b):
    return esize_report(atoms, e, b).to_record()


def run_suites(names):
    """Fan the suites out and return their records in the order of ``names``."""
    result = group(run_suite.s(name) for name in names).apply_async()
    records = result.get()
    logger.info("%d suites finished", len(records))
    return records


def run_fraenkel_bundle(atoms, e_sizes, b):
    e_sizes = sorted(set(e_sizes))
    result = group(fraenkel_esize_report.s(atoms, e, b) for e in e_sizes).apply_async()
    return result.get()
