from celery import Celery

from partfin.config import Config


celery = Celery(
    'partfin',
    broker=Config.CELERY_BROKER_URL,
    backend=Config.CELERY_RESULT_BACKEND
)

# Eager by default: suites run in-process and no broker is contacted.
celery.conf.task_always_eager = Config.CELERY_ALWAYS_EAGER
celery.conf.task_eager_propagates = True
celery.conf.task_serializer = 'json'
celery.conf.result_serializer = 'json'
celery.conf.accept_content = ['json']

celery.conf.enable_utc = True
celery.conf.timezone = 'UTC'

import partfin.tasks_celery
