import os

from celery import Celery

from satopo.conf import DEFAULT_SETTINGS, SETTINGS_ENV

os.environ.setdefault(SETTINGS_ENV, DEFAULT_SETTINGS)

app = Celery("satopo")

# Without a broker the settings turn on CELERY_TASK_ALWAYS_EAGER and tasks
# run in the calling process.
app.config_from_object(os.environ[SETTINGS_ENV], namespace="CELERY")

app.autodiscover_tasks(["satopo.harness"])
