import os

from satopo.settings.base import *

DEBUG = True

CHECK_INDEPENDENCE = os.environ.get("CHECK_INDEPENDENCE", "false") in {"true", "True", "1"}

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "plain",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": "INFO",
    },
    "loggers": {
        "satopo": {
            "handlers": ["console"],
            "level": os.getenv("SATOPO_LOG_LEVEL", "INFO"),
            "propagate": False,
        },
    },
}
