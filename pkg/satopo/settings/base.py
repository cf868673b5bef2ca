"""
Settings for satopo.

Every value can be overridden from the environment or from the env file named
by ``ENV_FILE`` (``.env`` in the repository root by default).
"""

import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import dotenv

BASE_DIR: Path = Path(__file__).resolve().parent.parent.parent

ENV_FILE_NAME: str = os.environ.get("ENV_FILE", ".env")

DOTENV: str = str(BASE_DIR / ENV_FILE_NAME)
if (BASE_DIR / ENV_FILE_NAME).is_file():
    dotenv.load_dotenv(DOTENV)

DEBUG: bool = False

SATOPO_SEED: int = int(os.environ.get("SATOPO_SEED", "0"))
BASEPOINT_RETRIES: int = int(os.environ.get("BASEPOINT_RETRIES", "20"))
SHEAR_RETRIES: int = int(os.environ.get("SHEAR_RETRIES", "20"))
MAX_DOUBLINGS: int = int(os.environ.get("MAX_DOUBLINGS", "8"))
MAX_REFINEMENTS: int = int(os.environ.get("MAX_REFINEMENTS", "200"))
VALUE_REFINEMENTS: int = int(os.environ.get("VALUE_REFINEMENTS", "24"))
INDEPENDENCE_SEEDS: int = int(os.environ.get("INDEPENDENCE_SEEDS", "3"))
CHECK_INDEPENDENCE: bool = os.environ.get("CHECK_INDEPENDENCE", "true") in {
    "true",
    "True",
    "1",
}

GAUSS_BONNET_SAMPLES: int = int(os.environ.get("GAUSS_BONNET_SAMPLES", "64"))
GAUSS_BONNET_TOL: Fraction = Fraction(os.environ.get("GAUSS_BONNET_TOL", "1/100"))
GAUSS_BONNET_RETRIES: int = int(os.environ.get("GAUSS_BONNET_RETRIES", "5"))

SVG_SIZE: int = int(os.environ.get("SVG_SIZE", "480"))

CELERY_BROKER_URL: Optional[str] = os.environ.get("CELERY_BROKER_URL", None)
CELERY_RESULT_BACKEND: Optional[str] = os.environ.get("CELERY_RESULT_BACKEND", None)
CELERY_TASK_ALWAYS_EAGER: bool = CELERY_BROKER_URL in {"", None}
CELERY_TASK_EAGER_PROPAGATES: bool = True
CELERY_ACCEPT_CONTENT: List[str] = ["application/json"]
CELERY_RESULT_SERIALIZER: str = "json"
CELERY_TASK_SERIALIZER: str = "json"

LOGGING: Dict[str, Any] = {
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
        "level": "WARNING",
    },
}
