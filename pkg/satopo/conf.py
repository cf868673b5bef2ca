import importlib
import logging
import logging.config
import os
from types import ModuleType
from typing import Any

logger = logging.getLogger(__name__)

SETTINGS_ENV: str = "SATOPO_SETTINGS_MODULE"
DEFAULT_SETTINGS: str = "satopo.settings.prod"


def get_settings_module_name() -> str:
    return os.environ.get(SETTINGS_ENV) or DEFAULT_SETTINGS


def get_settings() -> ModuleType:
    return importlib.import_module(get_settings_module_name())


def get_setting(key: str, suppress_errors: bool = False) -> Any:
    settings: ModuleType = get_settings()
    if hasattr(settings, key):
        return getattr(settings, key)

    if not suppress_errors:
        raise Exception(f"{key} could not be found or empty.")


def configure_logging() -> None:
    logging.config.dictConfig(get_setting("LOGGING"))
    logger.debug(f"Logging configured from {get_settings_module_name()}")
