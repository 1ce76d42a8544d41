import os

from rich.console import Console
from rich.theme import Theme
from rich.traceback import install as rich_traceback_install

from config.env import BASE_DIR, env

LOG_DIR = env.str("RDRD_LOG_DIR", default=f"{BASE_DIR}/logs")
os.makedirs(LOG_DIR, exist_ok=True)

LOG_LEVEL = env.str("RDRD_LOG_LEVEL", default="INFO")
CONSOLE_LOG_LEVEL = env.str("RDRD_CONSOLE_LOG_LEVEL", default="WARNING")

rich_traceback_install(show_locals=False, suppress=[])

# Command output owns stdout, so log records go to stderr
LOG_CONSOLE = Console(
    stderr=True,
    theme=Theme({
        "logging.level.debug": "dim white",
        "logging.level.info": "bold blue",
        "logging.level.warning": "bold yellow",
        "logging.level.error": "bold red",
    }),
)


def _rotating(filename: str, formatter: str) -> dict:
    return {
        "class": "logging.handlers.RotatingFileHandler",
        "filename": os.path.join(LOG_DIR, filename),
        "formatter": formatter,
        "backupCount": 5,
        "maxBytes": 5 * 1024 * 1024,
        "encoding": "utf-8",
    }


FORMATTERS = {
    # worker processes log to the same files as the parent
    "verbose": {
        "format": "{levelname} {asctime} {processName} {name}:{lineno} {funcName} {message}",
        "style": "{",
    },
    "simple": {
        "format": "{levelname} {asctime} {name} {message}",
        "style": "{",
    },
}

HANDLERS = {
    "console_handler": {
        "class": "rich.logging.RichHandler",
        "level": CONSOLE_LOG_LEVEL,
        "console": LOG_CONSOLE,
        "rich_tracebacks": True,
        "show_path": False,
        "markup": False,
    },
    "file_handler": _rotating("workbench.log", "simple"),
    "detailed_file_handler": _rotating("workbench_detailed.log", "verbose"),
}

LOGGERS = {
    "django": {"handlers": ["console_handler", "file_handler"], "level": "WARNING", "propagate": False},
    "celery": {"handlers": ["console_handler", "file_handler"], "level": "INFO", "propagate": False},
    "core": {"handlers": ["console_handler", "detailed_file_handler"], "level": LOG_LEVEL, "propagate": False},
}

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": FORMATTERS,
    "handlers": HANDLERS,
    "loggers": LOGGERS,
}
