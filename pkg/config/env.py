from enum import Enum
from pathlib import Path
from typing import TypeVar

import environ
from django.core.exceptions import ImproperlyConfigured

env = environ.Env()

BASE_DIR: Path = Path(__file__).resolve().parent.parent

E = TypeVar("E", bound=Enum)


def env_to_enum(enum_cls: type[E], value: str) -> E:
    """Member of `enum_cls` whose value is `value`, for enum-valued settings."""
    for member in enum_cls:
        if member.value == value:
            return member

    choices = ", ".join(repr(member.value) for member in enum_cls)
    raise ImproperlyConfigured(f"Env value {value!r} is not one of {choices}")
