"""Module for report base classes."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Self

from mashumaro.config import BaseConfig
from mashumaro.mixins.json import DataClassJSONMixin


class BaseEnum(Enum):
    """Base enum class."""

    @classmethod
    def from_value(cls, value: Any) -> Self:
        for member in cls:
            if member.value == value:
                return member
        raise ValueError(f"Invalid {cls.__name__} value: {value}")


class Status(str, BaseEnum):
    """Outcome of a check."""

    PASS = "pass"
    FAIL = "fail"

    @classmethod
    def of(cls, value: bool) -> Self:
        return cls.PASS if value else cls.FAIL


@dataclass
class BaseReport(DataClassJSONMixin):
    """Base class of serialized reports."""

    class Config(BaseConfig):
        omit_none = True
