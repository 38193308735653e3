"""Serializable report models."""

from .base import BaseEnum, Status
from .report import CheckItem, CheckReport, NumericRecord, ReportItem, RunReport

__all__ = [
    "BaseEnum",
    "CheckItem",
    "CheckReport",
    "NumericRecord",
    "ReportItem",
    "RunReport",
    "Status",
]
