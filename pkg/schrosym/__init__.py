"""
.. include:: ../README.md
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("schrosym")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "__version__",
    "catalog",
    "expr",
    "flows",
    "invariance",
    "jetfield",
    "models",
    "numeric",
]
