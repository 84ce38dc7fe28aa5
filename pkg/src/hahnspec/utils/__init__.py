from .fancy_log import FancyLogger

__all__ = [
    "FancyLogger",
]
