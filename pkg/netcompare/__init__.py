"""Size-comparable complex network generation and analysis."""

__version__ = "0.1.0"
