"""Loggers and result files."""
