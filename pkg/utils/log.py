"""Jednotné získávání loggerů a nastavení úrovně výpisu."""
from __future__ import annotations
import logging
import sys

_FORMAT = "%(levelname)s %(message)s"


def get_logger(name: str) -> logging.Logger:
    """Vrátí logger modulu; zprávy se píší ve stylu "[Třída.metoda] text"."""
    return logging.getLogger(name)


def configure_logging(level: str = "WARNING") -> None:
    """
    Nastaví kořenový logger tak, aby psal na stderr.

    Args:
        level: Název úrovně ("DEBUG", "INFO", ...)
    """
    root = logging.getLogger()
    if not any(getattr(h, "_partcong", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler._partcong = True
        root.addHandler(handler)
    root.setLevel(getattr(logging, level.upper(), logging.WARNING))
