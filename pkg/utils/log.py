# -*- coding: utf-8 -*-
"""
Logging setup: one stderr handler, module loggers underneath "spinwave".
"""

import logging
import sys

LOG_FORMAT = '%(name)s:%(levelname)s:%(message)s'
ROOT_NAME = 'spinwave'


def get_logger(name: str) -> logging.Logger:
    """Return a logger below the project root logger"""
    return logging.getLogger(f"{ROOT_NAME}.{name}")


def configure_logging(verbose: bool = False) -> None:
    """(Re)attach the stderr handler; INFO for progress, DEBUG when verbose"""
    root = logging.getLogger(ROOT_NAME)
    for old in list(root.handlers):
        root.removeHandler(old)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.INFO)
