"""Utility modules for the codouble calculus toolkit."""

from .logger import logger, setup_logger, set_level
from .progress import progress

__all__ = ['logger', 'setup_logger', 'set_level', 'progress']
