"""
Core braid, matrix and search modules
"""

from src.core.braid import BraidWord, BraidParseError, BraidMoveError
from src.core.checks import PropertyChecker

__all__ = ['BraidWord', 'BraidParseError', 'BraidMoveError', 'PropertyChecker']
