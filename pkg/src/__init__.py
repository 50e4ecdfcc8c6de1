"""
OU Braid - Over-Under Matrices and Warping Degrees of Braid Diagrams
"""

__version__ = "1.0"

# Import key classes for easier access
from src.core.braid import BraidWord, parse_word, format_word, ou_matrix, braid_permutation
from src.core.permutation import Permutation
from src.core.invariants import invariant_report, InvariantReport
from src.core.warping import wd_exact, wd_heuristic, WdResult
from src.core.layers import finest_layering, LayerDecomposition
from src.core.checks import PropertyChecker
from src.utils.config_manager import ConfigManager
from src.utils.validator import ReportValidator

__all__ = [
    'BraidWord',
    'parse_word',
    'format_word',
    'ou_matrix',
    'braid_permutation',
    'Permutation',
    'invariant_report',
    'InvariantReport',
    'wd_exact',
    'wd_heuristic',
    'WdResult',
    'finest_layering',
    'LayerDecomposition',
    'PropertyChecker',
    'ConfigManager',
    'ReportValidator',
]
