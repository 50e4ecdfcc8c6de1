"""
Utility modules
"""

from src.utils.config_manager import ConfigManager
from src.utils.performance_metrics import SearchMetrics

__all__ = ['ConfigManager', 'SearchMetrics']
