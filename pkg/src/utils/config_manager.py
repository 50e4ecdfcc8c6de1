"""
Configuration Manager
Handles loading and saving search, check and output settings
"""

import configparser
import logging
import os
from typing import Optional

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = 'OU_BRAID_THREADS'


class ConfigManager:
    """Manages application configuration"""

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration manager

        Args:
            config_path: Path to config file; None keeps the defaults in memory
        """
        self.config_path = config_path
        self.config = configparser.ConfigParser()
        self.set_defaults()

        if config_path is not None:
            # Create default config if doesn't exist
            if not os.path.exists(config_path):
                self.save_config()
            self.load_config()

    def set_defaults(self):
        """Fill every section with its default values"""
        self.config['Search'] = {
            'max_exact_strands': '10',
            'threads': '1',
            'default_seed': '0'
        }

        self.config['Checks'] = {
            'default_cases': '200',
            'max_strands': '6',
            'max_length': '12',
            'show_progress': 'true'
        }

        self.config['Output'] = {
            'default_format': 'text'
        }

    def load_config(self):
        """Load configuration from file"""
        self.config.read(self.config_path)

    def save_config(self):
        """Save configuration to file (no-op for in-memory configs)"""
        if self.config_path is None:
            return
        with open(self.config_path, 'w') as f:
            self.config.write(f)

    def _set(self, section: str, key: str, value: str):
        if section not in self.config:
            self.config[section] = {}
        self.config[section][key] = value
        self.save_config()

    def get_max_exact_strands(self) -> int:
        """Largest strand count the exact search accepts without a node budget"""
        try:
            return self.config.getint('Search', 'max_exact_strands', fallback=10)
        except ValueError:
            return 10

    def set_max_exact_strands(self, n: int):
        self._set('Search', 'max_exact_strands', str(n))

    def get_threads(self) -> int:
        """
        Worker processes for the exact search

        OU_BRAID_THREADS overrides the file value when it holds a positive integer.
        """
        env_value = os.environ.get(THREADS_ENV_VAR)
        if env_value:
            try:
                threads = int(env_value)
                if threads >= 1:
                    return threads
            except ValueError:
                pass
            logger.warning(f"Ignoring {THREADS_ENV_VAR}={env_value!r}: expected a positive integer")
        try:
            return max(1, self.config.getint('Search', 'threads', fallback=1))
        except ValueError:
            return 1

    def set_threads(self, threads: int):
        self._set('Search', 'threads', str(threads))

    def get_default_seed(self) -> int:
        try:
            return self.config.getint('Search', 'default_seed', fallback=0)
        except ValueError:
            return 0

    def set_default_seed(self, seed: int):
        self._set('Search', 'default_seed', str(seed))

    def get_default_cases(self) -> int:
        """Get default number of cases per property suite"""
        try:
            return self.config.getint('Checks', 'default_cases', fallback=200)
        except ValueError:
            return 200

    def set_default_cases(self, cases: int):
        self._set('Checks', 'default_cases', str(cases))

    def get_max_strands(self) -> int:
        """Get largest strand count drawn by the property suites"""
        try:
            return self.config.getint('Checks', 'max_strands', fallback=6)
        except ValueError:
            return 6

    def set_max_strands(self, n: int):
        self._set('Checks', 'max_strands', str(n))

    def get_max_length(self) -> int:
        """Get largest word length drawn by the property suites"""
        try:
            return self.config.getint('Checks', 'max_length', fallback=12)
        except ValueError:
            return 12

    def set_max_length(self, length: int):
        self._set('Checks', 'max_length', str(length))

    def get_show_progress(self) -> bool:
        try:
            return self.config.getboolean('Checks', 'show_progress', fallback=True)
        except ValueError:
            return True

    def set_show_progress(self, show: bool):
        self._set('Checks', 'show_progress', str(show).lower())

    def get_default_format(self) -> str:
        """Get default output format (text or json)"""
        value = self.config.get('Output', 'default_format', fallback='text')
        return value if value in ('text', 'json') else 'text'

    def set_default_format(self, fmt: str):
        if fmt not in ('text', 'json'):
            raise ValueError(f"Unknown output format {fmt!r}")
        self._set('Output', 'default_format', fmt)
