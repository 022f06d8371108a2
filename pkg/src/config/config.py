# src/config/config.py
import configparser
import logging

logger = logging.getLogger(__name__)

APP_NAME = "vest"
APP_VERSION = "v.0.3.0"
CONFIG_FILE = "vest.ini"
DEFAULT_BUDGET = 10 ** 8
DEFAULT_SEED = 20240101


class Config:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self._load()
        self._initialized = True

    def _load(self, path: str = CONFIG_FILE):
        config = configparser.ConfigParser()

        # Step 1: Set hardcoded defaults
        defaults = {
            'Solver': {
                'budget': str(DEFAULT_BUDGET),
                'threads': '1',
                'default_method': 'dp',
            },
            'Verify': {
                'trials': '50',
                'max_size': '3',
                'seed': str(DEFAULT_SEED),
            },
            'Logging': {
                'level': 'INFO',
            }
        }
        config.read_dict(defaults)

        # Step 2: Overlay the ini file if there is one. No file is fine, the defaults stand.
        try:
            if config.read(path, encoding='utf-8'):
                logger.debug(f"Loaded settings from {path}.")
            else:
                logger.debug(f"{path} not found, using default settings.")
        except configparser.Error as e:
            logger.warning(f"Could not parse {path}. Using defaults. Error: {e}")
            config = configparser.ConfigParser()
            config.read_dict(defaults)

        self.budget = config.getint('Solver', 'budget')
        self.threads = config.getint('Solver', 'threads')
        self.default_method = config.get('Solver', 'default_method')
        self.verify_trials = config.getint('Verify', 'trials')
        self.verify_max_size = config.getint('Verify', 'max_size')
        self.seed = config.getint('Verify', 'seed')
        self.log_level = config.get('Logging', 'level').upper()

    def reload(self, path: str = CONFIG_FILE):
        self._load(path)


# The singleton instance
config = Config()
