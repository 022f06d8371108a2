# registers the TRACE level on logging.Logger before any module asks for logger.trace
from src.utils import logger as _logger  # noqa: F401
