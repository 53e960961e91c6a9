"""Apply a loaded configuration to the process-global engine, logging and metrics."""

from src.config.models import SafeCConfig
from src.constraints.handlers import Handler, resolve_handler, set_abort_status, set_constraint_handler
from src.infrastructure.logging_config import LoggingManager, init_logging


def configure_logging(config: SafeCConfig) -> LoggingManager:
    return init_logging(
        log_dir=config.logging.log_dir,
        console_level=config.logging.level_number,
        json_logging=config.logging.json_logging,
    )


def configure_engine(config: SafeCConfig, handler: str | None = None) -> Handler:
    """Install the abort status and handler from ``config``.

    Args:
        config: Loaded configuration
        handler: Handler name overriding ``config.constraints.handler``

    Returns:
        The previously registered handler
    """
    set_abort_status(config.constraints.abort_status)
    return set_constraint_handler(resolve_handler(handler or config.constraints.handler))
