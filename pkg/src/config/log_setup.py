"""
Structured logging setup shared by every package.

Library modules only call ``structlog.get_logger().bind(component=...)``;
the configuration lives here so the CLI and the sweeps can choose the level
and keep stdout free for results.
"""

import logging
import sys
from typing import Optional

import structlog

# Configure structured logging
structlog.configure(
    processors=[
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        structlog.processors.JSONRenderer()
    ],
    context_class=dict,
    logger_factory=structlog.stdlib.LoggerFactory(),
    cache_logger_on_first_use=True,
)


def setup_logging(log_level: str = "WARNING", log_file: Optional[str] = None):
    """Set up logging configuration (stderr, optional file)"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, log_level),
        format='%(message)s',
        handlers=handlers,
        force=True,
    )
