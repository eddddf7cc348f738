"""
Logging System for the Weyl-cells toolkit
"""

import logging
import sys
from functools import wraps
import traceback

import config


class CellsLogger:
    def __init__(self):
        """Initialize logger"""
        self.logger = logging.getLogger('WeylCells')
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        # Console handler: stderr, so JSON on stdout stays clean
        self.console_handler = logging.StreamHandler(sys.stderr)
        self.console_handler.setLevel(getattr(logging, config.LOG_LEVEL))

        formatter = logging.Formatter(config.LOG_FORMAT, datefmt=config.DATE_FORMAT)
        self.console_handler.setFormatter(formatter)
        self.logger.addHandler(self.console_handler)

        # File handler
        if config.LOG_FILE:
            file_handler = logging.FileHandler(config.LOG_FILE)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def set_level(self, level_name):
        """Change the console level ('DEBUG', 'INFO', ...)"""
        self.console_handler.setLevel(getattr(logging, level_name.upper()))

    def info(self, message):
        """Log info message"""
        self.logger.info(message)

    def error(self, message):
        """Log error message"""
        self.logger.error(message)

    def warning(self, message):
        """Log warning message"""
        self.logger.warning(message)

    def debug(self, message):
        """Log debug message"""
        self.logger.debug(message)


class PerformanceTracker:
    def __init__(self):
        """Track verification workload"""
        self.checks_run = 0
        self.total_cases = 0
        self.total_failures = 0
        self.total_errors = 0
        self.check_times = {}

    def increment_errors(self):
        self.total_errors += 1

    def record_check(self, name, cases, failures, duration):
        """Record one (check, n) run"""
        self.checks_run += 1
        self.total_cases += cases
        self.total_failures += failures
        self.check_times[name] = self.check_times.get(name, 0.0) + duration

    def reset(self):
        self.__init__()

    def get_stats(self):
        """Get performance statistics"""
        slowest = max(self.check_times, key=self.check_times.get) if self.check_times else None

        return {
            'checks_run': self.checks_run,
            'total_cases': self.total_cases,
            'total_failures': self.total_failures,
            'total_errors': self.total_errors,
            'total_time': sum(self.check_times.values()),
            'slowest_check': slowest,
        }


# Decorator for exception handling
def log_exceptions(func):
    """Decorator to log exceptions, then re-raise them"""
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except Exception as e:
            logger.error(f"Exception in {func.__name__}: {type(e).__name__}: {e}")
            logger.debug(traceback.format_exc())
            performance_tracker.increment_errors()
            raise
    return wrapper


# Global instances
logger = CellsLogger()
performance_tracker = PerformanceTracker()
