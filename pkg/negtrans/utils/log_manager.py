import json
import logging
import logging.handlers
import sys
import traceback
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from negtrans.errors import ConfigError


class LogManager:
    """Root logger setup plus structured event, metric and error records.

    Results go to stdout, so the console handler writes to stderr.
    """

    def __init__(self, log_dir: Optional[Union[str, Path]] = None, level: str = "WARNING"):
        self.log_dir = Path(log_dir) if log_dir else None
        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)
        self.level = logging.getLevelName(level.upper()) if isinstance(level, str) else level
        if not isinstance(self.level, int):
            raise ConfigError(f"unknown log level '{level}'")

        self._configure_root_logger()

        self._component_loggers: Dict[str, logging.Logger] = {}
        self._error_counts: Dict[str, int] = {}
        self._last_errors: Dict[str, Dict[str, Any]] = {}
        self._metrics: List[Dict[str, Any]] = []

    def _configure_root_logger(self):
        root_logger = logging.getLogger()
        root_logger.setLevel(self.level)
        root_logger.handlers.clear()

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        console_handler.setLevel(self.level)
        root_logger.addHandler(console_handler)

        if self.log_dir is not None:
            log_file = self.log_dir / f"negtrans_{datetime.now().strftime('%Y%m%d')}.log"
            file_handler = logging.handlers.RotatingFileHandler(
                log_file, maxBytes=10 * 1024 * 1024, backupCount=5
            )
            file_handler.setFormatter(
                logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
            )
            file_handler.setLevel(logging.DEBUG)
            root_logger.addHandler(file_handler)

    def get_logger(self, component: str) -> logging.Logger:
        if component not in self._component_loggers:
            self._component_loggers[component] = logging.getLogger(f"negtrans.{component}")
        return self._component_loggers[component]

    def log_error(
        self, component: str, error: BaseException, context: Optional[Dict[str, Any]] = None
    ):
        """Log an error and count it per component and type."""
        logger = self.get_logger(component)
        error_entry = {
            "timestamp": datetime.now().isoformat(),
            "type": type(error).__name__,
            "message": str(error),
            "traceback": "".join(
                traceback.format_exception(type(error), error, error.__traceback__)
            ),
            "context": context or {},
        }
        error_key = f"{component}:{type(error).__name__}"
        self._error_counts[error_key] = self._error_counts.get(error_key, 0) + 1
        self._last_errors[error_key] = error_entry
        logger.error(f"Error in {component}: {error}", extra={"error_details": error_entry})

    def get_error_stats(self) -> Dict[str, Any]:
        return {
            "total_errors": sum(self._error_counts.values()),
            "error_counts": dict(self._error_counts),
            "last_errors": dict(self._last_errors),
        }

    def clear_error_stats(self):
        self._error_counts.clear()
        self._last_errors.clear()

    def log_metric(
        self,
        component: str,
        metric_name: str,
        value: Any,
        tags: Optional[Dict[str, str]] = None,
    ):
        metric_entry = {
            "timestamp": datetime.now().isoformat(),
            "component": component,
            "metric": metric_name,
            "value": value,
            "tags": tags or {},
        }
        self._metrics.append(metric_entry)
        self.get_logger(component).info(
            f"Metric: {metric_name} = {value} {json.dumps(tags or {}, sort_keys=True)}",
            extra={"metric_details": metric_entry},
        )

    def get_metrics(self, metric_name: Optional[str] = None) -> List[Dict[str, Any]]:
        return [m for m in self._metrics if metric_name in (None, m["metric"])]

    def log_event(
        self,
        component: str,
        event_type: str,
        message: str,
        data: Optional[Dict[str, Any]] = None,
    ):
        event_entry = {
            "timestamp": datetime.now().isoformat(),
            "component": component,
            "type": event_type,
            "message": message,
            "data": data or {},
        }
        self.get_logger(component).info(
            f"Event: {event_type} - {message}", extra={"event_details": event_entry}
        )

    def get_log_files(self) -> list:
        if self.log_dir is None:
            return []
        return sorted(self.log_dir.glob("*.log"), key=lambda x: x.stat().st_mtime, reverse=True)


# Singleton instance
_log_manager: Optional[LogManager] = None


def get_log_manager() -> LogManager:
    """Get or create the singleton log manager instance"""
    global _log_manager
    if _log_manager is None:
        _log_manager = LogManager()
    return _log_manager


def init_logging(config=None) -> LogManager:
    """(Re)build the singleton from a configuration's LOG_LEVEL and LOG_DIR."""
    global _log_manager
    level = getattr(config, "LOG_LEVEL", "WARNING")
    log_dir = getattr(config, "LOG_DIR", None)
    _log_manager = LogManager(log_dir, level)
    _log_manager.get_logger("system").debug("Logging system initialized")
    return _log_manager
