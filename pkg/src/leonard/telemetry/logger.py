"""
Queue-based logging to stderr.

Records are queued by the computing thread and written by a listener
thread; stdout stays reserved for reports.
"""

import logging
import sys
from datetime import datetime
from logging.handlers import QueueHandler, QueueListener
from pathlib import Path
from queue import Queue

from leonard.config.constants import LOG_DATE_FORMAT, LOG_FORMAT, MAX_LOG_QUEUE_SIZE


class MicrosecondFormatter(logging.Formatter):
    """Formatter with microsecond precision timestamps."""

    def formatTime(self, record: logging.LogRecord, datefmt: str | None = None) -> str:
        ct = datetime.fromtimestamp(record.created)
        s = ct.strftime(datefmt or LOG_DATE_FORMAT)
        return f"{s}.{int(record.msecs * 1000):06d}"


class QueuedLogger:
    """
    Logger whose handlers run on a background listener.

    Use as a context manager so the queue is drained on exit.
    """

    def __init__(
        self,
        name: str,
        level: int = logging.WARNING,
        log_file: Path | None = None,
    ) -> None:
        self._name = name
        self._level = level
        self._log_file = log_file
        self._queue: Queue[logging.LogRecord] = Queue(maxsize=MAX_LOG_QUEUE_SIZE)
        self._listener: QueueListener | None = None
        self._handler: QueueHandler | None = None
        self._logger = logging.getLogger(name)

    def start(self) -> None:
        formatter = MicrosecondFormatter(LOG_FORMAT, LOG_DATE_FORMAT)
        handlers: list[logging.Handler] = []

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        console_handler.setLevel(self._level)
        handlers.append(console_handler)

        if self._log_file:
            self._log_file.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(self._log_file)
            file_handler.setFormatter(formatter)
            file_handler.setLevel(logging.DEBUG)
            handlers.append(file_handler)

        self._handler = QueueHandler(self._queue)
        self._logger.addHandler(self._handler)
        self._logger.setLevel(logging.DEBUG if self._log_file else self._level)

        self._listener = QueueListener(self._queue, *handlers, respect_handler_level=True)
        self._listener.start()

    def stop(self) -> None:
        """Flush queued records and detach the queue handler."""
        if self._listener:
            self._listener.stop()
            self._listener = None
        if self._handler:
            self._logger.removeHandler(self._handler)
            self._handler = None

    @property
    def logger(self) -> logging.Logger:
        return self._logger

    def __enter__(self) -> "QueuedLogger":
        self.start()
        return self

    def __exit__(self, *args: object) -> None:
        self.stop()


def setup_logging(level: str = "WARNING", log_file: Path | None = None) -> QueuedLogger:
    """
    Set up package-wide logging under the ``leonard`` logger.

    Returns a started QueuedLogger; call ``stop()`` when done.
    """
    numeric_level = getattr(logging, level.upper(), logging.WARNING)

    queued = QueuedLogger(name="leonard", level=numeric_level, log_file=log_file)
    queued.start()

    # pydot logs parser chatter at DEBUG
    logging.getLogger("pydot").setLevel(logging.WARNING)

    return queued
