# api_logger.py
"""
Command logging system
Logs every command run with run id, command, input source, exit code and duration
Writes to stderr (stdout carries the JSON report) and optionally to a rotating file
"""

import json
import logging
import os
import sys
import uuid
from datetime import datetime
from logging.handlers import RotatingFileHandler


class CommandLogger:
    """Logging for orbk command runs"""

    def __init__(self, log_file=None, log_level=logging.WARNING):
        """
        Initialize command logger

        Args:
            log_file: Path to a log file (optional; stderr only when omitted)
            log_level: Python logging level or level name
        """
        self.log_file = log_file
        self.log_level = logging.getLevelName(log_level.upper()) if isinstance(log_level, str) else log_level
        self.logger = logging.getLogger('orbk')
        self.run_id = self.generate_run_id()
        self.started_at = None
        self.command = None
        self.setup_logger()

    def setup_logger(self):
        """Setup logging handlers"""
        self.logger.handlers.clear()
        self.logger.setLevel(self.log_level)
        self.logger.propagate = False

        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        # stderr only: stdout is the report
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(self.log_level)
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

        if self.log_file:
            log_dir = os.path.dirname(self.log_file)
            if log_dir and not os.path.exists(log_dir):
                os.makedirs(log_dir)
            file_handler = RotatingFileHandler(
                self.log_file,
                maxBytes=10485760,  # 10MB
                backupCount=10
            )
            file_handler.setLevel(self.log_level)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

        # library modules log under their own names; route them through the same handlers
        for name in ('model', 'services', 'api'):
            library = logging.getLogger(name)
            library.handlers = list(self.logger.handlers)
            library.setLevel(self.log_level)
            library.propagate = False

    def log_command_start(self, command, source=None):
        """Log command start"""
        self.started_at = datetime.utcnow()
        self.command = command
        self.logger.info(f'[{self.run_id}] START {command} - Input: {source or "none"}')

    def log_command_end(self, exit_code):
        """Log command end with duration; exit 1 logs at ERROR, exit 2 at WARNING"""
        try:
            duration = (datetime.utcnow() - self.started_at).total_seconds() if self.started_at else 0.0
            if exit_code == 1:
                level = logging.ERROR
            elif exit_code >= 2:
                level = logging.WARNING
            else:
                level = logging.INFO
            self.logger.log(
                level,
                f'[{self.run_id}] END {self.command} - Exit: {exit_code} - Duration: {duration:.3f}s'
            )
        except Exception as e:
            self.logger.error(f'Error logging command end: {str(e)}')

    def log_error(self, error, context=None):
        """
        Log an error with context

        Args:
            error: Exception or error message
            context: Additional context dict
        """
        try:
            context_str = json.dumps(context, default=str) if context else ''
            self.logger.error(
                f'[{self.run_id}] ERROR in {self.command or "unknown"} - '
                f'Error: {str(error)} - '
                f'Context: {context_str}'
            )
        except Exception as e:
            self.logger.error(f'Error logging error: {str(e)}')

    def log_verification(self, report):
        """
        Log the outcome of a verification report

        Args:
            report: VerificationReport
        """
        failures = report.failures
        if failures:
            for check in failures:
                self.logger.error(
                    f'[{self.run_id}] CHECK FAILED {report.subject}: {check.name} - '
                    f'{check.detail} - Counterexample: {check.counterexample}'
                )
        else:
            self.logger.debug(f'[{self.run_id}] {report.subject}: {len(report.checks)} checks passed')

    @staticmethod
    def generate_run_id():
        """Generate unique run ID"""
        return str(uuid.uuid4())[:8]


# Global logger instance
command_logger = CommandLogger()


def setup_command_logging(log_level=logging.WARNING, log_file=None):
    """
    Setup command logging for one orbk run

    Args:
        log_level: Level name or number
        log_file: Path to log file (optional)
    """
    global command_logger
    command_logger = CommandLogger(log_file=log_file, log_level=log_level)
    return command_logger
