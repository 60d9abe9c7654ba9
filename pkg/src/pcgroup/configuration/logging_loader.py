""" Python logging configuration with colored output. """

import logging
from colorama import init as colorama_init, Fore, Style # type: ignore

class ColorFormatter(logging.Formatter):
    """ Colors the level name by severity; the rest of the line stays plain. """
    LEVEL_COLORS = {
        logging.DEBUG: Fore.BLUE,
        logging.INFO: Fore.GREEN,
        logging.WARNING: Fore.YELLOW,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.MAGENTA,
    }

    def __init__(self) -> None:
        super().__init__("[%(levelname)s] %(asctime)s - %(name)s - %(message)s", datefmt="%H:%M:%S")

    def format(self, record: logging.LogRecord) -> str:
        color = self.LEVEL_COLORS.get(record.levelno, "")
        plain = record.levelname
        record.levelname = f"{color}{plain}{Style.RESET_ALL}"
        try:
            return super().format(record)
        finally:
            record.levelname = plain


def configure_logging(level: int | str = logging.INFO) -> None:
    """Configure the root logger with a single stderr handler and our formatter."""
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    colorama_init(autoreset=False)
    root = logging.getLogger()
    root.setLevel(level)

    handlers = [h for h in root.handlers if isinstance(h, logging.StreamHandler)]
    if not handlers:
        ch = logging.StreamHandler()
        ch.setFormatter(ColorFormatter())
        root.addHandler(ch)
        handlers = [ch]
    for h in handlers:
        h.setLevel(level)

    logging.getLogger("sympy").setLevel(logging.WARNING)
