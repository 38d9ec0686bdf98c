import datetime
import os
import re
from typing import Optional

from l1lab.core.interfaces import IModule
from l1lab.core.core_apis import CoreLoggerAPI, CoreConfigAPI
from l1lab.core.hook_types import LabHook
from l1lab.core.log import should_log, _FallbackConfig


class Colors:
    """ANSI color codes for terminal output."""
    RESET = '\033[0m'

    BLACK = '\033[30m'
    RED = '\033[31m'
    GREEN = '\033[32m'
    YELLOW = '\033[33m'
    BLUE = '\033[34m'
    MAGENTA = '\033[35m'
    CYAN = '\033[36m'
    WHITE = '\033[37m'

    BRIGHT_BLACK = '\033[90m'
    BRIGHT_RED = '\033[91m'
    BRIGHT_GREEN = '\033[92m'
    BRIGHT_YELLOW = '\033[93m'
    BRIGHT_BLUE = '\033[94m'
    BRIGHT_MAGENTA = '\033[95m'
    BRIGHT_CYAN = '\033[96m'
    BRIGHT_WHITE = '\033[97m'

    BG_RED = '\033[41m'
    BG_GREEN = '\033[42m'
    BG_YELLOW = '\033[43m'
    BG_BLUE = '\033[44m'


LEVEL_COLORS = {
    "ERROR": Colors.BRIGHT_RED,
    "WARNING": Colors.BRIGHT_YELLOW,
    "INFO": Colors.BRIGHT_GREEN,
    "DEBUG": Colors.BRIGHT_BLACK,
    "CORE": Colors.BRIGHT_CYAN,
}

TAG_COLORS = {
    "estimator": Colors.BRIGHT_MAGENTA,
    "controller": Colors.BRIGHT_YELLOW,
    "falsified": Colors.BRIGHT_RED,
    "experiment": Colors.BRIGHT_BLUE,
    "batch": Colors.BRIGHT_BLUE,
}

# "key=value" pairs in event lines, e.g. "t=816 I=1.3283"
_KEY_VALUE = re.compile(r'\b([A-Za-z_]+)=([-+0-9.eE]+|nan|inf)')


class AdvancedLogger(CoreLoggerAPI):
    """
    Logger with timestamps, per-level colours and tag highlighting.

    Simulation event lines carry ``key=value`` pairs; their values are
    emphasised so that long runs stay readable.
    """

    def __init__(self, config_api: Optional[CoreConfigAPI]):
        """
        Initialize advanced logger.

        Args:
            config_api: Configuration API
        """
        self.config = config_api if config_api is not None else _FallbackConfig()

    def _should_log(self, level: str, tag: Optional[str] = None) -> bool:
        return should_log(self.config, level, tag)

    def _format_event(self, message: str, text_color: str) -> str:
        return _KEY_VALUE.sub(
            lambda m: f"{m.group(1)}={Colors.BRIGHT_WHITE}{m.group(2)}{Colors.RESET}{text_color}",
            message
        )

    def log(self, message: str, level: str = "INFO", tag: Optional[str] = None,
            level_color: Optional[str] = None, text_color: Optional[str] = None,
            bracket_color: Optional[str] = None, **kwargs):
        """
        Log a message with color support.

        Args:
            message: The message to log
            level: Log level
            tag: Log tag for filtering
            level_color: Custom color for level tag (use Colors class)
            text_color: Custom color for message text (use Colors class)
            bracket_color: Custom color for timestamp brackets (use Colors class)
        """
        if not self._should_log(level, tag):
            return

        if os.name == 'nt':
            os.system('')

        _bracket_color = bracket_color or Colors.BRIGHT_GREEN
        _level_color = level_color or LEVEL_COLORS.get(level, Colors.BRIGHT_GREEN)
        if text_color:
            _text_color = text_color
        elif level == "ERROR":
            _text_color = Colors.BRIGHT_RED
        else:
            _text_color = Colors.BRIGHT_WHITE
        _tag_color = TAG_COLORS.get(tag, _text_color)

        timestamp = datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        str_time = f"{_bracket_color}[{timestamp}]{Colors.RESET} "
        str_header = f"{_level_color}[{level}]{Colors.RESET} "

        formatted = message if text_color else self._format_event(message, _text_color)
        if tag:
            str_message = f"{_tag_color}[{tag}]{Colors.RESET} {_text_color}{formatted}{Colors.RESET}"
        else:
            str_message = f"{_text_color}{formatted}{Colors.RESET}"

        print(f"{str_time}{str_header}\t{str_message}")


class SystemLoggerModule(IModule):
    """
    System logger module.

    Publishes an AdvancedLogger as ``core_logger`` and reports every
    started module at DEBUG level.
    """

    async def load(self, context):
        self.context = context
        my_logger = AdvancedLogger(context.services.get("core_config"))
        context.services.set("core_logger", my_logger)
        context.services.set("log_colors", Colors)

        lab = context.get_lab()
        if lab is not None:
            lab.register_hook(LabHook.ON_MODULE_LOADED, self._on_module_loaded)

    async def start(self, context):
        # settings may have been replaced after load
        logger = context.services.get("core_logger")
        if isinstance(logger, AdvancedLogger):
            logger.config = context.services.get("core_config") or logger.config
        logger.log("System Logger Module Active.", level="DEBUG", tag="system")

    def _on_module_loaded(self, module_instance):
        logger = self.context.services.get("core_logger")
        logger.log(f"Module started: {module_instance.name}", level="DEBUG", tag="core")
