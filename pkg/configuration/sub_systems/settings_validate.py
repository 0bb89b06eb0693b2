from typing import Any, Dict

from utils.logger import get_logger

logger = get_logger("SettingsValidater")

LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class SettingsValidater:
    def _validate_int_range(self, value: Any, low: int, high: int) -> bool:
        """Validate an integer setting inside [low, high]"""
        if isinstance(value, bool) or not isinstance(value, int):
            logger.warning(f"Integer validation failed: {value!r} is not an int")
            return False
        if not low <= value <= high:
            logger.warning(f"Integer validation failed: {value} outside [{low}, {high}]")
            return False
        return True

    def _validate_float_range(self, value: Any, low: float, high: float) -> bool:
        """Validate a numeric setting inside [low, high]; ints are accepted"""
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            logger.warning(f"Float validation failed: {value!r} is not a number")
            return False
        if not low <= value <= high:
            logger.warning(f"Float validation failed: {value} outside [{low}, {high}]")
            return False
        return True

    def _validate_log_level(self, value: Any) -> bool:
        if not (isinstance(value, str) and value.upper() in LOG_LEVELS):
            logger.warning(f"Log level validation failed: {value!r}")
            return False
        return True

    def _validate_and_load(self, file_config: Dict[str, Any]):
        """Check every known key, fill defaults, and reject the whole file on any error"""
        errors = []
        values = {}
        for key, definition in self._config_definitions.items():
            value = file_config.get(key, definition.default)
            if definition.type is float and isinstance(value, int) and not isinstance(value, bool):
                value = float(value)
            if definition.validator and not definition.validator(value):
                errors.append(f"{key}={value!r}")
                continue
            values[key] = value

        unknown = sorted(set(file_config) - set(self._config_definitions))
        if unknown:
            logger.warning(f"Ignoring unknown configuration keys: {unknown}")

        if errors:
            raise ValueError(f"Invalid configuration values: {', '.join(errors)}")

        self._values = values
        logger.debug(f"Validated {len(values)} configuration values")
