import json
import os
from typing import Any, Optional

from utils.logger import get_logger

logger = get_logger("SettingsUpdate")


class SettingsUpdate:
    def save_config(self, path: Optional[str] = None):
        """Save current configuration to a JSON file"""
        target = path or self.config_path
        logger.info(f"Saving configuration to: {target}")
        try:
            if os.path.isdir(target):
                logger.warning(f"Cannot save to directory path: {target}. Skipping save operation.")
                return

            with open(target, 'w', encoding='utf-8') as f:
                json.dump(self._values, f, indent=2, ensure_ascii=False)
            logger.debug(f"Configuration saved successfully with {len(self._values)} values")
        except Exception as e:
            logger.error(f"Failed to save configuration: {e}", exc_info=True)
            raise

    def update_value(self, key: str, value: Any, persist: bool = False):
        """Validate and set one setting, then notify listeners"""
        logger.info(f"Updating {key} to: {value!r}")
        try:
            definition = self._config_definitions.get(key)
            if definition is None:
                raise KeyError(f"Unknown configuration key: {key}")
            if definition.validator and not definition.validator(value):
                raise ValueError(f"Invalid value for {key}: {value!r}")
            self._values[key] = value
            if persist:
                self.save_config()
            self._notify_callbacks()
        except Exception as e:
            logger.error(f"Failed to update {key}: {e}", exc_info=True)
            raise

    def reset_defaults(self):
        self._values = {key: d.default for key, d in self._config_definitions.items()}
        self._notify_callbacks()

    def _notify_callbacks(self):
        for callback in self._callbacks:
            try:
                callback(self._values)
            except Exception as e:
                logger.error(f"Configuration callback {getattr(callback, '__name__', callback)} failed: {e}",
                             exc_info=True)
