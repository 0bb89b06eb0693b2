import json
import logging
import os
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

from configuration.sub_systems.settings_define import SettingsDefine, ConfigDefinition
from configuration.sub_systems.settings_update import SettingsUpdate
from configuration.sub_systems.settings_validate import SettingsValidater
from utils.cache import computation_cache
from utils.logger import get_logger, LoggerManager

load_dotenv()

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "settings.yaml")
config_path = os.getenv("HALFTHETA_CONFIG", DEFAULT_CONFIG_PATH)
logger = get_logger("config_system")

S = " " * 50


def format_value_for_logging(value: Any, max_single_line: int = 80) -> str:
    """Format values for logging output, pretty-printing long containers."""
    if isinstance(value, (dict, list)):
        compact_str = json.dumps(value, ensure_ascii=False)
        if len(compact_str) <= max_single_line:
            return f" {compact_str}"
        pretty_json = json.dumps(value, indent=2, ensure_ascii=False)
        indented = pretty_json.replace('\n', f'\n{S}')
        return f" \n{S}{S}{indented}"

    return f" {value}"


class ThetaConfig(SettingsValidater, SettingsDefine, SettingsUpdate):
    def __init__(self, config_path: str = config_path):
        logger.debug(f"Initializing ThetaConfig with path: {config_path}")
        self.config_path = config_path
        self._config_definitions: Dict[str, ConfigDefinition] = {}
        self._values: Dict[str, Any] = {}
        self._callbacks: List[callable] = []

        self._define_settings()
        self.load_config()

    def _load_file(self, file_path: str) -> Dict[str, Any]:
        """Load a single configuration file (JSON or YAML/YML)"""
        logger.debug(f"Loading configuration file: {file_path}")
        try:
            with open(file_path, 'r', encoding='utf-8') as f:
                if file_path.endswith(('.yaml', '.yml')):
                    config_data = yaml.safe_load(f) or {}
                elif file_path.endswith('.json'):
                    config_data = json.load(f)
                else:
                    logger.warning(f"Unsupported file format: {file_path}")
                    return {}
            if not isinstance(config_data, dict):
                raise ValueError(f"Configuration file '{file_path}' must hold a mapping")
            return config_data

        except json.JSONDecodeError as e:
            logger.error(f"Failed to parse JSON file '{file_path}': {e}", exc_info=True)
            raise
        except yaml.YAMLError as e:
            logger.error(f"Failed to parse YAML file '{file_path}': {e}", exc_info=True)
            raise

    def _merge_configs(self, base_config: Dict[str, Any], new_config: Dict[str, Any]) -> Dict[str, Any]:
        """Merge two configuration dictionaries deeply"""
        merged = base_config.copy()
        for key, value in new_config.items():
            if key in merged and isinstance(merged[key], dict) and isinstance(value, dict):
                merged[key] = self._merge_configs(merged[key], value)
            else:
                merged[key] = value
        return merged

    def load_config(self, path: Optional[str] = None):
        """Load configuration from a file or a directory of files merged in sorted order"""
        if path is not None:
            self.config_path = path
        logger.debug(f"Loading configuration from: {self.config_path}")

        if not os.path.exists(self.config_path):
            logger.warning(f"Configuration path not found, using defaults: {self.config_path}")
            self._validate_and_load({})
            self._notify_callbacks()
            return

        file_config: Dict[str, Any] = {}
        if os.path.isdir(self.config_path):
            config_files = []
            for root, _, files in os.walk(self.config_path):
                for file in files:
                    if file.endswith(('.yaml', '.yml', '.json')):
                        config_files.append(os.path.join(root, file))
            for config_file in sorted(config_files):
                file_config = self._merge_configs(file_config, self._load_file(config_file))
            logger.debug(f"Merged {len(config_files)} configuration file(s)")
        else:
            file_config = self._load_file(self.config_path)

        for key, value in file_config.items():
            logger.debug(f"Loaded key '{key}' with value:{format_value_for_logging(value)}")

        self._validate_and_load(file_config)
        self._notify_callbacks()

    def get(self, key: str) -> Any:
        return self._values.get(key, self._config_definitions[key].default)

    @property
    def factor_trial_bound(self) -> int:
        return self._values.get("factor_trial_bound", 10 ** 6)

    @property
    def discriminant_bound(self) -> int:
        return self._values.get("discriminant_bound", 10 ** 5)

    @property
    def tp_search_step(self) -> float:
        return self._values.get("tp_search_step", 0.5)

    @property
    def mp_dps(self) -> int:
        return self._values.get("mp_dps", 60)

    @property
    def default_trace_bound(self) -> int:
        return self._values.get("default_trace_bound", 10)

    @property
    def default_tol(self) -> float:
        return self._values.get("default_tol", 1e-6)

    @property
    def eval_tol(self) -> float:
        return self._values.get("eval_tol", 1e-13)

    @property
    def default_seed(self) -> int:
        return self._values.get("default_seed", 0)

    @property
    def transform_words(self) -> int:
        return self._values.get("transform_words", 50)

    @property
    def transform_points(self) -> int:
        return self._values.get("transform_points", 5)

    @property
    def word_length(self) -> int:
        return self._values.get("word_length", 6)

    @property
    def max_denominator(self) -> int:
        return self._values.get("max_denominator", 40)

    @property
    def max_word_draws(self) -> int:
        return self._values.get("max_word_draws", 20000)

    @property
    def max_lattice_points(self) -> int:
        return self._values.get("max_lattice_points", 2 * 10 ** 6)

    @property
    def max_cache_entries(self) -> int:
        """Get maximum cache entries"""
        return self._values.get("max_cache_entries", 256)

    @property
    def log_level(self) -> int:
        return getattr(logging, self._values.get("log_level", "WARNING").upper())

    def add_callback(self, callback: callable):
        """Add callback for config changes"""
        self._callbacks.append(callback)
        logger.debug(f"Added callback: {callback.__name__}. Total callbacks: {len(self._callbacks)}")
        callback(self._values)


def on_config_change(values: Dict[str, Any]):
    computation_cache.resize(values.get("max_cache_entries", 256))
    LoggerManager().set_global_level(getattr(logging, values.get("log_level", "WARNING").upper()))


config = ThetaConfig()
config.add_callback(on_config_change)
