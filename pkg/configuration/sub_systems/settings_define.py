from dataclasses import dataclass
from typing import Type, Any

from utils.logger import get_logger

logger = get_logger("SettingsDefine")


@dataclass
class ConfigDefinition:
    name: str
    type: Type
    default: Any
    description: str = ""
    validator: callable = None


class SettingsDefine:

    def _define(self, name: str, type_: Type, default: Any, description: str, validator: callable):
        self._config_definitions[name] = ConfigDefinition(
            name=name, type=type_, default=default, description=description, validator=validator
        )

    def _define_settings(self):
        """Define all config settings with clean defaults"""
        logger.debug("Defining configuration settings")

        # Arithmetic limits
        self._define(
            "factor_trial_bound", int, 10 ** 6,
            "Largest prime tried when factoring ideal norms",
            lambda x: self._validate_int_range(x, 100, 10 ** 9),
        )
        self._define(
            "discriminant_bound", int, 10 ** 5,
            "Largest field discriminant accepted by the class group computation",
            lambda x: self._validate_int_range(x, 5, 10 ** 7),
        )
        self._define(
            "tp_search_step", float, 0.5,
            "Logarithmic step of the metric scan used to find ideal generators",
            lambda x: self._validate_float_range(x, 0.01, 1.3),
        )
        self._define(
            "mp_dps", int, 60,
            "Decimal digits used by mpmath for real embeddings",
            lambda x: self._validate_int_range(x, 30, 1000),
        )

        # Theta and verification defaults
        self._define(
            "default_trace_bound", int, 10,
            "Trace cutoff for q-expansions when --bound is omitted",
            lambda x: self._validate_int_range(x, 1, 10 ** 6),
        )
        self._define(
            "default_tol", float, 1e-6,
            "Relative error accepted by the transformation suite",
            lambda x: self._validate_float_range(x, 1e-15, 1.0),
        )
        self._define(
            "eval_tol", float, 1e-13,
            "Relative tail tolerance for theta evaluation inside verification",
            lambda x: self._validate_float_range(x, 1e-16, 1e-3),
        )
        self._define(
            "default_seed", int, 0,
            "Seed for the randomized suites",
            lambda x: self._validate_int_range(x, 0, 2 ** 63 - 1),
        )
        self._define(
            "transform_words", int, 50,
            "Number of random generator words per verification run",
            lambda x: self._validate_int_range(x, 1, 10 ** 5),
        )
        self._define(
            "transform_points", int, 5,
            "Evaluation points per generator word",
            lambda x: self._validate_int_range(x, 1, 1000),
        )
        self._define(
            "word_length", int, 6,
            "Maximum length of a random generator word",
            lambda x: self._validate_int_range(x, 1, 64),
        )
        self._define(
            "max_denominator", int, 40,
            "Words whose lower-left entry exceeds this at some embedding are resampled",
            lambda x: self._validate_int_range(x, 1, 10 ** 6),
        )
        self._define(
            "max_word_draws", int, 20000,
            "Random words drawn at most while filling a verification run with well-conditioned ones",
            lambda x: self._validate_int_range(x, 1, 10 ** 7),
        )
        self._define(
            "max_lattice_points", int, 2 * 10 ** 6,
            "Hard limit on lattice points visited by a single enumeration",
            lambda x: self._validate_int_range(x, 1000, 10 ** 9),
        )

        # Runtime
        self._define(
            "max_cache_entries", int, 256,
            "Maximum number of entries in the computation cache",
            lambda x: self._validate_int_range(x, 1, 1000000),
        )
        self._define(
            "log_level", str, "WARNING",
            "Level applied to every library logger",
            self._validate_log_level,
        )
        logger.debug(f"Defined {len(self._config_definitions)} configuration settings")
