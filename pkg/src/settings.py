"""Application settings management.

Built-in defaults, optionally overlaid by a JSON file passed with --config.
Command-line flags take precedence over both (see EstimatorBuilder).
"""

import json
from pathlib import Path
from typing import Optional, Union

from src.errors import ConfigError


# key -> accepted JSON types
_FIELDS = {
    'baseline_bits': (int,),
    'baseline_hours': (int, float),
    'baseline_year': (int,),
    'baseline_month': (int,),
    'doubling_months': (int, float),
    'margin': (int, float),
    'mode': (str,),
    'round_to_standard': (bool,),
    'seed': (int,),
    'output_format': (str,),
    'records_file': (str, type(None)),
    'break_max_steps': (int,),
    'bench_timeout_seconds': (int, float),
    'bench_workers': (int,),
}

OUTPUT_FORMATS = ('table', 'csv', 'json')


class Settings:
    """Application settings with typed defaults."""

    def __init__(self, **overrides):
        # Baseline factoring run
        self.baseline_bits: int = 512
        self.baseline_hours: float = 4.0
        self.baseline_year: int = 2015
        self.baseline_month: int = 1

        # Compute-power growth
        self.doubling_months: float = 18.0

        # Key-size queries
        self.margin: float = 1.0
        self.mode: str = 'end-of-life'
        self.round_to_standard: bool = False

        # Output
        self.seed: int = 0
        self.output_format: str = 'table'
        self.records_file: Optional[str] = None

        # RSA lab
        self.break_max_steps: int = 50_000_000
        self.bench_timeout_seconds: float = 30.0
        self.bench_workers: int = 1

        self.update(overrides)

    def update(self, values: dict) -> None:
        """Apply key/value overrides, rejecting unknown keys and wrong types."""
        for key, value in values.items():
            if key not in _FIELDS:
                raise ConfigError(f"unknown setting {key!r}")
            types = _FIELDS[key]
            # bool is an int subclass; only accept it where bool is declared
            if not isinstance(value, types) or (isinstance(value, bool) and bool not in types):
                raise ConfigError(f"setting {key!r} must be {self._type_names(types)}, got {value!r}")
            if float in types and isinstance(value, int):
                value = float(value)
            setattr(self, key, value)
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")

    @staticmethod
    def _type_names(types: tuple) -> str:
        return ' or '.join('null' if t is type(None) else t.__name__ for t in types)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> 'Settings':
        """Load a JSON object of overrides.

        Raises:
            ConfigError: Unreadable file, invalid JSON, a non-object document,
                unknown keys or wrongly typed values.
        """
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding='utf-8'))
        except OSError as e:
            raise ConfigError(f"cannot read config file {path}: {e}") from None
        except json.JSONDecodeError as e:
            raise ConfigError(f"config file {path} is not valid JSON: {e}") from None
        if not isinstance(data, dict):
            raise ConfigError(f"config file {path} must hold a JSON object")
        return cls(**data)

    def __repr__(self) -> str:
        return (
            f"Settings("
            f"baseline=RSA-{self.baseline_bits}@{self.baseline_hours}h/"
            f"{self.baseline_year}-{self.baseline_month:02d}, "
            f"doubling={self.doubling_months}mo, "
            f"margin={self.margin}, "
            f"mode={self.mode}, "
            f"seed={self.seed})"
        )

    def to_dict(self) -> dict:
        """Return all settings as a dictionary."""
        return {key: getattr(self, key) for key in _FIELDS}


# Global settings instance
settings = Settings()
