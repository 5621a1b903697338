import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from cerberus import Validator

from stringye.errors import InvalidConfig

CONFIG_DIR = Path(__file__).parent
DEFAULT_CONFIG = CONFIG_DIR / "default_config.yaml"
CONFIG_SCHEMA = CONFIG_DIR / "config_schema.yaml"


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigValidator(Validator):
    def _normalize_coerce_integer(self, value):
        return int(value)


class Config:
    """Packaged defaults, overridden key by key by an optional user YAML file."""

    def __init__(self, config_file=None, config_schema=CONFIG_SCHEMA):
        self.config_file = config_file
        self.config_schema = config_schema
        self.config = None
        self._read_config()
        self._validate_config()

    def _replace_env_vars(self, data):
        if isinstance(data, str):
            if data.startswith("env."):
                # replace env. prefix with actual env var
                return os.getenv(data[4:], data)
            return data

        if isinstance(data, list):
            return [self._replace_env_vars(item) for item in data]

        if isinstance(data, dict):
            return {key: self._replace_env_vars(value) for key, value in data.items()}

        return data

    @staticmethod
    def _load_yaml(path) -> Any:
        try:
            with Path(path).expanduser().resolve().open() as f:
                return yaml.safe_load(f)
        except FileNotFoundError as err:
            raise InvalidConfig(f"config file '{path}' does not exist") from err
        except yaml.YAMLError as err:
            raise InvalidConfig(f"cannot parse config file '{path}': {err}") from err

    def _read_config(self):
        self.config = self._load_yaml(DEFAULT_CONFIG)
        if self.config_file:
            user = self._load_yaml(self.config_file) or {}
            if not isinstance(user, dict):
                raise InvalidConfig(f"config file '{self.config_file}' must contain a mapping")
            self.config = _merge(self.config, user)
        self.config = self._replace_env_vars(self.config)

    def _validate_config(self):
        schema = self._load_yaml(self.config_schema)
        v = ConfigValidator(schema)
        if not v.validate(self.config):
            raise InvalidConfig(f"Config validation errors: {v.errors}")
        self.config = v.document

    @property
    def max_variables(self) -> int:
        return self.config["limits"]["max_variables"]

    @property
    def default_max_degree(self) -> int:
        return self.config["series"]["default_max_degree"]

    @property
    def log_level(self) -> str:
        return self.config["logging"]["level"]

    @property
    def log_file(self) -> Optional[str]:
        return self.config["logging"].get("file")
