#!/usr/bin/env python3
"""
Settings
Configuration from config/config.yaml overridden by INDUCED3LIE_* environment variables
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from cachetools import LRUCache, cached
from dotenv import load_dotenv
from pydantic import ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.errors import ConfigurationError

load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = Path(__file__).resolve().parent.parent / "config" / "config.yaml"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
OUTPUT_FORMATS = ("human", "machine")

# yaml section -> key -> field
SECTIONS = {
    "logging": {
        "level": "log_level",
        "format": "log_format",
        "file": "log_file",
        "json": "log_json",
        "max_size": "log_max_size",
        "backup_count": "log_backup_count",
    },
    "output": {
        "format": "output_format",
        "table_format": "table_format",
    },
    "engine": {
        "property_examples": "property_examples",
    },
}


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="INDUCED3LIE_", extra="ignore")

    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    log_file: Optional[str] = None
    log_json: bool = True
    log_max_size: int = 10485760
    log_backup_count: int = 5
    output_format: str = "human"
    table_format: str = "grid"
    property_examples: int = 50

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}")
        return value

    @field_validator("output_format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in OUTPUT_FORMATS:
            raise ValueError(f"output format must be one of {', '.join(OUTPUT_FORMATS)}")
        return value


def _flatten_yaml(data: Dict[str, Any]) -> Dict[str, Any]:
    flat = {}
    for section, keys in SECTIONS.items():
        values = data.get(section) or {}
        if not isinstance(values, dict):
            raise ConfigurationError(f"config section '{section}' must be a mapping")
        for key, field in keys.items():
            if key in values and values[key] is not None:
                flat[field] = values[key]
    return flat


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Read the yaml file, then let environment variables win

    Raises:
        ConfigurationError: unreadable file or invalid value
    """
    path = Path(config_path or os.getenv("INDUCED3LIE_CONFIG", str(DEFAULT_CONFIG)))
    file_values: Dict[str, Any] = {}
    if path.exists():
        try:
            file_values = _flatten_yaml(yaml.safe_load(path.read_text(encoding="utf-8")) or {})
        except yaml.YAMLError as e:
            raise ConfigurationError(f"cannot parse {path}: {e}")
    elif config_path:
        raise ConfigurationError(f"config file {path} not found")
    try:
        from_env = Settings()
        explicit = from_env.model_dump(include=from_env.model_fields_set)
        settings = Settings(**{**file_values, **explicit})
    except ValidationError as e:
        raise ConfigurationError(f"invalid settings: {e.errors()[0]['loc'][0]}: {e.errors()[0]['msg']}")
    logger.debug(f"settings loaded from {path if path.exists() else 'defaults'}")
    return settings


@cached(cache=LRUCache(maxsize=8))
def get_settings(config_path: Optional[str] = None) -> Settings:
    return load_settings(config_path)
