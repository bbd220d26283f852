import tomllib
from pathlib import Path

import yaml

from bilin_tf.errors import ConfigError

YAML_SUFFIXES = {".yml", ".yaml"}
TOML_SUFFIXES = {".toml"}


def try_read_yaml(file_path: Path) -> dict | None:
    try:
        suffix = file_path.suffix.lower()
        if suffix not in YAML_SUFFIXES:
            return None
        alternate_suffix = ".yaml" if suffix == ".yml" else ".yml"
        alternate_path = file_path.with_suffix(alternate_suffix)
        if file_path.exists():
            return yaml.safe_load(file_path.read_text()) or {}
        if alternate_path.exists():
            return yaml.safe_load(alternate_path.read_text()) or {}
    except yaml.YAMLError:
        return None
    return None


def try_read_toml(file_path: Path) -> dict | None:
    if file_path.suffix.lower() not in TOML_SUFFIXES or not file_path.exists():
        return None
    try:
        return tomllib.loads(file_path.read_text())
    except tomllib.TOMLDecodeError:
        return None


def read_experiment_file(file_path: Path) -> dict:
    """Raw mapping from a TOML or YAML experiment file."""
    suffix = file_path.suffix.lower()
    if suffix in TOML_SUFFIXES:
        data = try_read_toml(file_path)
    elif suffix in YAML_SUFFIXES:
        data = try_read_yaml(file_path)
    else:
        raise ConfigError(f"{file_path}: unsupported config format {suffix!r} (use .toml or .yaml)")
    if data is None:
        raise ConfigError(f"{file_path}: missing or unreadable config file")
    if not isinstance(data, dict):
        raise ConfigError(f"{file_path}: top level must be a table, got {type(data).__name__}")
    return data
