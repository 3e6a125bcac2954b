#!/usr/bin/env python3
"""
Configuration Loader for the Network Dictionary Toolkit
YAML defaults, user overrides and the solver settings derived from them
"""

import os
from typing import Any, Dict, Optional

import yaml

from core.functions.utils import log_warning

DEFAULT_CONFIG_DIR = os.path.join(os.path.dirname(__file__), '..', '..', 'config')

BUILTIN_DEFAULTS: Dict[str, Dict[str, Any]] = {
    "sampling": {
        "mcmc": "pivotapprox",
        "max_rejections": 10000,
        "init_retry_factor": 10,
        "existence_check_budget": 100000},
    "factorization": {
        "code_iterations": 100,
        "code_tolerance": 1.0e-8,
        "dictionary_sweeps": 5},
    "learning": {
        "k": 21,
        "r": 25,
        "T": 100,
        "N": 100,
        "lambda": 1.0},
    "reconstruction": {
        "lambda": 0.0,
        "theta": 0.4,
        "xi": 1.0,
        "chains": 1},
    "denoising": {
        "train_fraction": 0.25,
        "val_fraction": 0.25,
        "recon_T": 200000,
        "baselines": ["JaccardIndex", "PreferentialAttachment", "AdamicAdar"]},
    "enumeration": {
        "max_homomorphisms": 10000000},
    "bound": {
        "oracle_max_homomorphisms": 200000,
        "mesoscale_samples": 10000},
    "logging": {
        "directory": "logs",
        "level": "INFO"},
}


def deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Nested dict merge; override wins"""
    result = dict(base)
    for key, value in override.items():
        if isinstance(result.get(key), dict) and isinstance(value, dict):
            result[key] = deep_merge(result[key], value)
        else:
            result[key] = value
    return result


class ConfigLoader:
    """Process-wide configuration (config_defaults.yaml, then config.yaml)"""

    _instance = None
    _config = None

    def __new__(cls, config_dir: Optional[str] = None):
        if cls._instance is None:
            cls._instance = super(ConfigLoader, cls).__new__(cls)
        return cls._instance

    def __init__(self, config_dir: Optional[str] = None):
        if self._config is None:
            directory = config_dir or os.getenv("NDL_CONFIG_DIR") or DEFAULT_CONFIG_DIR
            self.config_dir = os.path.abspath(directory)
            self.defaults_file = os.path.join(self.config_dir, "config_defaults.yaml")
            self.user_config_file = os.path.join(self.config_dir, "config.yaml")
            self.load_config()

    def load_config(self) -> Dict[str, Any]:
        if self._config is not None:
            return self._config

        defaults = self._load_yaml_file(self.defaults_file)
        if not defaults:
            log_warning(f"Could not load default config from {self.defaults_file}; using built-in values")
            defaults = BUILTIN_DEFAULTS

        user_config = self._load_yaml_file(self.user_config_file)
        for section in user_config:
            if section not in BUILTIN_DEFAULTS:
                log_warning(f"Ignoring unknown config section '{section}' in {self.user_config_file}")

        self._config = deep_merge(defaults, user_config)
        return self._config

    def _load_yaml_file(self, filepath: str) -> Dict[str, Any]:
        try:
            with open(filepath, 'r') as f:
                loaded = yaml.safe_load(f) or {}
        except FileNotFoundError:
            return {}
        except yaml.YAMLError as e:
            log_warning(f"Error parsing YAML file {filepath}: {e}")
            return {}
        if not isinstance(loaded, dict):
            log_warning(f"{filepath} does not hold a mapping; ignoring it")
            return {}
        return loaded

    def get(self, key_path: str, default=None) -> Any:
        """Dot-notation lookup, e.g. 'learning.k'"""
        value = self.load_config()
        for key in key_path.split('.'):
            if not isinstance(value, dict) or key not in value:
                return default
            value = value[key]
        return value

    def get_section(self, section: str) -> Dict[str, Any]:
        return dict(self.get(section, {}) or {})

    def solver_settings(self) -> Dict[str, Any]:
        """Sampler and coder limits shared by learning and reconstruction"""
        return {
            "max_rejections": int(self.get("sampling.max_rejections", 10000)),
            "code_iterations": int(self.get("factorization.code_iterations", 100)),
            "code_tolerance": float(self.get("factorization.code_tolerance", 1e-8)),
        }

    def learning_settings(self) -> Dict[str, Any]:
        """solver_settings plus the options only learning uses"""
        settings = self.solver_settings()
        settings["dictionary_sweeps"] = int(self.get("factorization.dictionary_sweeps", 5))
        settings["existence_check_budget"] = int(self.get("sampling.existence_check_budget", 100000))
        return settings

    def reload(self):
        self._config = None
        self.load_config()


_config_loader = None


def get_config() -> ConfigLoader:
    """Get the global configuration loader instance"""
    global _config_loader
    if _config_loader is None:
        _config_loader = ConfigLoader()
    return _config_loader
