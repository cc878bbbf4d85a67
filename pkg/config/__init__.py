"""Configuration module for torus-monodromy."""

from .settings import load_config, get_config, reload_config, output_format
from .defaults import get_default_config
from .validation import validate_config, is_config_valid

__all__ = ['load_config', 'get_config', 'reload_config', 'output_format', 'get_default_config',
           'validate_config', 'is_config_valid']
