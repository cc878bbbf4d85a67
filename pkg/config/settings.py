"""Configuration management for torus-monodromy.

Settings come from ``config.json`` at the repository root, or from the file
named by ``CONFIG_FILE``. The file is validated and merged section by section
over the built-in defaults; any problem falls back to the defaults, so the
kernel always runs with a complete configuration.
"""

import os
import json
import logging
from typing import Dict, Any, Optional
from .defaults import get_default_config
from .validation import validate_config, OUTPUT_FORMATS

logger = logging.getLogger(__name__)

CONFIG_ENV = 'CONFIG_FILE'
FORMAT_ENV = 'TORUS_MONODROMY_FORMAT'
DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'config.json')

# Global configuration instance
_config = None


def config_path() -> str:
    return os.environ.get(CONFIG_ENV) or DEFAULT_CONFIG_PATH


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """Read, validate and merge the settings file at ``path`` (default: config_path())."""
    path = path or config_path()
    try:
        with open(path, 'r') as f:
            user = json.load(f)
    except FileNotFoundError:
        logger.debug(f"No settings file at {path}; using defaults")
        return get_default_config()
    except json.JSONDecodeError as e:
        logger.error(f"Settings file {path} is not valid JSON ({e}); using defaults")
        return get_default_config()
    except OSError as e:
        logger.error(f"Cannot read settings file {path} ({e.strerror or e}); using defaults")
        return get_default_config()

    errors = validate_config(user)
    if errors:
        logger.error(f"Settings file {path} rejected: {'; '.join(errors)}")
        logger.warning("Using default configuration")
        return get_default_config()

    config = _merge_sections(get_default_config(), user)
    logger.debug(f"Settings loaded from {path}")
    return config


def _merge_sections(defaults: Dict[str, Any], user: Dict[str, Any]) -> Dict[str, Any]:
    """Overlay each known section of ``user`` onto the defaults; unknown sections are dropped."""
    merged = {name: dict(section) for name, section in defaults.items()}
    for name, section in user.items():
        if name not in merged:
            logger.warning(f"Ignoring unknown settings section '{name}'")
            continue
        merged[name].update(section)
    return merged


def get_config() -> Dict[str, Any]:
    """Get the current configuration, loading it if necessary."""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reload_config(path: Optional[str] = None) -> Dict[str, Any]:
    """Drop the cached configuration and load it again."""
    global _config
    _config = load_config(path)
    return _config


def output_format() -> str:
    """Default output format: the environment override, else output.format."""
    fmt = os.environ.get(FORMAT_ENV)
    if fmt:
        if fmt in OUTPUT_FORMATS:
            return fmt
        logger.warning(f"Ignoring {FORMAT_ENV}={fmt!r}; expected one of {', '.join(OUTPUT_FORMATS)}")
    return get_config().get('output', {}).get('format', 'json')
