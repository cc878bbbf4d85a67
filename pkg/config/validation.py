"""Configuration validation for torus-monodromy."""

import logging
from typing import Dict, Any, List

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('json', 'text')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')
SECTIONS = ('output', 'logging', 'fuzz', 'classifier', 'markov', 'auroux')


def _positive_int(section: Dict[str, Any], key: str, prefix: str, allow_zero: bool = False) -> List[str]:
    if key not in section:
        return []
    value = section[key]
    lowest = 0 if allow_zero else 1
    if not isinstance(value, int) or isinstance(value, bool) or value < lowest:
        kind = "a non-negative" if allow_zero else "a positive"
        return [f"'{prefix}.{key}' must be {kind} integer"]
    return []


def validate_output_config(config: Dict[str, Any]) -> List[str]:
    """Validate output and logging sections and return list of errors."""
    errors = []

    output_config = config.get('output', {})
    if 'format' in output_config and output_config['format'] not in OUTPUT_FORMATS:
        errors.append(f"Invalid output format: {output_config['format']}. Must be 'json' or 'text'")

    logging_config = config.get('logging', {})
    level = logging_config.get('level')
    if level is not None and (not isinstance(level, str) or level.upper() not in LOG_LEVELS):
        errors.append(f"Invalid logging level: {level}. Must be one of {', '.join(LOG_LEVELS)}")

    return errors


def validate_fuzz_config(config: Dict[str, Any]) -> List[str]:
    """Validate fuzz harness configuration and return list of errors."""
    errors = []

    if 'fuzz' not in config:
        return errors

    fuzz_config = config['fuzz']
    for key in ['trials', 'workers']:
        errors.extend(_positive_int(fuzz_config, key, 'fuzz'))
    for key in ['max_moves', 'seed', 'conjugation_power_bound']:
        errors.extend(_positive_int(fuzz_config, key, 'fuzz', allow_zero=True))

    return errors


def validate_search_config(config: Dict[str, Any]) -> List[str]:
    """Validate classifier, markov and auroux search limits."""
    errors = []

    classifier_config = config.get('classifier', {})
    for key in ['normalize_max_depth', 'normalize_sum_factor']:
        errors.extend(_positive_int(classifier_config, key, 'classifier'))

    errors.extend(_positive_int(config.get('markov', {}), 'enumeration_bound', 'markov'))
    errors.extend(_positive_int(config.get('auroux', {}), 'table_limit', 'auroux'))

    return errors


def validate_config(config: Dict[str, Any]) -> List[str]:
    """Validate complete configuration and return list of errors."""
    if not isinstance(config, dict):
        return ["Configuration must be a JSON object"]
    malformed = [name for name in SECTIONS if name in config and not isinstance(config[name], dict)]
    if malformed:
        return [f"Section '{name}' must be a JSON object" for name in malformed]

    errors = []
    errors.extend(validate_output_config(config))
    errors.extend(validate_fuzz_config(config))
    errors.extend(validate_search_config(config))
    return errors


def is_config_valid(config: Dict[str, Any]) -> bool:
    """Check if configuration is valid (has no errors)."""
    return len(validate_config(config)) == 0
