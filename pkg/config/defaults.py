"""Default configuration values for torus-monodromy."""


def get_default_config():
    """Get default configuration if config.json is not available."""
    return {
        "output": {
            "format": "text"
        },
        "logging": {
            "level": "WARNING"
        },
        "fuzz": {
            "trials": 100,
            "max_moves": 30,
            "seed": 0,
            "workers": 1,
            "conjugation_power_bound": 5
        },
        "classifier": {
            "normalize_max_depth": 12,
            "normalize_sum_factor": 8
        },
        "markov": {
            "enumeration_bound": 100
        },
        "auroux": {
            "table_limit": 50
        }
    }
