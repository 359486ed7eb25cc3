"""Default values of the configuration options

Every section of the YAML configuration file has its defaults here; values found in the file
replace them key by key and command-line flags replace both.
"""

from typing import Any, Dict, Mapping, Optional

import copy

from tropcount.errors import ValidationError
from tropcount.tropical.enumerate import DEFAULT_STRETCH, METHODS, ORDERS

DEFAULTS: Dict[str, Dict[str, Any]] = {
    "Admin": {
        # None means $TROPCOUNT_CACHE_DIR or the XDG cache directory
        "cache_directory": None,
        "use_cache": True,
        "jobs": 1,
    },
    "Enumeration": {
        "method": "lattice_path",
        "max_lattice_points": 64,
        "max_subdivisions": 1_000_000,
        "stretch_factor": DEFAULT_STRETCH,
        "orders": list(ORDERS),
    },
    "Render": {
        "width": 400,
        "margin": 24,
        "show_subdivision": True,
        "label_weights": True,
    },
    "Zeta": {
        "default_order_padding": 2,
    },
}


def get_defaults() -> Dict[str, Dict[str, Any]]:
    """Fresh copy of the default configuration"""
    return copy.deepcopy(DEFAULTS)


def merge_config(config: Optional[Mapping[str, Any]]) -> Dict[str, Dict[str, Any]]:
    """Defaults overridden by the sections of a loaded configuration file

    Raises
    ------
    ValidationError
        On unknown sections, unknown keys or invalid values
    """

    merged = get_defaults()
    if config is None:
        return merged
    if not isinstance(config, Mapping):
        raise ValidationError("configuration file must contain a mapping of sections")

    for section, options in config.items():
        if section not in merged:
            raise ValidationError(f"unknown configuration section `{section}`")
        if options is None:
            continue
        if not isinstance(options, Mapping):
            raise ValidationError(f"section `{section}` must be a mapping")
        for key, value in options.items():
            if key not in merged[section]:
                raise ValidationError(f"unknown option `{key}` in section `{section}`")
            merged[section][key] = value

    enumeration = merged["Enumeration"]
    if enumeration["method"] not in METHODS:
        raise ValidationError(f"unknown enumeration method `{enumeration['method']}`")
    for order in enumeration["orders"]:
        if order not in ORDERS:
            raise ValidationError(f"unknown point order `{order}`, expected {ORDERS}")
    if int(merged["Admin"]["jobs"]) < 1:
        raise ValidationError("`jobs` must be a positive integer")

    return merged
