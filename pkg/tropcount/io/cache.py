"""
Result cache module
"""

from typing import Any, Dict, Optional, Union

import hashlib
import json
import os
from pathlib import Path

from tropcount.errors import ValidationError

from .io import dump_json, load_json
from .logging import logger

CACHE_ENV = "TROPCOUNT_CACHE_DIR"
SCHEMA_VERSION = 1


def default_cache_dir() -> Path:
    """$TROPCOUNT_CACHE_DIR, else $XDG_CACHE_HOME/tropcount, else ~/.cache/tropcount"""

    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    if os.environ.get("XDG_CACHE_HOME"):
        return Path(os.environ["XDG_CACHE_HOME"]) / "tropcount"
    return Path.home() / ".cache" / "tropcount"


def _digest(data: Any) -> str:
    text = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


class ResultCache:
    """One JSON file per (polygon, delta, configuration) key

    The cache is advisory: unreadable or outdated entries are treated as misses.

    Parameters
    ----------
    directory : `str / Path`
        Cache directory, `default_cache_dir()` if not given

    enabled : `bool`
        When False every lookup misses and nothing is written
    """

    def __init__(self, directory: Optional[Union[str, Path]] = None, enabled: bool = True) -> None:
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.enabled = enabled
        logger.debug(f" ResultCache: using `{self.directory}` (enabled: {enabled})")

    @staticmethod
    def key(polygon: Dict[str, Any], delta: int, config: Dict[str, Any], method: str = "") -> str:
        return f"{_digest(polygon)}-d{delta}-{_digest({'config': config, 'method': method})}"

    def path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def load(self, key: str) -> Optional[Dict[str, Any]]:
        """Cached payload or None"""

        if not self.enabled:
            return None

        fname = self.path(key)
        if not fname.is_file():
            logger.info(f"cache miss for `{key}`")
            return None

        try:
            entry = load_json(fname)
        except ValidationError as exc:
            logger.warning(f"ignoring unreadable cache entry `{fname}`: {exc}")
            return None
        if not isinstance(entry, dict) or entry.get("schema") != SCHEMA_VERSION:
            logger.warning(f"ignoring cache entry `{fname}` with an unknown schema")
            return None

        logger.info(f"cache hit for `{key}`")
        return entry.get("payload")

    def store(self, key: str, payload: Dict[str, Any]) -> None:
        if not self.enabled:
            return
        try:
            dump_json({"schema": SCHEMA_VERSION, "key": key, "payload": payload}, self.path(key))
        except OSError as exc:
            logger.warning(f"could not write cache entry `{key}`: {exc}")
            return
        logger.debug(f" ResultCache: stored `{key}`")
