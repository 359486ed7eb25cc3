from .cache import ResultCache, default_cache_dir
from .io import dump_json, dumps_json, load_json, load_yaml, progress_bar
from .logging import LOG_FILENAME, logger

__all__ = [
    "default_cache_dir",
    "dump_json",
    "dumps_json",
    "load_json",
    "load_yaml",
    "logger",
    "LOG_FILENAME",
    "progress_bar",
    "ResultCache",
]
