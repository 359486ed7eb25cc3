"""Input/output module"""

from typing import IO, Any, Union

import json
import sys
from pathlib import Path

import yaml

from tropcount.errors import ValidationError


def load_yaml(fname: Union[str, Path]) -> Any:
    """Load a configuration file or a data table with YAML format

    Parameters
    ----------
    fname : `str / Path`
        YAML filename

    Returns
    -------
    `yaml.safe_load`

    Raises
    ------
    ValidationError
        If the file cannot be read or parsed
    """

    try:
        with open(fname) as f:
            return yaml.safe_load(f)
    except OSError as exc:
        raise ValidationError(f"cannot read `{fname}`: {exc.strerror}") from exc
    except yaml.YAMLError as exc:
        raise ValidationError(f"`{fname}` is not valid YAML: {exc}") from exc


def load_json(fname: Union[str, Path]) -> Any:
    """Load a JSON document

    Raises
    ------
    ValidationError
        If the file cannot be read or parsed
    """

    try:
        with open(fname) as f:
            return json.load(f)
    except OSError as exc:
        raise ValidationError(f"cannot read `{fname}`: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"`{fname}` is not valid JSON: {exc}") from exc


def dumps_json(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def dump_json(data: Any, fname: Union[str, Path, IO[str]]) -> None:
    """Write `dumps_json(data)` to a file name or an open stream"""

    text = dumps_json(data)
    if hasattr(fname, "write"):
        fname.write(text)  # type: ignore[union-attr]
        return

    path = Path(fname)  # type: ignore[arg-type]
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def progress_bar(
    count: int,
    total: int,
    mark_count: int = 50,
    mark_char: str = "█",
    unmarked_char: str = ".",
    left_msg: str = "",
    right_msg: str = "",
) -> None:
    """Simple progress bar, written to stderr so that it never mixes with JSON output

    Obtained from:
    https://www.reddit.com/r/learnpython/comments/7hyyvr/python_progress_bar_used_in_conda/

    Parameters
    ----------
    count : `int`
       Iteration number

    total: `int`
       Total number of iterations to perform

    mark_count : `int`
       Length of bar

    mark_char : `misc`
       Character used for marking completion in bar

    unmarked_char : `misc`
       Same as above but for uncompleted part of bar

    left_msg : `string`
       Message of left of progress bar

    right_msg : `string`
       Message on right side of progress bar
    """

    if total <= 0:
        return

    msg_left = left_msg if len(left_msg) <= 30 else left_msg[:30]
    msg_right = right_msg if len(right_msg) <= 30 else right_msg[:30]

    bar_filled = int(round(mark_count * count / float(total)))
    percent_str = str(round(100.0 * count / float(total), 1))
    progress = mark_char * bar_filled + unmarked_char * (mark_count - bar_filled)

    sys.stderr.write(f"\r{msg_left:<21} |{progress}| {percent_str:>6}% {msg_right:21}")
    if count >= total:
        sys.stderr.write("\n")
    sys.stderr.flush()
