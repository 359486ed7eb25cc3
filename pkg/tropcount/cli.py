"""Command bodies of the tropcount driver

`run` executes one command described by a `RunConfig` and returns the exit status; the argparse
front end lives in `tropcount.base`.
"""

from typing import Any, Dict, List, Optional

import io
import sys
from dataclasses import dataclass, field
from pathlib import Path

from tropcount.defaults import get_defaults
from tropcount.errors import ClassificationError, TropcountError, ValidationError
from tropcount.io import ResultCache, dumps_json, load_json, logger
from tropcount.io.svg import RenderOptions, render_svg
from tropcount.tropical.enumerate import (
    EnumerationResult,
    PointConfiguration,
    enumerate_curves,
    ingest_curves,
)
from tropcount.tropical.lattice import LatticePolygon, degree_directions, polygon_stats
from tropcount.tropical.motvol import volume_from_json
from tropcount.tropical.multiplicity import (
    count_table,
    severi_from_result,
    write_table_csv,
    write_table_json,
)
from tropcount.tropical.tropcurve import TropicalCurve, face_census
from tropcount.tropical.verify import verify_result
from tropcount.tropical.zeta import (
    VARIANTS,
    ZetaInput,
    hilbert_from_closed_form,
    required_order,
    zeta_report,
)

COMMANDS = ("stats", "enumerate", "count", "verify", "zeta", "render", "volume")
FORMATS = ("json", "csv")


@dataclass
class RunConfig:
    """Everything a command needs

    Parameters
    ----------
    command : `str`
        One of `COMMANDS`

    polygon : `Path`
        Polygon JSON

    delta : `int`
        Number of nodes

    points : `Path`
        Explicit point configuration JSON; stretched points are generated when missing

    curves : `Path`
        Enumeration result or curve list JSON used instead of enumerating

    input : `Path`
        Input document of the `zeta` and `volume` commands

    output : `Path`
        Output file (directory for `render`); standard output when missing

    settings : `dict`
        Merged configuration sections, see `tropcount.defaults`
    """

    command: str
    polygon: Optional[Path] = None
    delta: int = 0
    points: Optional[Path] = None
    curves: Optional[Path] = None
    input: Optional[Path] = None
    output: Optional[Path] = None
    fmt: str = "json"
    strict: bool = False
    variant: str = "chi_y"
    closed_form: Optional[str] = None
    genus: Optional[int] = None
    method: Optional[str] = None
    jobs: Optional[int] = None
    cache_dir: Optional[Path] = None
    use_cache: Optional[bool] = None
    progress: bool = False
    settings: Dict[str, Dict[str, Any]] = field(default_factory=get_defaults)

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command `{self.command}`, expected {COMMANDS}")
        if self.fmt not in FORMATS:
            raise ValidationError(f"unknown output format `{self.fmt}`, expected {FORMATS}")
        if self.variant not in VARIANTS:
            raise ValidationError(f"unknown zeta variant `{self.variant}`, expected {VARIANTS}")
        for name in ("polygon", "points", "curves", "input", "output", "cache_dir"):
            value = getattr(self, name)
            if isinstance(value, str):
                setattr(self, name, Path(value))


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text)
    logger.info(f"wrote `{output}`")


def _load_polygon(config: RunConfig) -> LatticePolygon:
    if config.polygon is None:
        raise ValidationError(f"command `{config.command}` needs a polygon (--polygon)")
    return LatticePolygon.from_json(load_json(config.polygon))


def _point_configuration(config: RunConfig, polygon: LatticePolygon) -> PointConfiguration:
    if config.points is None:
        return PointConfiguration.stretched(
            polygon,
            config.delta,
            stretch_factor=int(config.settings["Enumeration"]["stretch_factor"]),
        )

    data = load_json(config.points)
    if isinstance(data, list):
        return PointConfiguration.explicit(data)
    return PointConfiguration.from_json(data)


def _cache(config: RunConfig) -> ResultCache:
    admin = config.settings["Admin"]
    directory = config.cache_dir or admin.get("cache_directory")
    enabled = admin.get("use_cache", True) if config.use_cache is None else config.use_cache
    return ResultCache(directory, enabled=bool(enabled))


def _enumerate(config: RunConfig) -> EnumerationResult:
    """Enumerate through the result cache"""

    polygon = _load_polygon(config)
    points = _point_configuration(config, polygon)
    options = config.settings["Enumeration"]
    method = config.method or options["method"]
    if points.mode == "explicit":
        method = "brute_force"
    orders = tuple(options["orders"])

    cache = _cache(config)
    key = ResultCache.key(polygon.to_json(), config.delta, points.to_json(), f"{method}:{orders}")
    payload = cache.load(key)
    if payload is not None:
        try:
            return EnumerationResult.from_json(payload)
        except ValidationError as exc:
            logger.warning(f"ignoring cache entry `{key}`: {exc}")

    result = enumerate_curves(
        polygon,
        config.delta,
        points,
        method=method,
        jobs=int(config.jobs or config.settings["Admin"]["jobs"]),
        max_lattice_points=int(options["max_lattice_points"]),
        max_subdivisions=int(options["max_subdivisions"]),
        orders=orders,
        progress=config.progress,
    )
    cache.store(key, result.to_json())

    return result


def _curves(config: RunConfig) -> EnumerationResult:
    """Curves given with --curves, enumerated otherwise"""

    if config.curves is None:
        return _enumerate(config)

    data = load_json(config.curves)
    if isinstance(data, dict) and "schema" in data:
        return EnumerationResult.from_json(data)

    curves = data.get("curves") if isinstance(data, dict) else data
    if not isinstance(curves, list):
        raise ValidationError(f"`{config.curves}` holds neither a result nor a list of curves")
    return ingest_curves(_load_polygon(config), config.delta, curves)


def _stats(config: RunConfig) -> None:
    polygon = _load_polygon(config)
    report = polygon_stats(polygon).to_json()
    report["polygon"] = polygon.to_json()
    report["degree"] = [
        {"direction": [d.x, d.y], "multiplicity": m}
        for d, m in sorted(degree_directions(polygon).items())
    ]
    _emit(dumps_json(report), config.output)


def _count(config: RunConfig) -> None:
    count = severi_from_result(_curves(config))
    rows = count_table(count)
    stream = io.StringIO()
    if config.fmt == "csv":
        write_table_csv(rows, stream)
    else:
        write_table_json(rows, count, stream)
    _emit(stream.getvalue(), config.output)


def _zeta(config: RunConfig) -> None:
    if config.closed_form is not None:
        if config.genus is None:
            raise ValidationError("closed-form zeta series need a genus (--genus)")
        padding = int(config.settings["Zeta"]["default_order_padding"])
        data = hilbert_from_closed_form(
            config.closed_form, config.genus, required_order(config.genus) + padding
        )
    elif config.input is not None:
        data = ZetaInput.from_json(load_json(config.input))
    else:
        raise ValidationError("command `zeta` needs --input or --closed-form")

    _emit(dumps_json(zeta_report(data, config.variant)), config.output)


def _case_name(curve: TropicalCurve, delta: int) -> str:
    if delta > 1:
        return "simple"
    try:
        return face_census(curve, delta).case_id
    except ClassificationError as exc:
        logger.warning(f"cannot classify curve {curve.key()}: {exc}")
        return "unclassified"


def _render(config: RunConfig) -> None:
    result = _curves(config)
    section = config.settings["Render"]
    options = RenderOptions(
        width=int(section["width"]),
        margin=int(section["margin"]),
        show_subdivision=bool(section["show_subdivision"]),
        label_weights=bool(section["label_weights"]),
    )

    directory = config.output or Path(".")
    directory.mkdir(parents=True, exist_ok=True)
    written: List[str] = []
    for k, curve in enumerate(result.curves):
        fname = directory / f"curve-{k}-{_case_name(curve, result.delta)}.svg"
        fname.write_text(render_svg(curve, options))
        written.append(fname.name)
    logger.info(f"rendered {len(written)} curves into `{directory}`")

    sys.stdout.write(dumps_json({"directory": str(directory), "files": written}))


def run(config: RunConfig) -> int:
    """Execute one command

    Returns
    -------
    status : `int`
        0 on success, otherwise the `exit_code` of the error that stopped the command
    """

    logger.info(f"running command `{config.command}`")

    try:
        if config.command == "stats":
            _stats(config)
        elif config.command == "enumerate":
            _emit(dumps_json(_curves(config).to_json()), config.output)
        elif config.command == "count":
            _count(config)
        elif config.command == "verify":
            report = verify_result(_curves(config), strict=config.strict)
            _emit(dumps_json(report), config.output)
        elif config.command == "zeta":
            _zeta(config)
        elif config.command == "render":
            _render(config)
        elif config.command == "volume":
            if config.input is None:
                raise ValidationError("command `volume` needs --input")
            _emit(dumps_json(volume_from_json(load_json(config.input))), config.output)
    except TropcountError as exc:
        logger.critical(f"{config.command} failed: {exc}")
        sys.stderr.write(dumps_json(exc.to_dict()))
        return exc.exit_code

    return 0
