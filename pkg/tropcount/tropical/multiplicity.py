"""Classical and refined multiplicities of tropical curves and their sums"""

from typing import IO, Any, Dict, List, Sequence

import csv
import json
from dataclasses import dataclass, field

from tropcount.errors import ConsistencyError, DomainError
from tropcount.io.logging import logger
from tropcount.tropical.enumerate import EnumerationResult, PointConfiguration, enumerate_curves
from tropcount.tropical.lattice import LatticePolygon
from tropcount.tropical.ringkit import HalfLaurent
from tropcount.tropical.tropcurve import TropicalCurve, curve_genus, vertex_multiplicity

TABLE_FIELDS = ("index", "key", "classical", "refined", "welschinger")


@dataclass(frozen=True)
class CountRecord:
    """Multiplicities of one curve

    `refined` is the product of quantum integers, `classical` its value at y = 1 and
    `welschinger` its value at y = -1.
    """

    classical: int
    refined: HalfLaurent
    welschinger: int

    def to_json(self) -> Dict[str, Any]:
        return {
            "classical": self.classical,
            "refined": self.refined.to_json(),
            "refined_str": str(self.refined),
            "welschinger": self.welschinger,
        }


def quantum_integer(m: int) -> HalfLaurent:
    """Balanced quantum integer y^((m-1)/2) + y^((m-3)/2) + ... + y^(-(m-1)/2)

    Examples
    --------
    >>> str(quantum_integer(2))
    'y^-1/2 + y^1/2'
    >>> str(quantum_integer(3))
    'y^-1 + 1 + y'
    """

    if m < 1:
        raise DomainError(f"quantum integers need m >= 1, got {m}")

    return HalfLaurent({m - 1 - 2 * k: 1 for k in range(m)})


def refined_multiplicity(curve: TropicalCurve) -> CountRecord:
    """Products of m(v) and [m(v)]_y over the trivalent vertices; crossings contribute 1

    Raises
    ------
    DomainError
        If the curve is not simple

    ConsistencyError
        If the refined multiplicity has half-integer exponents or disagrees with the classical
        one
    """

    curve_genus(curve)

    classical = 1
    refined = HalfLaurent.const(1)
    for v in range(len(curve.vertices)):
        if curve.valence(v) != 3:
            continue
        m = vertex_multiplicity(curve, v)
        classical *= m
        refined = refined * quantum_integer(m)

    if not refined.is_integral():
        raise ConsistencyError(
            f"refined multiplicity {refined} is not a Laurent polynomial in y: "
            f"the curve has an odd number of vertices of even multiplicity"
        )
    if refined.evaluate(1) != classical or not refined.is_symmetric():
        raise ConsistencyError(f"refined multiplicity {refined} does not specialize to {classical}")

    return CountRecord(classical, refined, refined.evaluate(-1))


@dataclass
class SeveriCount:
    """Refined, classical and Welschinger sums over the curves of an enumeration"""

    refined_total: HalfLaurent
    classical_total: int
    welschinger_total: int
    per_curve: List[CountRecord] = field(default_factory=list)
    keys: List[str] = field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        return {
            "refined_total": self.refined_total.to_json(),
            "refined_total_str": str(self.refined_total),
            "classical_total": self.classical_total,
            "welschinger_total": self.welschinger_total,
            "curves": len(self.per_curve),
        }


def severi_from_result(result: EnumerationResult) -> SeveriCount:
    """Sum the multiplicities of already enumerated curves"""

    records = [refined_multiplicity(c) for c in result.curves]
    refined = HalfLaurent()
    for r in records:
        refined = refined + r.refined
    classical = sum(r.classical for r in records)

    if refined.evaluate(1) != classical:
        raise ConsistencyError(f"refined total {refined} does not specialize to {classical}")

    count = SeveriCount(
        refined_total=refined,
        classical_total=classical,
        welschinger_total=refined.evaluate(-1),
        per_curve=records,
        keys=[c.key() for c in result.curves],
    )
    logger.info(
        f"severi degree for delta={result.delta}: {classical} (refined {refined}) over "
        f"{len(records)} curves"
    )

    return count


def severi(
    polygon: LatticePolygon, delta: int, config: PointConfiguration, **kwargs: Any
) -> SeveriCount:
    """Enumerate the curves through `config` and sum their multiplicities

    Keyword arguments are passed to `enumerate_curves`.
    """

    return severi_from_result(enumerate_curves(polygon, delta, config, **kwargs))


def count_table(count: SeveriCount) -> List[Dict[str, Any]]:
    """One row per curve: key, n, N as a doubled-exponent map and W"""

    rows = []
    for k, (key, record) in enumerate(zip(count.keys, count.per_curve)):
        rows.append(
            {
                "index": k,
                "key": key,
                "classical": record.classical,
                "refined": {str(e): c for e, c in sorted(record.refined.coefficients.items())},
                "welschinger": record.welschinger,
            }
        )
    return rows


def write_table_json(rows: Sequence[Dict[str, Any]], count: SeveriCount, stream: IO[str]) -> None:
    json.dump({"totals": count.to_json(), "rows": list(rows)}, stream, indent=2, sort_keys=True)
    stream.write("\n")


def write_table_csv(rows: Sequence[Dict[str, Any]], stream: IO[str]) -> None:
    """CSV with the refined column as a JSON doubled-exponent map"""

    writer = csv.DictWriter(stream, fieldnames=TABLE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        out = dict(row)
        out["refined"] = json.dumps(row["refined"], sort_keys=True)
        writer.writerow(out)
