"""chi_{-y} genera of the universal curve over a delta=1 tropical curve and the comparison with
its refined multiplicity

The universal curve C_Gamma and the linear series |L|_Gamma over a tropical curve Gamma are cut
into pieces indexed by the faces of Gamma. Each piece is a cell datum of the contribution table;
its chi_{-y} genus comes from the closure volume formula. The delta invariant

    N_1 = chi_{-y}(C_Gamma) + (g - 1)(y + 1) chi_{-y}(|L|_Gamma)

is then compared with y N(Gamma).
"""

from typing import Any, Dict, List, Optional, Union

from dataclasses import dataclass, field
from pathlib import Path

from tropcount.errors import CensusError, ConsistencyError, DomainError, ValidationError
from tropcount.io.io import load_yaml
from tropcount.io.logging import logger
from tropcount.tropical.enumerate import EnumerationResult
from tropcount.tropical.lattice import polygon_stats
from tropcount.tropical.motvol import CellDatum, cell_volume
from tropcount.tropical.multiplicity import refined_multiplicity
from tropcount.tropical.ringkit import HalfLaurent, MotivicClass
from tropcount.tropical.tropcurve import CASES, FaceCensus, TropicalCurve, face_census

DEFAULT_TABLE = Path(__file__).resolve().parent.parent / "data" / "contributions.yaml"

LAYERS = ("gamma", "gamma_tilde")

# n(Gamma) of the special feature of each case
LOCAL_MULTIPLICITY = {"FourValent": 1, "Weight2Marked": 4, "Weight2Unmarked": 4, "Mult3Vertex": 3}


@dataclass(frozen=True)
class ContributionRow:
    case_id: str
    face: str
    layer: str
    cell: CellDatum
    tag: str = ""

    def chi_y(self) -> HalfLaurent:
        return cell_volume(self.cell, "closure").chi_y()


class ContributionTable:
    """Cell data of the universal curve and of the linear series, per case and face type

    Parameters
    ----------
    fname : `str / Path`
        YAML table; the table shipped with the package by default
    """

    def __init__(self, fname: Optional[Union[str, Path]] = None) -> None:

        self.fname = Path(fname) if fname is not None else DEFAULT_TABLE
        data = load_yaml(self.fname)
        if not isinstance(data, dict) or "cases" not in data:
            raise ValidationError(f"contribution table `{self.fname}` has no `cases` section")

        self._rows: Dict[str, Dict[str, List[ContributionRow]]] = {}
        self._base: Dict[str, List[ContributionRow]] = {}

        for case_id, block in data["cases"].items():
            if case_id not in CASES:
                raise ValidationError(f"contribution table lists an unknown case `{case_id}`")
            faces: Dict[str, List[ContributionRow]] = {}
            for face, layers in block.get("faces", {}).items():
                faces[face] = [self._row(case_id, face, entry) for entry in layers]
            self._rows[case_id] = faces
            self._base[case_id] = [self._row(case_id, "base", e) for e in block.get("base", [])]

        logger.debug(f" ContributionTable: loaded {len(self)} rows from {self.fname}")

    @staticmethod
    def _row(case_id: str, face: str, entry: Dict[str, Any]) -> ContributionRow:
        layer = entry.get("layer", "gamma")
        if layer not in LAYERS:
            raise ValidationError(f"unknown layer `{layer}` in case {case_id}, face {face}")
        cell = CellDatum(
            MotivicClass.from_json(entry["class"]), int(entry["dim"]), int(entry["rec_dim"])
        )
        return ContributionRow(case_id, face, layer, cell, entry.get("tag", ""))

    def __len__(self) -> int:
        return sum(len(rows) for faces in self._rows.values() for rows in faces.values())

    def cases(self) -> List[str]:
        return list(self._rows)

    def faces(self, case_id: str) -> Dict[str, List[ContributionRow]]:
        if case_id not in self._rows:
            raise DomainError(f"no contributions for case `{case_id}`")
        return self._rows[case_id]

    def base_cells(self, case_id: str) -> List[ContributionRow]:
        if case_id not in self._base:
            raise DomainError(f"no base cells for case `{case_id}`")
        return self._base[case_id]

    def rows(self) -> List[ContributionRow]:
        return [r for faces in self._rows.values() for rows in faces.values() for r in rows]


_default_table: Optional[ContributionTable] = None


def default_table() -> ContributionTable:
    global _default_table
    if _default_table is None:
        _default_table = ContributionTable()
    return _default_table


def census_area(census: FaceCensus, g: int) -> int:
    """Doubled area recovered from the number of unbounded edges, A + 2 - 2g"""
    return census.counts["unbounded"] - 2 + 2 * g


def _check_census(census: FaceCensus, g: int) -> int:
    if census.case_id == "Smooth":
        raise DomainError("smooth curves have no special feature to verify")
    if g < 1:
        raise DomainError(f"verification needs g >= 1, got {g}")
    A = census_area(census, g)
    expected = FaceCensus.expected_counts(census.case_id, A, g)
    if expected != census.counts:
        raise CensusError(
            f"census {census.counts} of case {census.case_id} disagrees with the counts "
            f"{expected} for A={A}, g={g}"
        )
    return A


def face_ledger(
    census: FaceCensus, g: int, table: Optional[ContributionTable] = None
) -> List[Dict[str, Any]]:
    """Face-by-face contributions to chi_{-y}(C_Gamma)"""

    table = table or default_table()
    _check_census(census, g)

    ledger = []
    for face, rows in table.faces(census.case_id).items():
        count = census.counts[face]
        chi = HalfLaurent()
        for row in rows:
            chi = chi + row.chi_y()
        ledger.append(
            {
                "face": face,
                "count": count,
                "layers": {row.layer: str(row.chi_y()) for row in rows},
                "chi_y": str(chi),
                "contribution": count * chi,
            }
        )
    return ledger


def chi_universal_curve(
    census: FaceCensus, g: int, table: Optional[ContributionTable] = None
) -> HalfLaurent:
    """chi_{-y} of the universal curve over a delta=1 tropical curve

    Raises
    ------
    CensusError
        If the census counts disagree with the area formulas of its case

    Examples
    --------
    >>> str(chi_universal_curve(FaceCensus.expected("Mult3Vertex", 9, 1), 1))
    '1 + y + y^2'
    """

    total = HalfLaurent()
    for entry in face_ledger(census, g, table):
        total = total + entry["contribution"]
    return total


def chi_linear_series(case_id: str, table: Optional[ContributionTable] = None) -> HalfLaurent:
    """chi_{-y} of the linear-series piece |L|_Gamma, from its base cells

    >>> str(chi_linear_series("FourValent"))
    '-1 + y'
    """

    table = table or default_table()
    total = HalfLaurent()
    for row in table.base_cells(case_id):
        total = total + row.chi_y()
    return total


def delta_invariant(
    census: FaceCensus, g: int, table: Optional[ContributionTable] = None
) -> HalfLaurent:
    """N_1 = chi_{-y}(C_Gamma) + (g - 1)(y + 1) chi_{-y}(|L|_Gamma)"""

    y_plus_one = HalfLaurent.from_poly([1, 1])
    return chi_universal_curve(census, g, table) + (g - 1) * y_plus_one * chi_linear_series(
        census.case_id, table
    )


@dataclass
class ConjectureCheck:
    """Both sides of N(Gamma) = y^(-delta) N_delta for one curve"""

    N_refined: HalfLaurent
    N_delta: HalfLaurent
    equal: bool
    case_id: str = "Smooth"
    ledger: List[Dict[str, Any]] = field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        return {
            "case_id": self.case_id,
            "N_refined": str(self.N_refined),
            "N_delta": str(self.N_delta),
            "equal": self.equal,
            "ledger": [
                {k: (str(v) if isinstance(v, HalfLaurent) else v) for k, v in entry.items()}
                for entry in self.ledger
            ],
        }


def conjecture_check(
    curve: TropicalCurve, g: int, delta: int, table: Optional[ContributionTable] = None
) -> ConjectureCheck:
    """Compare the refined multiplicity of a curve with y^(-delta) N_delta of its family"""

    if delta not in (0, 1):
        raise DomainError(f"verification is available for delta 0 and 1, not {delta}")

    record = refined_multiplicity(curve)
    if delta == 0:
        one = HalfLaurent.const(1)
        return ConjectureCheck(record.refined, one, record.refined == one)

    census = face_census(curve, 1)
    n_delta = delta_invariant(census, g, table)
    equal = n_delta.shift(-2) == record.refined
    if not equal:
        logger.error(
            f"curve {curve.key()}: N = {record.refined} but y^-1 N_1 = {n_delta.shift(-2)}"
        )

    return ConjectureCheck(
        record.refined, n_delta, equal, census.case_id, face_ledger(census, g, table)
    )


def euler_check(
    curve: TropicalCurve, g: int, delta: int, table: Optional[ContributionTable] = None
) -> Dict[str, Any]:
    """Euler characteristic side: y^(-delta) N_delta at y = 1 against n(Gamma)"""

    check = conjecture_check(curve, g, delta, table)
    euler = check.N_delta.evaluate(1)
    classical = check.N_refined.evaluate(1)
    return {"euler": euler, "classical": classical, "equal": euler == classical}


def smooth_locus_chi(census: FaceCensus, table: Optional[ContributionTable] = None) -> HalfLaurent:
    """chi_{-y} of the union of the smooth fibers over a genus-1 family, chi(C_Gamma) - n y

    Every smooth fiber is an elliptic curve with chi_{-y} = 0, yet the union need not vanish.

    >>> str(smooth_locus_chi(FaceCensus.expected("Weight2Marked", 9, 1)))
    '1 - 2*y + y^2'
    """

    if census.case_id not in LOCAL_MULTIPLICITY:
        raise DomainError(f"no local multiplicity for case `{census.case_id}`")
    return chi_universal_curve(census, 1, table) - HalfLaurent.monomial(
        2, LOCAL_MULTIPLICITY[census.case_id]
    )


def verify_result(
    result: EnumerationResult, strict: bool = False, table: Optional[ContributionTable] = None
) -> Dict[str, Any]:
    """Verification report over every curve of an enumeration

    Raises
    ------
    ConsistencyError
        In strict mode, if some curve fails the comparison
    """

    g = polygon_stats(result.polygon).interior_points
    entries = []
    for k, curve in enumerate(result.curves):
        check = conjecture_check(curve, g, result.delta, table)
        entry = {"index": k, "key": curve.key(), **check.to_json()}
        entry["euler"] = euler_check(curve, g, result.delta, table)["equal"]
        entry["symmetric"] = check.N_delta.shift(-2 * result.delta).is_symmetric()
        if not entry["symmetric"]:
            logger.error(f"curve {curve.key()}: y^-delta N_delta is not symmetric in y")
        entries.append(entry)

    all_equal = all(e["equal"] for e in entries)
    if strict and not all_equal:
        bad = [e["index"] for e in entries if not e["equal"]]
        raise ConsistencyError(f"curves {bad} do not satisfy N(Gamma) = y^-delta N_delta")

    logger.info(f"verified {len(entries)} curves, all equal: {all_equal}")

    return {
        "polygon": result.polygon.to_json(),
        "delta": result.delta,
        "g": g,
        "all_equal": all_equal,
        "curves": entries,
    }
