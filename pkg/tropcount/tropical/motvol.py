"""Euler characteristics of polyhedra and per-cell motivic volumes

Callers supply the classes of initial degenerations (or of strata); this module only applies the
volume formulas and their specializations.
"""

from typing import Any, Dict, List, Mapping, Sequence

from dataclasses import dataclass

from tropcount.errors import DomainError, ValidationError
from tropcount.io.logging import logger
from tropcount.tropical.ringkit import HalfLaurent, MotivicClass

VARIANTS = ("bounded_cell", "closure", "stratum")


@dataclass(frozen=True)
class PolyhedronDescriptor:
    """What the Euler characteristic of a relatively open polyhedron depends on"""

    dim: int
    bounded: bool
    affine_subspace: bool = False

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise DomainError(f"dimension must be nonnegative, got {self.dim}")
        if self.affine_subspace and self.bounded and self.dim > 0:
            raise DomainError("a bounded affine subspace must be a point")


@dataclass(frozen=True)
class CellDatum:
    """A cell of a tropical complex with the class attached to it

    Parameters
    ----------
    in_class : `MotivicClass`
        Class of the initial degeneration (or of the stratum, for the `stratum` variant)

    dim : `int`
        Dimension of the cell

    rec_dim : `int`
        Dimension of its recession cone
    """

    in_class: MotivicClass
    dim: int
    rec_dim: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.rec_dim <= self.dim:
            raise DomainError(
                f"recession dimension {self.rec_dim} must lie between 0 and the cell dimension "
                f"{self.dim}"
            )

    @property
    def bounded(self) -> bool:
        return self.rec_dim == 0

    def to_json(self) -> Dict[str, Any]:
        return {"in_class": self.in_class.to_json(), "dim": self.dim, "rec_dim": self.rec_dim}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "CellDatum":
        try:
            return cls(
                MotivicClass.from_json(data["in_class"]), int(data["dim"]), int(data["rec_dim"])
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed cell entry: {exc}") from exc


@dataclass(frozen=True)
class StratumDatum:
    """Open stratum E_J of a strictly semistable special fiber, `depth` is |J|"""

    stratum_class: MotivicClass
    depth: int

    def __post_init__(self) -> None:
        if self.depth < 1:
            raise DomainError(f"stratum depth must be at least 1, got {self.depth}")


def chi_prime(p: PolyhedronDescriptor) -> int:
    """Euler characteristic of the relative interior of a polyhedron

    Examples
    --------
    >>> chi_prime(PolyhedronDescriptor(dim=1, bounded=True))
    -1
    >>> chi_prime(PolyhedronDescriptor(dim=1, bounded=False, affine_subspace=True))
    1
    >>> chi_prime(PolyhedronDescriptor(dim=1, bounded=False))
    0
    """

    if p.bounded:
        return (-1) ** p.dim
    if p.affine_subspace:
        return 1
    return 0


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def cell_volume(c: CellDatum, variant: str) -> MotivicClass:
    """Motivic volume of the points of a family tropicalizing to a cell

    Variants:

    * `bounded_cell`: (-1)^dim [in] on bounded cells, 0 on unbounded ones;
    * `closure`: (-1)^(dim - rec_dim) [in] / (L - 1)^rec_dim, for cells whose recession cone
      belongs to the fan;
    * `stratum`: (1 - L)^(dim - rec_dim) [stratum].

    Raises
    ------
    DomainError
        For an unknown variant
    """

    if variant == "bounded_cell":
        if not c.bounded:
            return MotivicClass()
        return _sign(c.dim) * c.in_class

    if variant == "closure":
        denominator = MotivicClass(loc_power=c.rec_dim, poly={0: 1})
        return (_sign(c.dim - c.rec_dim) * c.in_class) * denominator

    if variant == "stratum":
        one_minus_L = MotivicClass({0: 1, 1: -1})
        factor = MotivicClass.const(1)
        for _ in range(c.dim - c.rec_dim):
            factor = factor * one_minus_L
        return factor * c.in_class

    raise DomainError(f"unknown volume variant `{variant}`, expected one of {VARIANTS}")


def complex_volume(cells: Sequence[CellDatum], variant: str) -> MotivicClass:
    """Sum of `cell_volume` over a complex, reduced when the localization cancels

    >>> complex_volume([], "closure").is_zero()
    True
    """

    total = MotivicClass()
    for cell in cells:
        total = total + cell_volume(cell, variant)

    reduced = total.reduce()
    if reduced.loc_power:
        logger.debug(f" complex volume keeps a denominator (L-1)^{reduced.loc_power}")

    return reduced


def semistable_volume(strata: Sequence[StratumDatum]) -> MotivicClass:
    """Volume of a family with a strictly semistable model: sum of [E_J](1 - L)^(|J| - 1)"""

    total = MotivicClass()
    one_minus_L = MotivicClass({0: 1, 1: -1})
    for s in strata:
        term = s.stratum_class
        for _ in range(s.depth - 1):
            term = term * one_minus_L
        total = total + term

    return total


def semistable_chi_y(strata: Sequence[StratumDatum]) -> HalfLaurent:
    """chi_{-y} side of the semistable formula: sum of chi_{-y}(E_J)(1 - y)^(|J| - 1)"""

    total = HalfLaurent()
    one_minus_y = HalfLaurent.from_poly([1, -1])
    for s in strata:
        total = total + s.stratum_class.chi_y() * one_minus_y ** (s.depth - 1)

    return total


def volume_from_json(data: Mapping[str, Any]) -> Dict[str, Any]:
    """Evaluate a cell-list document

    The document is {"variant": ..., "cells": [CellDatum JSON, ...]}; the report carries the
    reduced class, its chi_{-y} genus and Euler characteristic.
    """

    if not isinstance(data, Mapping) or "cells" not in data:
        raise ValidationError("cell-list JSON must be an object with a `cells` list")

    variant = data.get("variant", "closure")
    cells: List[CellDatum] = [CellDatum.from_json(entry) for entry in data["cells"]]
    volume = complex_volume(cells, variant)
    chi = volume.chi_y()

    return {
        "variant": variant,
        "cells": len(cells),
        "volume": volume.to_json(),
        "volume_str": str(volume),
        "chi_y": chi.to_json(),
        "chi_y_str": str(chi),
        "euler": chi.evaluate(1),
    }
