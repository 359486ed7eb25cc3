"""Exceptions raised by tropcount

Every exception carries the exit status used by the command-line driver and a machine-readable
form (see `TropcountError.to_dict`).
"""

from typing import Any, Dict, List, Optional


class TropcountError(Exception):
    """Base class of all tropcount errors"""

    exit_code = 1

    def to_dict(self) -> Dict[str, Any]:
        return {"error": str(self), "kind": type(self).__name__}


class ValidationError(TropcountError):
    """Invalid input: polygon, curve, configuration or arguments"""

    exit_code = 2


class PolygonError(ValidationError):
    """Polygon rejected by validation

    Parameters
    ----------
    message : `str`
        Reason of the rejection

    at : `int`
        Index of the offending vertex in the input sequence
    """

    def __init__(self, message: str, at: int = -1) -> None:
        super().__init__(message)
        self.at = at

    def to_dict(self) -> Dict[str, Any]:
        return {"error": str(self), "at": self.at}


class CurveValidationError(ValidationError):
    """One or more curves failed validation, `report` holds one entry per failing curve"""

    def __init__(self, message: str, report: Optional[List[Dict[str, Any]]] = None) -> None:
        super().__init__(message)
        self.report = report or []

    def to_dict(self) -> Dict[str, Any]:
        return {"error": str(self), "kind": type(self).__name__, "report": self.report}


class DomainError(ValidationError):
    """Argument outside the domain of an operation"""

    pass


class UnsupportedProductError(ValidationError):
    """Product of two curve atoms requested"""

    pass


class RegularityError(ValidationError):
    """Subdivision is not induced by its lifting function"""

    def __init__(self, message: str, cells: Any = None) -> None:
        super().__init__(message)
        self.cells = cells

    def to_dict(self) -> Dict[str, Any]:
        out = super().to_dict()
        if self.cells is not None:
            out["cells"] = [[list(p) for p in cell] for cell in self.cells]
        return out


class TruncationError(ValidationError):
    """Series truncated below the order needed to determine the requested coefficients"""

    def __init__(self, message: str, required_order: int) -> None:
        super().__init__(message)
        self.required_order = required_order

    def to_dict(self) -> Dict[str, Any]:
        out = super().to_dict()
        out["required_order"] = self.required_order
        return out


class GenericityError(TropcountError):
    """Point configuration is not generic for the requested count"""

    exit_code = 3


class ClassificationError(GenericityError):
    """Curve does not fall in exactly one of the known cases"""

    pass


class ResourceError(TropcountError):
    """Configured resource budget exceeded"""

    exit_code = 4


class ConsistencyError(TropcountError):
    """Internal invariant violated"""

    exit_code = 5


class NotInImageError(ConsistencyError):
    """Localized class whose numerator is not divisible by the required power"""

    pass


class CensusError(ConsistencyError):
    """Face counts disagree with the area formulas"""

    pass
