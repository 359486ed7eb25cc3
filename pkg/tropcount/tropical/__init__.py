from .enumerate import EnumerationResult, PointConfiguration, enumerate_curves, ingest_curves
from .lattice import LatticePoint, LatticePolygon, polygon_stats
from .multiplicity import CountRecord, SeveriCount, refined_multiplicity, severi
from .tropcurve import NewtonSubdivision, TropicalCurve, curve_from_subdivision
from .verify import ContributionTable, conjecture_check, verify_result
from .zeta import ZetaInput, forward_series, functional_equation_check, invert_series

__all__ = [
    "conjecture_check",
    "ContributionTable",
    "CountRecord",
    "curve_from_subdivision",
    "EnumerationResult",
    "enumerate_curves",
    "forward_series",
    "functional_equation_check",
    "ingest_curves",
    "invert_series",
    "LatticePoint",
    "LatticePolygon",
    "NewtonSubdivision",
    "PointConfiguration",
    "polygon_stats",
    "refined_multiplicity",
    "severi",
    "SeveriCount",
    "TropicalCurve",
    "verify_result",
    "ZetaInput",
]
