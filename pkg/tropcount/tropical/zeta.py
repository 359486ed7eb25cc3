"""Hilbert zeta series of a family of curves and their refined coefficients N_r

With P(q) = (1 - q)(1 - qy), the chi_{-y} genera h_i of the relative Hilbert schemes determine
integers-in-y N_r through

    sum_i h_i q^i = sum_r N_r q^r P(q)^(g - 1 - r)

Since q^r P^(g-1-r) starts with q^r, the N_r are peeled off one at a time. The Euler variant
replaces P by (1 - q)^2 and works at y = 1.
"""

from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from dataclasses import dataclass

from tropcount.errors import DomainError, TruncationError, ValidationError
from tropcount.io.logging import logger
from tropcount.tropical.ringkit import HalfLaurent, SeriesY

VARIANTS = ("chi_y", "euler")
CLOSED_FORMS = ("nodal_genus1", "smooth")

Coefficient = Union[HalfLaurent, int]


def _as_laurent(value: Any) -> HalfLaurent:
    if isinstance(value, HalfLaurent):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return HalfLaurent.const(value)
    if isinstance(value, list):
        return HalfLaurent.from_poly([int(c) for c in value])
    if isinstance(value, Mapping) and "half_exps" in value:
        return HalfLaurent.from_json(value)
    raise ValidationError(f"`{value}` is not a Laurent polynomial")


@dataclass(frozen=True)
class ZetaInput:
    """chi_{-y} genera of Hilb^0, ..., Hilb^(order-1) of a family of arithmetic genus g"""

    g: int
    hilb_chi: Tuple[HalfLaurent, ...]
    order: int = -1

    def __post_init__(self) -> None:
        if self.g < 0:
            raise DomainError(f"genus must be nonnegative, got {self.g}")
        object.__setattr__(self, "hilb_chi", tuple(_as_laurent(h) for h in self.hilb_chi))
        if self.order < 0:
            object.__setattr__(self, "order", len(self.hilb_chi))
        if len(self.hilb_chi) < self.order:
            raise ValidationError(
                f"order {self.order} needs {self.order} coefficients, got {len(self.hilb_chi)}"
            )

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "ZetaInput":
        """Read {"g": ..., "hilb_chi": [...], "order": ...}

        Coefficients are integers, coefficient lists starting at y^0, or HalfLaurent JSON.
        """
        try:
            return cls(
                int(data["g"]),
                tuple(_as_laurent(h) for h in data["hilb_chi"]),
                int(data.get("order", -1)),
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed zeta input: {exc}") from exc


def required_order(g: int) -> int:
    """Truncation order below which N_0, ..., N_g are not all determined"""
    return 2 * g + 2


def _base(variant: str, order: int) -> SeriesY:
    if variant == "chi_y":
        return SeriesY([1, HalfLaurent.from_poly([-1, -1]), HalfLaurent.y()], 0, order)
    if variant == "euler":
        return SeriesY([1, -2, 1], 0, order)
    raise DomainError(f"unknown zeta variant `{variant}`, expected {VARIANTS}")


def _powers(base: SeriesY, low: int, high: int) -> Dict[int, SeriesY]:
    """base^k for low <= k <= high, truncated at the order of base"""

    out: Dict[int, SeriesY] = {0: SeriesY([1], 0, base.order)}
    for k in range(1, high + 1):
        out[k] = out[k - 1] * base
    if low < 0:
        inverse = base.inverse()
        for k in range(-1, low - 1, -1):
            out[k] = out[k + 1] * inverse
    return {k: s for k, s in out.items() if low <= k <= high}


def _term(n_r: HalfLaurent, r: int, power: SeriesY, order: int) -> List[HalfLaurent]:
    """Coefficients of n_r q^r P^k below q^order"""
    out = [HalfLaurent() for _ in range(order)]
    for i in range(r, order):
        out[i] = n_r * power.coefficient(i - r)
    return out


def forward_series(N: Sequence[Coefficient], g: int, order: int, variant: str = "chi_y") -> SeriesY:
    """Z(q) = q^(1-g) sum_r N_r q^r P^(g-1-r), truncated after `order` coefficients

    Examples
    --------
    >>> z = forward_series([1, HalfLaurent.y()], 1, 4)
    >>> [str(c) for c in z.coefficients]
    ['1', 'y', 'y + y^2', 'y + y^2 + y^3']
    """

    coefficients = [HalfLaurent() for _ in range(order)]
    terms = [_as_laurent(n) for n in N]
    if variant == "euler":
        terms = [HalfLaurent.const(t.evaluate(1)) for t in terms]
    if terms and order > 0:
        base = _base(variant, order)
        powers = _powers(base, g - len(terms), max(g - 1, 0))
        for r, n_r in enumerate(terms):
            if r >= order or n_r.is_zero():
                continue
            for i, c in enumerate(_term(n_r, r, powers[g - 1 - r], order)):
                coefficients[i] = coefficients[i] + c

    return SeriesY(coefficients, 1 - g, 1 - g + order)


def invert_series(data: ZetaInput, variant: str = "chi_y") -> List[HalfLaurent]:
    """N_0, ..., N_(order-1) from the truncated Hilbert series

    Raises
    ------
    TruncationError
        If the order is smaller than 2g + 2

    Examples
    --------
    >>> y = HalfLaurent.y()
    >>> N = invert_series(ZetaInput(1, (1, y, y + y**2, y + y**2 + y**3)))
    >>> [str(n) for n in N]
    ['1', 'y', '0', '0']
    """

    need = required_order(data.g)
    if data.order < need:
        raise TruncationError(
            f"genus {data.g} needs the Hilbert series up to order {need}, got {data.order}",
            required_order=need,
        )

    order = data.order
    residual = list(data.hilb_chi[:order])
    if variant == "euler":
        residual = [HalfLaurent.const(h.evaluate(1)) for h in residual]

    base = _base(variant, order)
    powers = _powers(base, data.g - order, max(data.g - 1, 0))

    N: List[HalfLaurent] = []
    for r in range(order):
        n_r = residual[r]
        N.append(n_r)
        if n_r.is_zero():
            continue
        for i, c in enumerate(_term(n_r, r, powers[data.g - 1 - r], order)):
            residual[i] = residual[i] - c

    logger.debug(f" Zeta: extracted N_0..N_{order - 1} for g={data.g} ({variant})")

    return N


@dataclass(frozen=True)
class FunctionalEquation:
    """Outcome of `functional_equation_check`; truthy when the equation holds

    `violation` is the first failing pair of exponents (k, 2g - k), or (k, None) when f has a
    nonzero coefficient beyond q^(2g).
    """

    holds: bool
    f: Tuple[HalfLaurent, ...]
    violation: Optional[Tuple[int, Optional[int]]] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "f": [str(c) for c in self.f],
            "violation": None if self.violation is None else list(self.violation),
        }


def functional_equation_check(N: Sequence[Coefficient], g: int) -> FunctionalEquation:
    """Check q^(2g) y^g f(1/(qy)) = f(q) for f = sum_r N_r q^r P^(g-r)

    Each term with r <= g is invariant on its own, so the check can only fail when some
    N_r with r > g is nonzero.

    Examples
    --------
    >>> bool(functional_equation_check([1, HalfLaurent.y()], 1))
    True
    >>> functional_equation_check([1, 1], 0).violation
    (1, None)
    """

    terms = [_as_laurent(n) for n in N]
    last = max([r for r, n in enumerate(terms) if not n.is_zero()], default=-1)
    # enough precision to see a coefficient beyond q^(2g)
    order = 2 * g + 2 + max(last - g, 0)

    f = [HalfLaurent() for _ in range(order)]
    if last >= 0:
        base = _base("chi_y", order)
        powers = _powers(base, g - last, g)
        for r, n_r in enumerate(terms[: last + 1]):
            if n_r.is_zero():
                continue
            for i, c in enumerate(_term(n_r, r, powers[g - r], order)):
                f[i] = f[i] + c

    for k in range(2 * g + 1, order):
        if not f[k].is_zero():
            return FunctionalEquation(False, tuple(f), (k, None))

    for k in range(0, g + 1):
        if f[k] != f[2 * g - k].shift(2 * (k - g)):
            return FunctionalEquation(False, tuple(f[: 2 * g + 1]), (k, 2 * g - k))

    return FunctionalEquation(True, tuple(f[: 2 * g + 1]))


def hilbert_from_closed_form(kind: str, g: int, order: int) -> ZetaInput:
    """Hilbert series of reference families

    * `nodal_genus1`: pencil of genus-1 curves with nodal fibers, 1 + yq/P (g must be 1);
    * `smooth`: a single smooth genus-g curve, P^(g-1) by Macdonald's formula.
    """

    if kind == "nodal_genus1":
        if g != 1:
            raise DomainError("the nodal genus-1 closed form needs g = 1")
        series = forward_series([1, HalfLaurent.y()], 1, order)
    elif kind == "smooth":
        series = forward_series([1], g, order)
    else:
        raise DomainError(f"unknown closed form `{kind}`, expected {CLOSED_FORMS}")

    return ZetaInput(g, series.coefficients, order)


def zeta_report(data: ZetaInput, variant: str = "chi_y") -> Dict[str, Any]:
    """The N_r ledger written by the `zeta` command"""

    N = invert_series(data, variant)
    report: Dict[str, Any] = {
        "g": data.g,
        "variant": variant,
        "order": data.order,
        "determinable": [0, data.order - 1],
        "N": [n.to_json() for n in N],
        "N_str": [str(n) for n in N],
    }
    if variant == "chi_y":
        report["functional_equation"] = functional_equation_check(N, data.g).to_json()
    return report
