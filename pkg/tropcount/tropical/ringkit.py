"""Exact symbolic arithmetic

Three value types live here:

* `HalfLaurent`: Laurent polynomials in y^(1/2) with integer coefficients. Exponents are stored
  doubled so that half-integers stay exact.
* `MotivicClass`: integer combinations of L^k and [C_h minus m points] L^k, with a formal
  denominator (L - 1)^loc_power.
* `SeriesY`: truncated power series in q whose coefficients are `HalfLaurent`.

All three are immutable.
"""

from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from tropcount.errors import DomainError, NotInImageError, UnsupportedProductError

Scalar = Union[int, "HalfLaurent"]


def _clean(coefficients: Mapping[int, int]) -> Dict[int, int]:
    return {int(k): int(v) for k, v in sorted(coefficients.items()) if v != 0}


def _poly_mul(a: Mapping[int, int], b: Mapping[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return _clean(out)


def _poly_add(a: Mapping[int, int], b: Mapping[int, int], sign: int = 1) -> Dict[int, int]:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return _clean(out)


def _divide_by_x_minus_one(poly: Mapping[int, int], times: int) -> Optional[Dict[int, int]]:
    """Exact division of a Laurent polynomial in x by (x - 1)^times, None if inexact"""

    current = _clean(poly)
    for _ in range(times):
        if not current:
            return {}
        low, high = min(current), max(current)
        # synthetic division from the top: x^high ... x^low
        quotient: Dict[int, int] = {}
        carry = 0
        for e in range(high, low, -1):
            carry += current.get(e, 0)
            quotient[e - 1] = carry
        if carry + current.get(low, 0) != 0:
            return None
        current = _clean(quotient)
    return current


class HalfLaurent:
    """Laurent polynomial in y^(1/2) with integer coefficients

    Parameters
    ----------
    half_exps : `mapping`
        Doubled exponent -> coefficient. Zero coefficients are dropped

    Examples
    --------
    >>> q2 = HalfLaurent({1: 1, -1: 1})
    >>> str(q2 * q2)
    'y^-1 + 2 + y'
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, half_exps: Optional[Mapping[int, int]] = None) -> None:
        self._c: Dict[int, int] = _clean(half_exps or {})
        self._hash: Optional[int] = None

    @classmethod
    def from_poly(cls, coefficients: Union[Mapping[int, int], Sequence[int]]) -> "HalfLaurent":
        """Build from integer exponents: a mapping exponent -> coefficient or a coefficient list
        starting at y^0"""
        if isinstance(coefficients, Mapping):
            items = coefficients.items()
        else:
            items = enumerate(coefficients)
        return cls({2 * int(e): c for e, c in items})

    @classmethod
    def const(cls, c: int) -> "HalfLaurent":
        return cls({0: c})

    @classmethod
    def monomial(cls, half_exp: int, c: int = 1) -> "HalfLaurent":
        """c * y^(half_exp/2)"""
        return cls({half_exp: c})

    @classmethod
    def y(cls, power: int = 1) -> "HalfLaurent":
        """The monomial y^power (integer power)"""
        return cls({2 * power: 1})

    @property
    def coefficients(self) -> Dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        """True if every exponent is an integer"""
        return all(e % 2 == 0 for e in self._c)

    def degree(self) -> int:
        """Largest doubled exponent"""
        if not self._c:
            raise DomainError("the zero polynomial has no degree")
        return max(self._c)

    def low_degree(self) -> int:
        if not self._c:
            raise DomainError("the zero polynomial has no degree")
        return min(self._c)

    def coefficient(self, half_exp: int) -> int:
        return self._c.get(half_exp, 0)

    def integer_coefficients(self) -> Dict[int, int]:
        """Integer exponent -> coefficient, only for integral polynomials"""
        if not self.is_integral():
            raise DomainError(f"{self} has half-integer exponents")
        return {e // 2: c for e, c in self._c.items()}

    def _coerce(self, other: Any) -> "HalfLaurent":
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfLaurent.const(other)
        return NotImplemented  # type: ignore[no-any-return]

    def __add__(self, other: Any) -> "HalfLaurent":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return HalfLaurent(_poly_add(self._c, o._c))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "HalfLaurent":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return HalfLaurent(_poly_add(self._c, o._c, sign=-1))

    def __rsub__(self, other: Any) -> "HalfLaurent":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self) -> "HalfLaurent":
        return HalfLaurent({e: -c for e, c in self._c.items()})

    def __mul__(self, other: Any) -> "HalfLaurent":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return HalfLaurent(_poly_mul(self._c, o._c))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HalfLaurent":
        if n < 0:
            raise DomainError("negative powers are not supported")
        out = HalfLaurent.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = HalfLaurent.const(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def shift(self, half_exp: int) -> "HalfLaurent":
        """Multiply by y^(half_exp/2)"""
        return HalfLaurent({e + half_exp: c for e, c in self._c.items()})

    def bar(self) -> "HalfLaurent":
        """Substitute y -> 1/y"""
        return HalfLaurent({-e: c for e, c in self._c.items()})

    def is_symmetric(self) -> bool:
        """Invariance under y -> 1/y"""
        return self == self.bar()

    def evaluate(self, point: int) -> int:
        """Exact value at y = 1 or y = -1

        Raises
        ------
        DomainError
            If y = -1 is requested on a polynomial with half-integer exponents, or the point is
            neither 1 nor -1
        """
        if point == 1:
            return sum(self._c.values())
        if point == -1:
            if not self.is_integral():
                raise DomainError(f"cannot evaluate {self} at y = -1: half-integer exponents")
            return sum(c if (e // 2) % 2 == 0 else -c for e, c in self._c.items())
        raise DomainError(f"only y = 1 and y = -1 are supported, not {point}")

    def divide_by_y_minus_one(self, times: int = 1) -> "HalfLaurent":
        """Exact division by (y - 1)^times

        Raises
        ------
        NotInImageError
            If the division leaves a remainder
        """
        if times == 0:
            return self
        quotient = _divide_by_x_minus_one(self.integer_coefficients(), times)
        if quotient is None:
            raise NotInImageError(f"{self} is not divisible by (y - 1)^{times}")
        return HalfLaurent.from_poly(quotient)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms: List[str] = []
        for e, c in sorted(self._c.items()):
            if e == 0:
                mono = ""
            elif e == 2:
                mono = "y"
            elif e % 2 == 0:
                mono = f"y^{e // 2}"
            else:
                mono = f"y^{e}/2"
            if mono == "":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append(("-" if c < 0 else "") + body if not terms else f"{sign} {body}")
        return " ".join(terms)

    def __repr__(self) -> str:
        return f"HalfLaurent({self._c})"

    def to_json(self) -> Dict[str, Any]:
        return {"half_exps": {str(e): c for e, c in self._c.items()}}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "HalfLaurent":
        return cls({int(e): int(c) for e, c in data["half_exps"].items()})


def laurent_arith(a: HalfLaurent, b: HalfLaurent, op: str) -> HalfLaurent:
    """Add or multiply two Laurent polynomials

    >>> str(laurent_arith(HalfLaurent.from_poly({-1: 1, 0: 1, 1: 1}),
    ...                   HalfLaurent.from_poly({-1: -1, 0: -1, 1: -1}), "add"))
    '0'
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown operation `{op}`")


def laurent_specialize(p: HalfLaurent, point: int) -> int:
    """Evaluate at y = 1 or y = -1

    >>> laurent_specialize(HalfLaurent.from_poly({-1: 1, 0: 10, 1: 1}), 1)
    12
    """
    return p.evaluate(point)


# -- motivic classes -------------------------------------------------------------------------

CurveTerm = Tuple[int, int, int, int]


def _clean_curve_terms(terms: Iterable[Sequence[int]]) -> Tuple[CurveTerm, ...]:
    acc: Dict[Tuple[int, int, int], int] = {}
    for term in terms:
        h, m, k, c = (int(t) for t in term)
        if h < 0 or m < 0:
            raise DomainError(f"curve atom needs genus >= 0 and punctures >= 0, got ({h}, {m})")
        acc[(h, m, k)] = acc.get((h, m, k), 0) + c
    return tuple((h, m, k, c) for (h, m, k), c in sorted(acc.items()) if c != 0)


def _curve_chi_y(h: int, m: int) -> Dict[int, int]:
    """chi_{-y} of a smooth projective genus-h curve minus m points, as y-exponent -> coeff"""
    return _clean({0: 1 - h - m, 1: 1 - h})


class MotivicClass:
    """Element of the motivic ring spanned by L^k and curve atoms, localized at L - 1

    The class is  (sum_k poly[k] L^k + sum c [C_h minus m points] L^k) / (L - 1)^loc_power.

    Parameters
    ----------
    poly : `mapping`
        L-exponent -> integer coefficient

    curve_terms : `sequence`
        Tuples (genus h, punctures m, L-exponent k, coefficient c)

    loc_power : `int`
        Power of the formal denominator (L - 1)

    Examples
    --------
    >>> L1 = MotivicClass.L_minus_one()
    >>> L1 * L1 == MotivicClass({2: 1, 1: -2, 0: 1})
    True
    """

    __slots__ = ("poly", "curve_terms", "loc_power")

    def __init__(
        self,
        poly: Optional[Mapping[int, int]] = None,
        curve_terms: Iterable[Sequence[int]] = (),
        loc_power: int = 0,
    ) -> None:
        if loc_power < 0:
            raise DomainError("loc_power must be nonnegative")
        self.poly: Dict[int, int] = _clean(poly or {})
        self.curve_terms: Tuple[CurveTerm, ...] = _clean_curve_terms(curve_terms)
        self.loc_power = int(loc_power)

    @classmethod
    def L(cls, power: int = 1) -> "MotivicClass":
        return cls({power: 1})

    @classmethod
    def const(cls, c: int) -> "MotivicClass":
        return cls({0: c})

    @classmethod
    def L_minus_one(cls, power: int = 1) -> "MotivicClass":
        """(L - 1)^power"""
        out = cls.const(1)
        for _ in range(power):
            out = out * cls({1: 1, 0: -1})
        return out

    @classmethod
    def curve(cls, genus: int, punctures: int = 0, coefficient: int = 1) -> "MotivicClass":
        """coefficient * [C_genus minus punctures points]"""
        return cls(curve_terms=[(genus, punctures, 0, coefficient)])

    def has_curve_terms(self) -> bool:
        return bool(self.curve_terms)

    def _numerator_normal_form(self) -> Tuple[Dict[int, int], Dict[int, Dict[int, int]]]:
        """Numerator as an L-polynomial plus L-polynomial multiples of [C_h], h >= 1

        Punctures are folded into the L-polynomial ([C_h - m] = [C_h] - m) and the genus-0 atom
        is rewritten as L + 1.
        """
        poly = dict(self.poly)
        atoms: Dict[int, Dict[int, int]] = {}
        for h, m, k, c in self.curve_terms:
            poly[k] = poly.get(k, 0) - m * c
            if h == 0:
                poly[k] = poly.get(k, 0) + c
                poly[k + 1] = poly.get(k + 1, 0) + c
            else:
                atoms.setdefault(h, {})
                atoms[h][k] = atoms[h].get(k, 0) + c
        return _clean(poly), {h: _clean(p) for h, p in atoms.items() if _clean(p)}

    def _lifted(self, loc_power: int) -> Tuple[Dict[int, int], Tuple[CurveTerm, ...]]:
        """Numerator rewritten over the larger denominator (L - 1)^loc_power"""
        extra = loc_power - self.loc_power
        factor = {0: 1}
        for _ in range(extra):
            factor = _poly_mul(factor, {1: 1, 0: -1})
        poly = _poly_mul(self.poly, factor)
        terms: List[CurveTerm] = []
        for h, m, k, c in self.curve_terms:
            for j, f in factor.items():
                terms.append((h, m, k + j, c * f))
        return poly, _clean_curve_terms(terms)

    def _coerce(self, other: Any) -> "MotivicClass":
        if isinstance(other, MotivicClass):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return MotivicClass.const(other)
        return NotImplemented  # type: ignore[no-any-return]

    def __add__(self, other: Any) -> "MotivicClass":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = max(self.loc_power, o.loc_power)
        a_poly, a_terms = self._lifted(p)
        b_poly, b_terms = o._lifted(p)
        return MotivicClass(_poly_add(a_poly, b_poly), a_terms + b_terms, p)

    __radd__ = __add__

    def __neg__(self) -> "MotivicClass":
        return MotivicClass(
            {k: -c for k, c in self.poly.items()},
            [(h, m, k, -c) for h, m, k, c in self.curve_terms],
            self.loc_power,
        )

    def __sub__(self, other: Any) -> "MotivicClass":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "MotivicClass":
        return (-self) + other

    def __mul__(self, other: Any) -> "MotivicClass":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.curve_terms and o.curve_terms:
            raise UnsupportedProductError("products of two curve atoms are not supported")
        poly = _poly_mul(self.poly, o.poly)
        terms: List[CurveTerm] = []
        for curvy, flat in ((self, o), (o, self)):
            for h, m, k, c in curvy.curve_terms:
                for j, f in flat.poly.items():
                    terms.append((h, m, k + j, c * f))
        return MotivicClass(poly, terms, self.loc_power + o.loc_power)

    __rmul__ = __mul__

    def scale_by_L_power(self, k: int) -> "MotivicClass":
        """Multiply by L^k"""
        return MotivicClass(
            {e + k: c for e, c in self.poly.items()},
            [(h, m, e + k, c) for h, m, e, c in self.curve_terms],
            self.loc_power,
        )

    def is_zero(self) -> bool:
        poly, atoms = self._numerator_normal_form()
        return not poly and not atoms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = MotivicClass.const(other)
        if not isinstance(other, MotivicClass):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self) -> int:
        reduced = self.reduce()
        poly, atoms = reduced._numerator_normal_form()
        return hash(
            (
                tuple(poly.items()),
                tuple((h, tuple(p.items())) for h, p in sorted(atoms.items())),
                reduced.loc_power,
            )
        )

    def reduce(self) -> "MotivicClass":
        """Cancel factors of (L - 1) against the denominator while the division is exact"""

        current = self
        while current.loc_power > 0:
            poly, atoms = current._numerator_normal_form()
            q_poly = _divide_by_x_minus_one(poly, 1)
            if q_poly is None:
                break
            q_atoms: Dict[int, Dict[int, int]] = {}
            exact = True
            for h, p in atoms.items():
                q = _divide_by_x_minus_one(p, 1)
                if q is None:
                    exact = False
                    break
                q_atoms[h] = q
            if not exact:
                break
            terms = [(h, 0, k, c) for h, p in q_atoms.items() for k, c in p.items()]
            current = MotivicClass(q_poly, terms, current.loc_power - 1)

        return current

    def chi_y(self) -> HalfLaurent:
        """chi_{-y} specialization: L -> y, [C_h minus m] -> (1 - h)(1 + y) - m

        Raises
        ------
        NotInImageError
            If the specialized numerator is not divisible by (y - 1)^loc_power
        """
        numerator: Dict[int, int] = dict(self.poly)
        for h, m, k, c in self.curve_terms:
            for e, v in _curve_chi_y(h, m).items():
                numerator[e + k] = numerator.get(e + k, 0) + c * v
        quotient = _divide_by_x_minus_one(numerator, self.loc_power)
        if quotient is None:
            raise NotInImageError(
                f"class {self} is not in the image of the unlocalized ring: chi_y numerator is "
                f"not divisible by (y - 1)^{self.loc_power}"
            )
        return HalfLaurent.from_poly(quotient)

    def euler(self) -> int:
        """Euler characteristic, chi_{-y} at y = 1 after exact division"""
        return self.chi_y().evaluate(1)

    def __str__(self) -> str:
        parts: List[str] = []
        for k, c in sorted(self.poly.items(), reverse=True):
            mono = "" if k == 0 else ("L" if k == 1 else f"L^{k}")
            parts.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        for h, m, k, c in self.curve_terms:
            atom = f"[C{h}-{m}]" if m else f"[C{h}]"
            mono = "" if k == 0 else ("*L" if k == 1 else f"*L^{k}")
            parts.append(f"{c}*{atom}{mono}")
        body = " + ".join(parts) if parts else "0"
        if self.loc_power:
            return f"({body})/(L-1)^{self.loc_power}"
        return body

    def __repr__(self) -> str:
        return (
            f"MotivicClass({self.poly}, curve_terms={list(self.curve_terms)}, "
            f"loc_power={self.loc_power})"
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "L_poly": {str(k): c for k, c in self.poly.items()},
            "curve_terms": [list(t) for t in self.curve_terms],
            "loc_power": self.loc_power,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "MotivicClass":
        return cls(
            {int(k): int(c) for k, c in data.get("L_poly", {}).items()},
            [tuple(t) for t in data.get("curve_terms", [])],
            int(data.get("loc_power", 0)),
        )


def motivic_arith(a: MotivicClass, b: Any, op: str) -> MotivicClass:
    """Add, multiply or shift classes; for `scale_by_L_power` the second argument is the
    exponent"""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale_by_L_power":
        return a.scale_by_L_power(int(b))
    raise DomainError(f"unknown operation `{op}`")


def motivic_specialize(c: MotivicClass, target: str) -> Union[HalfLaurent, int]:
    """Specialize a class to its chi_{-y} genus (`chi_y`) or Euler characteristic (`euler`)

    >>> str(motivic_specialize(MotivicClass({2: 1, 1: -3, 0: 3}), "chi_y"))
    '3 - 3*y + y^2'
    """
    if target == "chi_y":
        return c.chi_y()
    if target == "euler":
        return c.euler()
    raise DomainError(f"unknown specialization target `{target}`")


# -- truncated series ------------------------------------------------------------------------


class SeriesY:
    """Power series in q truncated at q^order (exclusive), coefficients in `HalfLaurent`

    Parameters
    ----------
    coefficients : `sequence`
        Coefficients of q^offset, q^(offset+1), ..., q^(order-1)

    offset : `int`
        Lowest exponent of q, may be negative

    order : `int`
        Truncation order; defaults to offset + len(coefficients)
    """

    __slots__ = ("coefficients", "offset", "order")

    def __init__(
        self,
        coefficients: Sequence[Scalar] = (),
        offset: int = 0,
        order: Optional[int] = None,
    ) -> None:
        coeffs = [c if isinstance(c, HalfLaurent) else HalfLaurent.const(c) for c in coefficients]
        if order is None:
            order = offset + len(coeffs)
        if len(coeffs) > order - offset:
            coeffs = coeffs[: order - offset]
        coeffs += [HalfLaurent()] * (order - offset - len(coeffs))
        self.coefficients: Tuple[HalfLaurent, ...] = tuple(coeffs)
        self.offset = offset
        self.order = order

    @classmethod
    def zero(cls, offset: int, order: int) -> "SeriesY":
        return cls((), offset, order)

    def coefficient(self, exponent: int) -> HalfLaurent:
        if exponent < self.offset:
            return HalfLaurent()
        if exponent >= self.order:
            raise DomainError(f"q^{exponent} lies beyond the truncation order {self.order}")
        return self.coefficients[exponent - self.offset]

    def __add__(self, other: "SeriesY") -> "SeriesY":
        offset = min(self.offset, other.offset)
        order = min(self.order, other.order)
        return SeriesY(
            [self.coefficient(e) + other.coefficient(e) for e in range(offset, order)],
            offset,
            order,
        )

    def __sub__(self, other: "SeriesY") -> "SeriesY":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "SeriesY":
        return SeriesY([c * x for x in self.coefficients], self.offset, self.order)

    def __mul__(self, other: "SeriesY") -> "SeriesY":
        offset = self.offset + other.offset
        # valid precision of a product of truncated series
        order = min(self.order + other.offset, other.order + self.offset)
        out = [HalfLaurent() for _ in range(offset, order)]
        for i, a in enumerate(self.coefficients):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coefficients):
                e = i + j
                if offset + e >= order:
                    break
                out[e] = out[e] + a * b
        return SeriesY(out, offset, order)

    def shift(self, k: int) -> "SeriesY":
        """Multiply by q^k"""
        return SeriesY(self.coefficients, self.offset + k, self.order + k)

    def truncate(self, order: int) -> "SeriesY":
        return SeriesY(self.coefficients, self.offset, min(order, self.order))

    def inverse(self) -> "SeriesY":
        """Inverse of a series with constant term +-1 and offset 0"""
        if self.offset != 0 or self.coefficients[0] not in (HalfLaurent.const(1), -1):
            raise DomainError("only series starting with +-1 at q^0 are invertible here")
        a0 = self.coefficients[0]
        out = [a0]
        for n in range(1, self.order):
            acc = HalfLaurent()
            for k in range(1, n + 1):
                acc = acc + self.coefficients[k] * out[n - k]
            out.append(-(a0 * acc))
        return SeriesY(out, 0, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesY):
            return NotImplemented
        lo = min(self.offset, other.offset)
        hi = min(self.order, other.order)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, hi))

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coefficients)
        return f"SeriesY(offset={self.offset}, order={self.order}, [{terms}])"

    def to_json(self) -> Dict[str, Any]:
        return {
            "offset": self.offset,
            "order": self.order,
            "coefficients": [c.to_json() for c in self.coefficients],
        }
