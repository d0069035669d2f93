"""
Truncated formal power series in t over Z or Z[L]
"""

import logging
from enum import Enum
from typing import Callable, List, Optional, Sequence, Tuple, Union

from src.series.lefschetz import LefschetzPoly, format_monomial, format_poly, poly_eval_one


logger = logging.getLogger(__name__)

Coefficient = Union[int, LefschetzPoly]


class CoefficientRing(str, Enum):
    """Coefficient ring of a truncated series"""
    INTEGER = "Z"
    LEFSCHETZ = "Z[L]"


class NonUnitConstantTermError(ValueError):
    """Raised when an operation needs a unit (or exactly 1) constant term"""

    def __init__(self, constant_term: Coefficient, operation: str, required: str = "+1 or -1"):
        self.constant_term = constant_term
        self.operation = operation
        super().__init__(
            f"{operation} requires constant term {required}, got {constant_term}"
        )


def _ring_zero(ring: CoefficientRing) -> Coefficient:
    return LefschetzPoly.zero() if ring is CoefficientRing.LEFSCHETZ else 0


def _ring_one(ring: CoefficientRing) -> Coefficient:
    return LefschetzPoly.one() if ring is CoefficientRing.LEFSCHETZ else 1


def _to_ring(value: Coefficient, ring: CoefficientRing) -> Coefficient:
    if ring is CoefficientRing.LEFSCHETZ:
        return LefschetzPoly.coerce(value)
    if isinstance(value, LefschetzPoly):
        if not value.is_constant():
            raise TypeError(f"Coefficient {value} does not lie in Z")
        return value.coefficient(0)
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"Cannot interpret {type(value).__name__} as an integer coefficient")
    return value


def _join_ring(*rings: CoefficientRing) -> CoefficientRing:
    if CoefficientRing.LEFSCHETZ in rings:
        return CoefficientRing.LEFSCHETZ
    return CoefficientRing.INTEGER


class TruncatedSeries:
    """
    Power series c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})

    Exactly N+1 coefficients are stored. Binary operations return the smaller
    of the two precisions; nothing is ever extended implicitly.
    """

    __slots__ = ("_coeffs", "_precision", "_ring")

    def __init__(self, coeffs: Sequence[Coefficient], precision: Optional[int] = None,
                 ring: Optional[CoefficientRing] = None):
        """
        Args:
            coeffs: Leading coefficients; padded with zeros or cut to precision + 1
            precision: N, the series is known modulo t^{N+1} (default len(coeffs) - 1)
            ring: Coefficient ring, inferred from the coefficients when omitted
        """
        coeffs = list(coeffs)
        if precision is None:
            if not coeffs:
                raise ValueError("Cannot infer precision from an empty coefficient list")
            precision = len(coeffs) - 1
        if precision < 0:
            raise ValueError(f"Precision must be >= 0, got {precision}")
        if ring is None:
            ring = (CoefficientRing.LEFSCHETZ
                    if any(isinstance(c, LefschetzPoly) for c in coeffs)
                    else CoefficientRing.INTEGER)

        normalized = [_to_ring(c, ring) for c in coeffs[:precision + 1]]
        normalized.extend(_ring_zero(ring) for _ in range(precision + 1 - len(normalized)))

        self._coeffs: Tuple[Coefficient, ...] = tuple(normalized)
        self._precision = precision
        self._ring = ring

    @classmethod
    def zero(cls, precision: int, ring: CoefficientRing = CoefficientRing.INTEGER) -> "TruncatedSeries":
        return cls([], precision, ring)

    @classmethod
    def one(cls, precision: int, ring: CoefficientRing = CoefficientRing.INTEGER) -> "TruncatedSeries":
        return cls([_ring_one(ring)], precision, ring)

    @property
    def coeffs(self) -> Tuple[Coefficient, ...]:
        return self._coeffs

    @property
    def precision(self) -> int:
        return self._precision

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def constant_term(self) -> Coefficient:
        return self._coeffs[0]

    def __getitem__(self, index: int) -> Coefficient:
        return self._coeffs[index]

    def __len__(self) -> int:
        return self._precision + 1

    def truncate(self, precision: int) -> "TruncatedSeries":
        """Forget every coefficient above t^precision"""
        if precision > self._precision:
            raise ValueError(
                f"Cannot raise precision from {self._precision} to {precision} by truncation"
            )
        return TruncatedSeries(self._coeffs, precision, self._ring)

    def alternate(self) -> "TruncatedSeries":
        """Substitute t -> -t"""
        return TruncatedSeries(
            [c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs)],
            self._precision, self._ring,
        )

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_add(self, -other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs], self._precision, self._ring)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, LefschetzPoly)) and not isinstance(other, bool):
            ring = _join_ring(self._ring, CoefficientRing.LEFSCHETZ
                              if isinstance(other, LefschetzPoly) else CoefficientRing.INTEGER)
            return TruncatedSeries([c * other for c in self._coeffs], self._precision, ring)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        return series_pow(self, exponent)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._precision == other._precision and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"TruncatedSeries({format_series(self)!r})"

    def __str__(self) -> str:
        return format_series(self)


def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise sum at the smaller precision"""
    precision = min(f.precision, g.precision)
    ring = _join_ring(f.ring, g.ring)
    return TruncatedSeries(
        [_to_ring(a, ring) + _to_ring(b, ring)
         for a, b in zip(f.coeffs[:precision + 1], g.coeffs[:precision + 1])],
        precision, ring,
    )


def _nonzero_terms(f: TruncatedSeries, precision: int) -> List[Tuple[int, Coefficient]]:
    return [(i, c) for i, c in enumerate(f.coeffs[:precision + 1]) if c]


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """
    Cauchy product truncated at the smaller precision

    Only nonzero coefficients of either factor are visited, so multiplying by
    a sparse factor such as f(t^k) costs O(N^2 / k) instead of O(N^2).
    """
    precision = min(f.precision, g.precision)
    ring = _join_ring(f.ring, g.ring)
    result: List[Coefficient] = [_ring_zero(ring)] * (precision + 1)
    g_terms = _nonzero_terms(g, precision)
    for i, a in _nonzero_terms(f, precision):
        limit = precision - i
        for j, b in g_terms:
            if j > limit:
                break
            result[i + j] = result[i + j] + a * b
    return TruncatedSeries(result, precision, ring)


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """
    Multiplicative inverse of a series whose constant term is a unit (+1 or -1)

    Raises:
        NonUnitConstantTermError: If the constant term is not +1 or -1
    """
    c0 = f.constant_term
    if not (c0 == 1 or c0 == -1):
        raise NonUnitConstantTermError(c0, "Series inversion")
    tail = _nonzero_terms(f, f.precision)[1:]
    inverse: List[Coefficient] = [c0]
    for n in range(1, f.precision + 1):
        acc = _ring_zero(f.ring)
        for i, a in tail:
            if i > n:
                break
            acc = acc + a * inverse[n - i]
        inverse.append(-(c0 * acc))
    return TruncatedSeries(inverse, f.precision, f.ring)


def series_pow(f: TruncatedSeries, exponent: int) -> TruncatedSeries:
    """
    f^exponent by binary exponentiation on truncated products

    Raises:
        NonUnitConstantTermError: If exponent < 0 and the constant term is not a unit
    """
    if exponent == 0:
        return TruncatedSeries.one(f.precision, f.ring)
    base = f
    if exponent < 0:
        base = series_inverse(f)
        exponent = -exponent
    result = None
    while exponent:
        if exponent & 1:
            result = base if result is None else series_mul(result, base)
        exponent >>= 1
        if exponent:
            base = series_mul(base, base)
    return result


def series_substitute_tk(f: TruncatedSeries, k: int, precision: Optional[int] = None) -> TruncatedSeries:
    """
    Substitute t -> t^k

    Args:
        f: Series to substitute into; only coefficients up to precision // k are read
        k: Positive integer
        precision: Precision of the result (defaults to the precision of f)

    Returns:
        g with g_{ik} = f_i and zeros elsewhere
    """
    if k < 1:
        raise ValueError(f"Substitution t -> t^k needs k >= 1, got {k}")
    if precision is None:
        precision = f.precision
    needed = precision // k
    if f.precision < needed:
        raise ValueError(
            f"Substituting t^{k} to order {precision} needs precision {needed}, series has {f.precision}"
        )
    coeffs: List[Coefficient] = [_ring_zero(f.ring)] * (precision + 1)
    for i in range(needed + 1):
        coeffs[i * k] = f[i]
    return TruncatedSeries(coeffs, precision, f.ring)


def series_map_coeffs(f: TruncatedSeries,
                      mapping: Callable[[Coefficient], Coefficient] = poly_eval_one) -> TruncatedSeries:
    """Apply a ring map to every coefficient (evaluation at L = 1 by default)"""
    return TruncatedSeries([mapping(c) for c in f.coeffs], f.precision)


def _format_t_power(power: int) -> str:
    return "t" if power == 1 else f"t^{power}"


def _format_term(coefficient: Coefficient, power: int, first: bool) -> str:
    if isinstance(coefficient, LefschetzPoly) and coefficient.term_count() > 1:
        body = f"({format_poly(coefficient)})"
        if power:
            body = f"{body}*{_format_t_power(power)}"
        return body if first else f" + {body}"

    if isinstance(coefficient, LefschetzPoly):
        ((exponent, value),) = coefficient.items()
    else:
        exponent, value = 0, coefficient
    magnitude = format_monomial(exponent, abs(value))
    if power == 0:
        body = magnitude
    elif magnitude == "1":
        body = _format_t_power(power)
    else:
        body = f"{magnitude}*{_format_t_power(power)}"
    if first:
        return f"-{body}" if value < 0 else body
    return f" - {body}" if value < 0 else f" + {body}"


def format_series(f: TruncatedSeries) -> str:
    """
    Canonical text form "c0 + c1*t + c2*t^2 + ... + O(t^{N+1})"

    Zero coefficients are omitted; multi-term Z[L] coefficients are parenthesized.
    The remainder writes t^1 as "t" like every other term, so order 0 ends in "O(t)".
    """
    parts = []
    for power, coefficient in enumerate(f.coeffs):
        if coefficient:
            parts.append(_format_term(coefficient, power, first=not parts))
    remainder = f"O({_format_t_power(f.precision + 1)})"
    if not parts:
        return remainder
    return "".join(parts) + f" + {remainder}"
