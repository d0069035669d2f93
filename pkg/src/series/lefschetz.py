"""
Polynomials in the Lefschetz class L = [A^1] with integer coefficients
"""

import logging
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union


logger = logging.getLogger(__name__)


class LefschetzPoly:
    """Element of Z[L], stored as a finitely supported map exponent -> coefficient"""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None):
        """
        Build a polynomial in canonical form

        Args:
            coeffs: Mapping from exponent m >= 0 to coefficient a_m

        Raises:
            ValueError: If an exponent is negative
        """
        canonical: Dict[int, int] = {}
        for exponent, coefficient in (coeffs or {}).items():
            exponent = int(exponent)
            if exponent < 0:
                raise ValueError(f"Negative exponent {exponent} is not allowed in Z[L]")
            coefficient = int(coefficient)
            if coefficient:
                canonical[exponent] = coefficient
        self._coeffs = canonical
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls) -> "LefschetzPoly":
        return cls()

    @classmethod
    def one(cls) -> "LefschetzPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, value: int) -> "LefschetzPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LefschetzPoly":
        return cls({exponent: coefficient})

    @classmethod
    def lefschetz(cls) -> "LefschetzPoly":
        """The class L of the affine line"""
        return cls({1: 1})

    @classmethod
    def affine(cls, n: int) -> "LefschetzPoly":
        """[A^n] = L^n"""
        if n < 0:
            raise ValueError(f"Affine space dimension must be >= 0, got {n}")
        return cls({n: 1})

    @classmethod
    def projective(cls, n: int) -> "LefschetzPoly":
        """[P^n] = 1 + L + ... + L^n"""
        if n < 0:
            raise ValueError(f"Projective space dimension must be >= 0, got {n}")
        return cls({m: 1 for m in range(n + 1)})

    @classmethod
    def coerce(cls, value: Union["LefschetzPoly", int]) -> "LefschetzPoly":
        if isinstance(value, LefschetzPoly):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls.constant(value)
        raise TypeError(f"Cannot interpret {type(value).__name__} as an element of Z[L]")

    # Accessors

    @property
    def coeffs(self) -> Dict[int, int]:
        """Copy of the exponent -> coefficient map"""
        return dict(self._coeffs)

    def items(self) -> Iterator[Tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order"""
        return iter(sorted(self._coeffs.items()))

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    @property
    def degree(self) -> int:
        """Highest exponent, -1 for the zero polynomial"""
        return max(self._coeffs) if self._coeffs else -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(exponent == 0 for exponent in self._coeffs)

    def term_count(self) -> int:
        return len(self._coeffs)

    # Ring structure

    def __add__(self, other):
        try:
            other = LefschetzPoly.coerce(other)
        except TypeError:
            return NotImplemented
        result = dict(self._coeffs)
        for exponent, coefficient in other._coeffs.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return LefschetzPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "LefschetzPoly":
        return LefschetzPoly({m: -a for m, a in self._coeffs.items()})

    def __sub__(self, other):
        try:
            other = LefschetzPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = LefschetzPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        try:
            other = LefschetzPoly.coerce(other)
        except TypeError:
            return NotImplemented
        result: Dict[int, int] = {}
        for m1, a1 in self._coeffs.items():
            for m2, a2 in other._coeffs.items():
                result[m1 + m2] = result.get(m1 + m2, 0) + a1 * a2
        return LefschetzPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LefschetzPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Z[L] only supports non-negative integer powers, got {exponent!r}")
        result = LefschetzPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale_exponents(self, factor: int) -> "LefschetzPoly":
        """Substitute L -> L^factor"""
        if factor < 0:
            raise ValueError(f"Exponent scale factor must be >= 0, got {factor}")
        result: Dict[int, int] = {}
        for exponent, coefficient in self._coeffs.items():
            result[exponent * factor] = result.get(exponent * factor, 0) + coefficient
        return LefschetzPoly(result)

    def eval_one(self) -> int:
        """Value at L = 1"""
        return sum(self._coeffs.values())

    # Comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, LefschetzPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self._coeffs == LefschetzPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            # constants hash like the integers they compare equal to
            if self.is_constant():
                self._hash = hash(self.coefficient(0))
            else:
                self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"LefschetzPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def poly_add(p: LefschetzPoly, q: LefschetzPoly) -> LefschetzPoly:
    """Coefficient-wise sum"""
    return p + q


def poly_mul(p: LefschetzPoly, q: LefschetzPoly) -> LefschetzPoly:
    """Convolution product"""
    return p * q


def poly_eval_one(p: Union[LefschetzPoly, int]) -> int:
    """Evaluate at L = 1 (the value of the dg motivic measure on polynomial classes)"""
    if isinstance(p, int):
        return p
    return p.eval_one()


def format_monomial(exponent: int, magnitude: int) -> str:
    if exponent == 0:
        return str(magnitude)
    power = "L" if exponent == 1 else f"L^{exponent}"
    if magnitude == 1:
        return power
    return f"{magnitude}*{power}"


def format_poly(p: LefschetzPoly) -> str:
    """
    Canonical text form, descending exponents

    Examples: "L^2 + L + 1", "-2*L^3 + L", "0"
    """
    if p.is_zero():
        return "0"
    parts = []
    for index, (exponent, coefficient) in enumerate(sorted(p.items(), reverse=True)):
        body = format_monomial(exponent, abs(coefficient))
        if index == 0:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f" - {body}" if coefficient < 0 else f" + {body}")
    return "".join(parts)
