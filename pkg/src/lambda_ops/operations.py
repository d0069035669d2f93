"""
The two lambda-structures: Kapranov's sigma-operations on Z[L] and the
partition-series sigma-operations on the integer image of the dg measure
"""

import logging
from enum import Enum
from math import comb
from typing import Union

from src.series.lefschetz import LefschetzPoly
from src.series.truncated import (
    CoefficientRing,
    TruncatedSeries,
    series_inverse,
    series_mul,
)


logger = logging.getLogger(__name__)

ClassValue = Union[LefschetzPoly, int]


class LambdaStructure(str, Enum):
    """Which sigma-operation governs a coefficient ring"""
    GEOMETRIC = "geometric"      # sigma_t(1) = 1/(1-t), on Z[L] and on Z
    CATEGORICAL = "categorical"  # sigma_t(1) = prod_k 1/(1-t^k), on Z only


class LambdaStructureError(ValueError):
    """Raised when a value is handed to a lambda-structure that does not act on it"""


def _check_precision(precision: int) -> None:
    if precision < 0:
        raise ValueError(f"Precision must be >= 0, got {precision}")


def _line_factor(exponent: int, multiplicity: int, precision: int) -> TruncatedSeries:
    """(1 - L^exponent t)^(-multiplicity), coefficient by coefficient"""
    coeffs = []
    for n in range(precision + 1):
        if multiplicity >= 0:
            scalar = comb(multiplicity + n - 1, n) if n else 1
        else:
            scalar = (-1) ** n * comb(-multiplicity, n)
        coeffs.append(LefschetzPoly.monomial(exponent * n, scalar))
    return TruncatedSeries(coeffs, precision, CoefficientRing.LEFSCHETZ)


def sigma_series(c: ClassValue, precision: int) -> TruncatedSeries:
    """
    Geometric sigma_t(c) = sum_n sigma^n(c) t^n over Z[L]

    For c = sum_m a_m L^m this is prod_m (1 - L^m t)^(-a_m); negative a_m give
    the inverse factors, so sigma_t(-c) = sigma_t(c)^(-1).

    Args:
        c: Class in Z[L] (integers are read as multiples of the point)
        precision: Truncation order N

    Returns:
        sigma_t(c) modulo t^(N+1)
    """
    _check_precision(precision)
    c = LefschetzPoly.coerce(c)
    result = TruncatedSeries.one(precision, CoefficientRing.LEFSCHETZ)
    for exponent, multiplicity in c.items():
        result = series_mul(result, _line_factor(exponent, multiplicity, precision))
    logger.debug(f"sigma_t({c}) computed to order {precision}")
    return result


def sym_power(c: ClassValue, n: int) -> LefschetzPoly:
    """sigma^n(c), the class of the n-th symmetric power"""
    if n < 0:
        raise ValueError(f"Symmetric power index must be >= 0, got {n}")
    return sigma_series(c, n)[n]


def adams(c: ClassValue, k: int) -> LefschetzPoly:
    """psi^k(sum a_m L^m) = sum a_m L^(mk)"""
    if k < 1:
        raise ValueError(f"Adams operation index must be >= 1, got {k}")
    return LefschetzPoly.coerce(c).scale_exponents(k)


def lambda_series(c: ClassValue, precision: int) -> TruncatedSeries:
    """lambda_t(c) = sigma_{-t}(c)^(-1)"""
    _check_precision(precision)
    return series_inverse(sigma_series(c, precision).alternate())


def lambda_power(c: ClassValue, n: int) -> LefschetzPoly:
    """lambda^n(c), the n-th exterior power"""
    if n < 0:
        raise ValueError(f"Exterior power index must be >= 0, got {n}")
    return lambda_series(c, n)[n]


def euler_function_series(precision: int) -> TruncatedSeries:
    """
    prod_{k>=1} (1 - t^k) over Z by the pentagonal number theorem

    The only nonzero coefficients are (-1)^j at the generalized pentagonal
    numbers j(3j - 1)/2 and j(3j + 1)/2, about 2 sqrt(2N/3) of them.
    """
    _check_precision(precision)
    coeffs = [0] * (precision + 1)
    coeffs[0] = 1
    j = 1
    while j * (3 * j - 1) // 2 <= precision:
        sign = -1 if j % 2 else 1
        for pentagonal in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if pentagonal <= precision:
                coeffs[pentagonal] = sign
        j += 1
    return TruncatedSeries(coeffs, precision)


def partition_series(precision: int) -> TruncatedSeries:
    """prod_{k>=1} (1 - t^k)^(-1) over Z, the inverse of the sparse Euler function"""
    return series_inverse(euler_function_series(precision))


def _power_of_sparse_series(q: TruncatedSeries, exponent: int) -> TruncatedSeries:
    """
    q^exponent for q over Z with q_0 = 1, in O(N * nonzeros(q))

    From q g' = exponent q' g for g = q^exponent:
    n g_n = sum_{k=1}^{n} ((exponent + 1) k - n) q_k g_{n-k}. The division by n
    is exact over Z.
    """
    terms = [(k, a) for k, a in enumerate(q.coeffs) if k and a]
    g = [1]
    for n in range(1, q.precision + 1):
        acc = 0
        for k, a in terms:
            if k > n:
                break
            acc += ((exponent + 1) * k - n) * a * g[n - k]
        value, remainder = divmod(acc, n)
        if remainder:
            raise ArithmeticError(f"Inexact coefficient at t^{n} while raising to the power {exponent}")
        g.append(value)
    return TruncatedSeries(g, q.precision)


def sigma_series_categorical(d: int, precision: int) -> TruncatedSeries:
    """
    Categorical sigma_t(d) = P(t)^d over Z, P the partition generating function

    The categorical structure is only modelled on integers: sigma_t(1) = P(t),
    extended to Z by sigma_t(a + b) = sigma_t(a) sigma_t(b). It is evaluated
    as the (-d)-th power of the Euler function, which has O(sqrt(N)) terms.

    Raises:
        LambdaStructureError: If d is not an integer
    """
    if isinstance(d, bool) or not isinstance(d, int):
        raise LambdaStructureError(
            f"The categorical lambda-structure acts on integers only, got {type(d).__name__}; "
            "apply mu_dg first"
        )
    _check_precision(precision)
    return _power_of_sparse_series(euler_function_series(precision), -d)


def sigma(structure: LambdaStructure, value: ClassValue, precision: int) -> TruncatedSeries:
    """sigma_t(value) under the requested lambda-structure"""
    if structure is LambdaStructure.GEOMETRIC:
        return sigma_series(value, precision)
    if structure is LambdaStructure.CATEGORICAL:
        return sigma_series_categorical(value, precision)
    raise LambdaStructureError(f"Unknown lambda-structure: {structure}")
