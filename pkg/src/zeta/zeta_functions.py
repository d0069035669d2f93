"""
Motivic and categorical zeta-functions on the polynomial-in-L subring
"""

import logging
from typing import Union

from src.lambda_ops.operations import sigma_series, sigma_series_categorical
from src.series.lefschetz import LefschetzPoly, poly_eval_one
from src.series.truncated import (
    TruncatedSeries,
    series_map_coeffs,
    series_mul,
    series_substitute_tk,
)


logger = logging.getLogger(__name__)

ClassValue = Union[LefschetzPoly, int]


def zeta_motivic(c: ClassValue, precision: int) -> TruncatedSeries:
    """Kapranov's Z_mot(c, t) = sum [Sym^n c] t^n over Z[L]"""
    return sigma_series(c, precision)


def mu_dg(c: ClassValue) -> int:
    """
    The dg motivic measure on Z[L]

    mu_dg(L) = 1, so on polynomial classes the measure is evaluation at L = 1.
    """
    return poly_eval_one(c)


def zeta_categorical(c: ClassValue, precision: int) -> TruncatedSeries:
    """Z_cat(mu_dg(c), t) = P(t)^mu_dg(c) over Z"""
    return sigma_series_categorical(mu_dg(c), precision)


def zeta_theorem_rhs(c: ClassValue, precision: int) -> TruncatedSeries:
    """
    prod_{k>=1} mu_dg(Z_mot(c, t^k)), truncated at N

    The k-th factor only needs Z_mot to order N // k; factors with k > N are
    congruent to 1 and left out.
    """
    if precision < 0:
        raise ValueError(f"Precision must be >= 0, got {precision}")
    result = TruncatedSeries.one(precision)
    for k in range(1, precision + 1):
        inner = series_map_coeffs(zeta_motivic(c, precision // k), poly_eval_one)
        result = series_mul(result, series_substitute_tk(inner, k, precision))
    logger.debug(f"Theorem right-hand side for {c} computed to order {precision}")
    return result
