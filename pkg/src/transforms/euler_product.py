"""
Exponential (Euler product) transform, its Moebius inverse and the partition oracle
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.series.truncated import (
    NonUnitConstantTermError,
    TruncatedSeries,
    series_mul,
    series_pow,
    series_substitute_tk,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MobiusTable:
    """mu(1) ... mu(N); values[0] is mu(1)"""
    values: Tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= len(self.values):
            raise IndexError(f"Moebius table covers 1..{len(self.values)}, asked for {k}")
        return self.values[k - 1]

    def __len__(self) -> int:
        return len(self.values)


def mobius_table(limit: int) -> MobiusTable:
    """
    Moebius function up to limit by a linear sieve

    Args:
        limit: N >= 1

    Returns:
        MobiusTable with mu(k) for 1 <= k <= N
    """
    if limit < 1:
        raise ValueError(f"Moebius table needs N >= 1, got {limit}")
    mu = [0] * (limit + 1)
    mu[1] = 1
    is_composite = [False] * (limit + 1)
    primes: List[int] = []
    for i in range(2, limit + 1):
        if not is_composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > limit:
                break
            is_composite[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return MobiusTable(tuple(mu[1:]))


def _require_constant_one(f: TruncatedSeries, operation: str) -> None:
    if not f.constant_term == 1:
        raise NonUnitConstantTermError(f.constant_term, operation, required="1")


def _resolve_precision(f: TruncatedSeries, precision: Optional[int]) -> int:
    if precision is None:
        return f.precision
    if precision < 0:
        raise ValueError(f"Precision must be >= 0, got {precision}")
    return min(precision, f.precision)


def exp_transform(f: TruncatedSeries, precision: Optional[int] = None) -> TruncatedSeries:
    """
    f(t) -> prod_{k>=1} f(t^k), truncated at N

    Factors with k > N are 1 modulo t^(N+1) and are skipped.

    Raises:
        NonUnitConstantTermError: If the constant term of f is not 1
    """
    _require_constant_one(f, "Exponential transform")
    precision = _resolve_precision(f, precision)
    result = TruncatedSeries.one(precision, f.ring)
    for k in range(1, precision + 1):
        factor = series_substitute_tk(f.truncate(precision // k), k, precision)
        result = series_mul(result, factor)
    logger.debug(f"Exponential transform computed to order {precision}")
    return result


def mobius_transform(g: TruncatedSeries, precision: Optional[int] = None) -> TruncatedSeries:
    """
    g(t) -> prod_{k>=1} g(t^k)^mu(k), the inverse of exp_transform

    Raises:
        NonUnitConstantTermError: If the constant term of g is not 1
    """
    _require_constant_one(g, "Moebius transform")
    precision = _resolve_precision(g, precision)
    result = TruncatedSeries.one(precision, g.ring)
    if precision == 0:
        return result
    mu = mobius_table(precision)
    for k in range(1, precision + 1):
        if mu[k] == 0:
            continue
        # invert at the inner precision before spreading out by t -> t^k
        inner = series_pow(g.truncate(precision // k), mu[k])
        result = series_mul(result, series_substitute_tk(inner, k, precision))
    logger.debug(f"Moebius transform computed to order {precision}")
    return result


def partition_numbers(limit: int) -> List[int]:
    """
    p(0) ... p(N) by the parts-up-to-k recurrence

    Independent of the series code: p[n] += p[n - k] for k = 1..N.
    """
    if limit < 0:
        raise ValueError(f"Partition oracle needs N >= 0, got {limit}")
    p = [0] * (limit + 1)
    p[0] = 1
    for k in range(1, limit + 1):
        for n in range(k, limit + 1):
            p[n] += p[n - k]
    return p
