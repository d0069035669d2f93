"""
Random classes in Z[L] for sweeps and tests
"""

import logging
from typing import Optional

import numpy as np

from src.series.lefschetz import LefschetzPoly


logger = logging.getLogger(__name__)


def random_class(rng: np.random.Generator, max_degree: int, max_coeff: int) -> LefschetzPoly:
    """
    Sample sum a_m L^m with deg <= max_degree and |a_m| <= max_coeff

    Args:
        rng: numpy random generator
        max_degree: Largest exponent that may appear
        max_coeff: Bound on the absolute value of each coefficient

    Returns:
        A LefschetzPoly (possibly zero)
    """
    coeffs = rng.integers(-max_coeff, max_coeff, size=max_degree + 1, endpoint=True)
    return LefschetzPoly({m: int(a) for m, a in enumerate(coeffs)})


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(seed)
