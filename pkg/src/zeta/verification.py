"""
Coefficient-level verifiers for the zeta-function identities
"""

import logging
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Union

from pydantic import BaseModel, Field, model_validator

from src.lambda_ops.operations import sigma_series, sigma_series_categorical
from src.series.lefschetz import LefschetzPoly
from src.series.truncated import TruncatedSeries, series_map_coeffs, series_mul, series_pow
from src.transforms.euler_product import mobius_transform, partition_numbers
from src.zeta.zeta_functions import (
    mu_dg,
    zeta_categorical,
    zeta_motivic,
    zeta_theorem_rhs,
)


logger = logging.getLogger(__name__)

ClassValue = Union[LefschetzPoly, int]


class IdentityKind(str, Enum):
    """Identities the verifiers know how to check"""
    THEOREM = "THEOREM"
    MULT_KAP = "MULT_KAP"
    MULT_CAT = "MULT_CAT"
    PN_POWER = "PN_POWER"
    POINT_PARTITION = "POINT_PARTITION"
    MOBIUS_INVERSION = "MOBIUS_INVERSION"
    LAMBDA_HOMOMORPHISM = "LAMBDA_HOMOMORPHISM"


class Mismatch(BaseModel):
    """First coefficient where the two sides disagree"""
    index: int = Field(ge=0, description="Power of t")
    lhs: str = Field(description="Left-hand coefficient, canonical text")
    rhs: str = Field(description="Right-hand coefficient, canonical text")


class VerificationReport(BaseModel):
    """Outcome of an identity check"""
    identity: IdentityKind = Field(description="Identity that was checked")
    verified: bool = Field(description="True if every coefficient agreed")
    precision: int = Field(ge=0, description="Truncation order N")
    first_mismatch: Optional[Mismatch] = Field(default=None, description="Set only when verification failed")

    @model_validator(mode="after")
    def _mismatch_matches_flag(self) -> "VerificationReport":
        if self.verified != (self.first_mismatch is None):
            raise ValueError("verified must be true exactly when no mismatch is recorded")
        return self

    def render(self) -> str:
        """Single-line text form"""
        if self.verified:
            return f"VERIFIED (order {self.precision})"
        m = self.first_mismatch
        power = "t" if m.index == 1 else f"t^{m.index}"
        return f"FAILED at {power}: lhs={m.lhs}, rhs={m.rhs}"

    def to_json_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "identity": self.identity.value,
            "verified": self.verified,
            "precision": self.precision,
        }
        if self.first_mismatch is not None:
            data["mismatch"] = self.first_mismatch.model_dump()
        return data


def compare_series(identity: IdentityKind, lhs: TruncatedSeries, rhs: TruncatedSeries) -> VerificationReport:
    """
    Compare two series coefficient by coefficient

    Args:
        identity: Which identity the two sides belong to
        lhs: Left-hand side
        rhs: Right-hand side

    Returns:
        VerificationReport at the smaller of the two precisions
    """
    precision = min(lhs.precision, rhs.precision)
    for index in range(precision + 1):
        if lhs[index] != rhs[index]:
            mismatch = Mismatch(index=index, lhs=str(lhs[index]), rhs=str(rhs[index]))
            logger.info(f"{identity.value} failed at t^{index}: lhs={mismatch.lhs}, rhs={mismatch.rhs}")
            return VerificationReport(identity=identity, verified=False,
                                      precision=precision, first_mismatch=mismatch)
    logger.debug(f"{identity.value} verified to order {precision}")
    return VerificationReport(identity=identity, verified=True, precision=precision)


def verify_theorem(c: ClassValue, precision: int) -> VerificationReport:
    """Z_cat(mu_dg(c), t) against prod_k mu_dg(Z_mot(c, t^k))"""
    return compare_series(IdentityKind.THEOREM,
                          zeta_categorical(c, precision),
                          zeta_theorem_rhs(c, precision))


def verify_mult_kap(c: ClassValue, d: ClassValue, precision: int) -> VerificationReport:
    """Z_mot(c + d) against Z_mot(c) * Z_mot(d)"""
    total = LefschetzPoly.coerce(c) + LefschetzPoly.coerce(d)
    return compare_series(IdentityKind.MULT_KAP,
                          zeta_motivic(total, precision),
                          series_mul(zeta_motivic(c, precision), zeta_motivic(d, precision)))


def verify_mult_cat(c: ClassValue, d: ClassValue, precision: int) -> VerificationReport:
    """Z_cat(c + d) against Z_cat(c) * Z_cat(d)"""
    total = LefschetzPoly.coerce(c) + LefschetzPoly.coerce(d)
    return compare_series(IdentityKind.MULT_CAT,
                          zeta_categorical(total, precision),
                          series_mul(zeta_categorical(c, precision), zeta_categorical(d, precision)))


def verify_pn_power(c: ClassValue, n: int, precision: int) -> VerificationReport:
    """Z_cat(c x P^n) against Z_cat(c)^(n+1)"""
    if n < 0:
        raise ValueError(f"Projective space dimension must be >= 0, got {n}")
    product = LefschetzPoly.coerce(c) * LefschetzPoly.projective(n)
    return compare_series(IdentityKind.PN_POWER,
                          zeta_categorical(product, precision),
                          series_pow(zeta_categorical(c, precision), n + 1))


def verify_point_partition(precision: int) -> VerificationReport:
    """Z_cat(pt) against the partition numbers from the dynamic-programming oracle"""
    oracle: Sequence[int] = partition_numbers(precision)
    return compare_series(IdentityKind.POINT_PARTITION,
                          zeta_categorical(1, precision),
                          TruncatedSeries(oracle, precision))


def verify_mobius_inversion(c: ClassValue, precision: int) -> VerificationReport:
    """Moebius transform of Z_cat(c) against mu_dg applied to Z_mot(c)"""
    return compare_series(IdentityKind.MOBIUS_INVERSION,
                          mobius_transform(zeta_categorical(c, precision)),
                          series_map_coeffs(zeta_motivic(c, precision)))


def verify_lambda_homomorphism(c: ClassValue, precision: int) -> VerificationReport:
    """
    mu_dg(sigma_t(c)) against sigma_t^cat(mu_dg(c))

    This is expected to fail whenever mu_dg(c) != 0: mu_dg is a ring map but
    not a map of lambda-rings. For the point the first failure is at t^2.
    """
    return compare_series(IdentityKind.LAMBDA_HOMOMORPHISM,
                          series_map_coeffs(sigma_series(c, precision)),
                          sigma_series_categorical(mu_dg(c), precision))
