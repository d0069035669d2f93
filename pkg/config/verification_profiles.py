"""
Verification sweep profiles
"""

from dataclasses import dataclass


@dataclass
class VerificationProfile:
    """Parameters for a random verification sweep"""

    name: str
    order: int
    samples: int
    max_degree: int
    max_coeff: int
    description: str


VERIFICATION_PROFILES = {
    "quick": VerificationProfile(
        name="quick",
        order=8,
        samples=20,
        max_degree=3,
        max_coeff=3,
        description="Smoke test, well under a second"
    ),

    "acceptance": VerificationProfile(
        name="acceptance",
        order=16,
        samples=200,
        max_degree=5,
        max_coeff=4,
        description="Theorem identity on 200 random classes at order 16"
    ),

    "multiplicativity": VerificationProfile(
        name="multiplicativity",
        order=12,
        samples=100,
        max_degree=4,
        max_coeff=5,
        description="Cut-and-paste and SOD multiplicativity on 100 random pairs"
    ),

    "deep": VerificationProfile(
        name="deep",
        order=32,
        samples=50,
        max_degree=6,
        max_coeff=6,
        description="Higher order, larger classes"
    )
}


def get_verification_profile(profile_name: str = "acceptance") -> VerificationProfile:
    """Get verification profile configuration"""
    if profile_name not in VERIFICATION_PROFILES:
        raise ValueError(f"Unknown verification profile: {profile_name}")
    return VERIFICATION_PROFILES[profile_name]
