"""
Batch verification of the zeta identities over random classes
"""

import logging
from pathlib import Path
import sys
import time
from typing import Any, Callable, Dict, List, Optional

import numpy as np
from tqdm import tqdm

# Add project root to Python path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from config.settings import settings
from config.verification_profiles import VerificationProfile, get_verification_profile
from src.utils.random_classes import make_rng, random_class
from src.zeta.verification import (
    VerificationReport,
    verify_mobius_inversion,
    verify_mult_cat,
    verify_mult_kap,
    verify_pn_power,
    verify_theorem,
)


logger = logging.getLogger(__name__)

SWEEP_IDENTITIES = ["theorem", "mult", "mult-cat", "ppower", "mobius"]


class BatchVerifier:
    """Runs verifiers on random classes and collects statistics"""

    def __init__(self, profile: VerificationProfile, seed: Optional[int] = None,
                 progress: bool = True):
        """
        Args:
            profile: Order, sample count and class bounds
            seed: Seed for the numpy generator (settings.random_seed when None)
            progress: Show a tqdm progress bar on standard error
        """
        self.profile = profile
        self.seed = settings.random_seed if seed is None else seed
        self.rng = make_rng(self.seed)
        self.progress = progress

        self.runners: Dict[str, Callable[[], VerificationReport]] = {
            "theorem": self._check_theorem,
            "mult": self._check_mult_kap,
            "mult-cat": self._check_mult_cat,
            "ppower": self._check_pn_power,
            "mobius": self._check_mobius,
        }

        self.stats: Dict[str, Any] = {
            "profile": profile.name,
            "seed": self.seed,
            "order": profile.order,
            "total_checks": 0,
            "verified": 0,
            "failed": 0,
            "failures": [],
            "processing_time": 0.0,
            "avg_check_time": 0.0,
        }
        self._last_inputs: List[str] = []

        logger.info(f"Initialized BatchVerifier with profile: {profile.name} (seed {self.seed})")

    def _sample(self):
        return random_class(self.rng, self.profile.max_degree, self.profile.max_coeff)

    def _check_theorem(self) -> VerificationReport:
        c = self._sample()
        self._last_inputs = [str(c)]
        return verify_theorem(c, self.profile.order)

    def _check_mult_kap(self) -> VerificationReport:
        c, d = self._sample(), self._sample()
        self._last_inputs = [str(c), str(d)]
        return verify_mult_kap(c, d, self.profile.order)

    def _check_mult_cat(self) -> VerificationReport:
        c, d = self._sample(), self._sample()
        self._last_inputs = [str(c), str(d)]
        return verify_mult_cat(c, d, self.profile.order)

    def _check_pn_power(self) -> VerificationReport:
        c = self._sample()
        n = int(self.rng.integers(0, 3, endpoint=True))
        self._last_inputs = [str(c), str(n)]
        return verify_pn_power(c, n, self.profile.order)

    def _check_mobius(self) -> VerificationReport:
        c = self._sample()
        self._last_inputs = [str(c)]
        return verify_mobius_inversion(c, self.profile.order)

    def run(self, identities: Optional[List[str]] = None) -> Dict[str, Any]:
        """
        Verify every selected identity on profile.samples random inputs

        Args:
            identities: Names from SWEEP_IDENTITIES (all of them when None)

        Returns:
            Sweep statistics
        """
        identities = identities or list(SWEEP_IDENTITIES)
        unknown = [name for name in identities if name not in self.runners]
        if unknown:
            raise ValueError(f"Unknown sweep identity: {', '.join(unknown)}")

        logger.info(f"Sweeping {identities} with {self.profile.samples} samples at order {self.profile.order}")
        start_time = time.time()
        durations: List[float] = []

        for name in identities:
            runner = self.runners[name]
            for _ in tqdm(range(self.profile.samples), desc=name, disable=not self.progress):
                check_start = time.perf_counter()
                report = runner()
                durations.append(time.perf_counter() - check_start)

                self.stats["total_checks"] += 1
                if report.verified:
                    self.stats["verified"] += 1
                else:
                    self.stats["failed"] += 1
                    self.stats["failures"].append({
                        "identity": name,
                        "inputs": list(self._last_inputs),
                        "report": report.render(),
                    })
                    logger.error(f"{name} failed for {self._last_inputs}: {report.render()}")

        self.stats["processing_time"] = time.time() - start_time
        if durations:
            self.stats["avg_check_time"] = float(np.mean(durations))

        logger.info(f"Sweep completed: {self.stats['verified']}/{self.stats['total_checks']} verified")
        return self.stats


def format_statistics(stats: Dict[str, Any]) -> List[str]:
    """Human-readable summary lines"""
    lines = [
        f"Profile: {stats['profile']} (order {stats['order']}, seed {stats['seed']})",
        f"Checks: {stats['total_checks']}",
        f"Verified: {stats['verified']}",
        f"Failed: {stats['failed']}",
        f"Processing time: {stats['processing_time']:.2f} seconds",
        f"Average check time: {stats['avg_check_time'] * 1000:.2f} ms",
    ]
    for failure in stats["failures"]:
        lines.append(f"  {failure['identity']} {failure['inputs']}: {failure['report']}")
    return lines


def main():
    """Run the configured sweep profile over every identity"""
    logging.basicConfig(
        level=settings.log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    verifier = BatchVerifier(get_verification_profile(settings.sweep_profile),
                             progress=settings.progress_bar)
    stats = verifier.run()
    print("\n".join(format_statistics(stats)))
    return 0 if stats["failed"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
