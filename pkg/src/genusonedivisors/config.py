from typing import Dict, Optional

from genusonedivisors.errors import InvalidDimensionException
from genusonedivisors.utils import get_seed

# check name -> (bound, samples); samples is 0 for exhaustive checks
DEFAULT_SWEEPS: Dict[str, tuple] = {
    "certificate_pairing": (30, 0),
    "ray_family": (50, 0),
    "sigma_identity": (100000, 0),
    "decomposition": (20, 10000),
    "monodromy_orbits": (100, 0),
    "automorphism_matrices": (0, 0),
    "signature_reduction": (1000, 2000),
    "pullback_coherence": (10, 0),
    "sym_cone": (10, 10000),
    "grr_coherence": (5, 200),
    "reid_tai_fixtures": (0, 0),
}


class VerifyConfig:
    """Configuration for the acceptance suite run by ``genusone verify``"""

    def __init__(self, seed: Optional[int] = None, max_bound: Optional[int] = None, workers: int = 1, **overrides):
        """Initialize suite configuration

        Args:
            seed (Optional[int]): Seed for the random sweeps, GENUSONE_VERIFY_SEED when omitted
            max_bound (Optional[int]): Cap applied to every sweep bound
            workers (int): Number of worker processes, 1 runs the checks in-process
            **overrides: Per-check bound overrides keyed by check name
        """
        if workers < 1:
            raise InvalidDimensionException(f"workers must be at least 1, got {workers}")
        if max_bound is not None and max_bound < 1:
            raise InvalidDimensionException(f"--max must be a positive integer, got {max_bound}")
        unknown = set(overrides) - set(DEFAULT_SWEEPS)
        if unknown:
            raise InvalidDimensionException(f"unknown checks {sorted(unknown)}")
        self.seed = get_seed() if seed is None else seed
        self.max_bound = max_bound
        self.workers = workers
        self.overrides = overrides

    def get_sweep_args(self, check: str) -> Dict:
        """Get the effective arguments of one check

        Args:
            check (str): Name of the check, a key of DEFAULT_SWEEPS

        Returns:
            Dict: ``bound`` and ``samples`` for the check
        """
        bound, samples = DEFAULT_SWEEPS[check]
        if self.max_bound is not None:
            bound = min(bound, self.max_bound)

        # per-check overrides win over the cap
        if check in self.overrides:
            bound = self.overrides[check]

        return {"bound": bound, "samples": samples}
