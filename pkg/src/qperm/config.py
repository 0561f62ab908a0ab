"""Run configuration with the documented defaults.

All numeric knobs used by the package live here so CLI runs are
reproducible from the flag values alone.
"""

from __future__ import annotations

from dataclasses import dataclass

#: magnitude below which linear-combination coefficients are dropped
ZERO_THRESHOLD = 1e-12


@dataclass(frozen=True)
class RunConfig:
    """Tolerances and budgets shared by the modules.

    tol             projection / magic-unitary / functional tolerance
    rank_threshold  singular values below rank_threshold * s_max count as zero
    max_word_len    default word length cap for symmetry / traciality sweeps
    series_order    truncation order of the convolution exponential
    seed            root seed for all sampling
    term_budget     cap on raw scalar terms in coproduct expansions
    """

    tol: float = 1e-9
    rank_threshold: float = 1e-8
    max_word_len: int = 4
    series_order: int = 25
    seed: int = 0
    term_budget: int = 10_000_000

    def __post_init__(self):
        if self.tol <= 0 or self.rank_threshold <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_word_len < 1 or self.series_order < 0:
            raise ValueError("word length / series order out of range")
        if self.term_budget < 1:
            raise ValueError("term budget must be positive")


DEFAULT_CONFIG = RunConfig()
