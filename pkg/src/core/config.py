"""
Configuration Settings - Central configuration for all grtab computations.

This module contains the Config class which stores every tunable limit in one
place. A Config is created once per command (or per test) and handed to the
subsystems that need it: the character sweep, the primeness search, the
cluster closure and the evaluation oracle.

Design Pattern:
    Configuration Object - Single source of truth for all settings

Architecture:
    - Config is instantiated once at command startup
    - Passed to all library calls that accept ``config=``
    - Environment variables (GRTAB_MAX_K, GRTAB_THREADS, GRTAB_LOG_LEVEL)
      override the defaults, CLI flags override the environment
    - Uses dataclass for clean syntax and default values

Usage Example:
    >>> config = Config()
    >>> config.MAX_K
    9
    >>> config.THREADS = 4  # parallel u-sweep
    >>> config.CATALOG_DIR.name
    'catalog'

Author: grtab developers
Version: 2.0
Last Modified: October 17, 2026
"""

import os
from dataclasses import dataclass
from pathlib import Path

ENV_MAX_K = "GRTAB_MAX_K"
ENV_THREADS = "GRTAB_THREADS"
ENV_LOG_LEVEL = "GRTAB_LOG_LEVEL"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class Config:
    """
    Global limits and defaults for every grtab computation.

    Categories:
        - Limits: permutation sizes and search budgets
        - Concurrency: worker threads for the u-sweep and the closure
        - Evaluation: sample counts and the random seed of the oracles
        - Logging: level for the rich console handler
        - File Paths: location of the example catalog

    Note:
        The character formula sums over a Bruhat interval of S_k, so MAX_K is
        the knob that decides what is computable. Values above HARD_MAX_K are
        rejected outright.

    Example:
        >>> config = Config(MAX_K=10)
        >>> config.HARD_MAX_K
        12
    """

    # ==================== LIMITS ====================
    # Sizes beyond these raise KTooLarge instead of running for hours

    MAX_K: int = 9  # Largest gap weight of a small-gaps tableau for ch(T)
                    # S_9 sweeps take minutes, S_10 can take hours
                    # Override with GRTAB_MAX_K or --max-k

    HARD_MAX_K: int = 12  # Absolute ceiling for any permutation computation
                          # (KL polynomials, immanants)

    PRIME_MAX_FACTORS: int = 12  # Most fundamental factors a primeness search splits

    LM_MAX_SEGMENTS: int = 16  # Most segments the 4231/3412 pattern scan accepts

    CLOSURE_MAX_DEPTH: int = 32      # BFS depth limit of the exchange-graph closure
    CLOSURE_MAX_SEEDS: int = 20000   # Stop exploring once this many clusters are known

    # ==================== CONCURRENCY ====================

    THREADS: int = 1  # Worker threads for the u-sweep of ch(T)
                      # The KL column is filled before workers start

    # ==================== EVALUATION ====================

    EVAL_SAMPLES: int = 20     # Points used by immanant-check and randomized oracles
    RANDOM_SEED: int = 20211   # Seed for reproducible evaluation points

    # ==================== LOGGING ====================

    LOG_LEVEL: str = "WARNING"  # Level of the RichHandler on stderr

    # ==================== FILE PATHS ====================

    CATALOG_DIR: Path = Path(__file__).parent.parent / "catalog"  # Up 2 levels to src/, then into catalog

    def __post_init__(self):
        """
        Apply environment overrides, validate limits, prepare directories.

        Raises:
            ValueError: If a limit is out of range or an override is not an integer
        """
        if os.environ.get(ENV_MAX_K):
            self.MAX_K = _int_from_env(ENV_MAX_K)
        if os.environ.get(ENV_THREADS):
            self.THREADS = _int_from_env(ENV_THREADS)
        if os.environ.get(ENV_LOG_LEVEL):
            self.LOG_LEVEL = os.environ[ENV_LOG_LEVEL].upper()

        self.validate()
        self.CATALOG_DIR = Path(self.CATALOG_DIR)
        self.CATALOG_DIR.mkdir(parents=True, exist_ok=True)

    def validate(self):
        """Check every limit; called again by the CLI after flag overrides."""
        if not 1 <= self.MAX_K <= self.HARD_MAX_K:
            raise ValueError(f"MAX_K must lie in [1, {self.HARD_MAX_K}], got {self.MAX_K}")
        if self.THREADS < 1:
            raise ValueError(f"THREADS must be positive, got {self.THREADS}")
        if self.LOG_LEVEL not in LOG_LEVELS:
            raise ValueError(f"LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}")
        if self.EVAL_SAMPLES < 1:
            raise ValueError("EVAL_SAMPLES must be positive")


def _int_from_env(name: str) -> int:
    raw = os.environ[name]
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
