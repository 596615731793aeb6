"""Seeded randomness for every stochastic component in the toolkit.

All random draws go through numpy's Philox bit generator, a counter-based
PRNG whose output is a pure function of (key, counter).  Per-trial streams
are derived from a master seed and a trial index through numpy's
SeedSequence hashing, so batch experiments produce bit-identical results
regardless of execution order or worker count.
"""

from __future__ import annotations

import secrets

import numpy as np

SeedLike = "int | np.random.SeedSequence"


def seed_sequence(seed) -> np.random.SeedSequence:
    """Coerce an int (or an existing SeedSequence) into a SeedSequence."""
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(int(seed))


def generator(seed) -> np.random.Generator:
    """Philox generator for the given seed."""
    return np.random.Generator(np.random.Philox(seed_sequence(seed)))


def trial_seed(master_seed, index: int) -> np.random.SeedSequence:
    """Derived seed for trial `index`, a hash of (master seed, index)."""
    root = seed_sequence(master_seed)
    return np.random.SeedSequence(
        entropy=root.entropy, spawn_key=root.spawn_key + (int(index),)
    )


def trial_generator(master_seed, index: int) -> np.random.Generator:
    """Philox generator for trial `index` under the master seed."""
    return np.random.Generator(np.random.Philox(trial_seed(master_seed, index)))


def fresh_seed() -> int:
    """Nondeterministic seed for CLI runs where the user supplied none."""
    return secrets.randbits(63)
