"""Measurement sampling with a splittable counter-based RNG."""

from __future__ import annotations

import numpy as np

from .state import StateVector


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Philox counter-based generator; distinct streams never collide."""
    return np.random.Generator(np.random.Philox(key=seed, counter=[stream, 0, 0, 0]))


def sample_measurements(state: StateVector, shots: int, seed: int,
                        stream: int = 0) -> dict[int, int]:
    """Multinomial sample of computational-basis outcomes.

    Returns {basis_index: count} for observed outcomes only; deterministic
    for a fixed (seed, stream).
    """
    if shots < 1:
        raise ValueError("shots must be >= 1")
    p = state.probabilities()
    p = p / p.sum()
    rng = make_rng(seed, stream)
    counts = rng.multinomial(shots, p)
    return {int(i): int(c) for i, c in enumerate(counts) if c > 0}
