"""Seeded random streams.

All stochastic operations take an explicit ``numpy.random.Generator`` backed
by the counter-based Philox engine, so any run can be replayed from its
seeds alone. Helper functions derive independent child streams
deterministically from a root seed plus a structured key.
"""

from __future__ import annotations

import numpy as np


def stream(seed: int) -> np.random.Generator:
    """Philox-backed generator for a single integer seed."""
    return np.random.Generator(np.random.Philox(key=np.uint64(seed & 0xFFFFFFFFFFFFFFFF)))


def child_seed(root_seed: int, *key: int) -> int:
    """Deterministic 64-bit child seed for (root_seed, key...).

    Independent of the order in which siblings are derived, so records can
    be rendered in any order or in parallel.
    """
    ss = np.random.SeedSequence(entropy=root_seed, spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def child_stream(root_seed: int, *key: int) -> np.random.Generator:
    return stream(child_seed(root_seed, *key))


def generator_state(gen: np.random.Generator) -> dict:
    """JSON-serializable snapshot of a generator's state."""
    return _to_jsonable(gen.bit_generator.state)


def restore_generator(state: dict) -> np.random.Generator:
    gen = np.random.Generator(np.random.Philox())
    gen.bit_generator.state = state
    return gen


def _to_jsonable(obj):
    if isinstance(obj, dict):
        return {k: _to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return [int(x) for x in obj.tolist()]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    return obj
