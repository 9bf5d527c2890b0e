import hashlib

import numpy as np


def stream_id(tag: str) -> int:
    """
    Stable 64-bit identifier of a stream tag (independent of PYTHONHASHSEED).
    """
    return int.from_bytes(hashlib.blake2b(tag.encode("utf-8"), digest_size=8).digest(), "little")


def make_generator(seed: int, trial: int = 0, stream: str = "default") -> np.random.Generator:
    """
    Counter-based generator keyed by (master seed, trial index, stream tag).

    Two different tags never share a stream, and trial k of a Monte Carlo loop
    draws the same numbers whichever worker evaluates it.
    """
    sequence = np.random.SeedSequence(entropy=int(seed) & (2**64 - 1), spawn_key=(int(trial), stream_id(stream)))
    return np.random.Generator(np.random.Philox(sequence))


def derive_seed(seed: int, trial: int = 0, stream: str = "seed") -> int:
    """
    A child 64-bit seed, used where an API takes an integer seed instead of a generator.
    """
    return int(make_generator(seed, trial, stream).integers(0, 2**63 - 1, dtype=np.int64))
