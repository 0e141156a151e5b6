import numpy as np


def derive_seed(seed: int, *keys: int) -> int:
    """Independent child seed for (seed, keys); same inputs, same output."""
    sequence = np.random.SeedSequence([int(seed), *(int(key) for key in keys)])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
