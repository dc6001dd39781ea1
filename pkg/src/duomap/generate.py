"""Seeded random instance generation.

All randomness flows from one explicit seed through Python's Mersenne
Twister (``random.Random``): s1 is drawn uniformly over the alphabet with
``randrange`` picks, s2 is ``random.shuffle`` applied to its characters, and
matrix weights use ``uniform``. The generator is fixed so files regenerate
byte-identically for a given seed.
"""

from __future__ import annotations

import random
import string

from .instance import Instance, WeightSpec, extract_duos, validate_instance

WEIGHT_KINDS = ("unit", "inverse", "linear", "gaussian", "matrix")


def random_instance(
    n: int,
    alphabet_size: int,
    weight_kind: str = "unit",
    seed: int = 0,
    sigma: float = 1.0,
) -> Instance:
    """Generate a strict-mode instance: s1 uniform, s2 a shuffle of s1.

    ``weight_kind`` is one of unit, inverse, linear, gaussian (the proximity
    forms) or matrix; matrix specs get a seeded uniform weight in [0.5, 2]
    on every equal-duo pair, with default 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if not 1 <= alphabet_size <= 26:
        raise ValueError("alphabet_size must be in [1, 26]")
    if weight_kind not in WEIGHT_KINDS:
        raise ValueError(f"weight_kind must be one of {WEIGHT_KINDS}")

    rng = random.Random(seed)
    alphabet = string.ascii_lowercase[:alphabet_size]
    s1 = "".join(alphabet[rng.randrange(alphabet_size)] for _ in range(n))
    chars = list(s1)
    rng.shuffle(chars)
    s2 = "".join(chars)

    if weight_kind == "unit":
        spec = WeightSpec.unit()
    elif weight_kind == "matrix":
        entries: dict[tuple[int, int], float] = {}
        right_by_chars: dict[str, list[int]] = {}
        for d in extract_duos(s2):
            right_by_chars.setdefault(d.chars, []).append(d.position)
        for d in extract_duos(s1):
            for j in right_by_chars.get(d.chars, ()):
                entries[(d.position, j)] = round(rng.uniform(0.5, 2.0), 6)
        spec = WeightSpec.matrix(entries, default=1.0)
    else:
        spec = WeightSpec.proximity(weight_kind, sigma=sigma)

    return validate_instance(s1, s2, spec)
