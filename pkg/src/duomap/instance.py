"""Problem instances: equal-length strings, their duos, and duo-pair weights.

A duo is a pair of consecutive characters. An instance holds two strings of
the same length together with a weight specification that scores a duo of the
first string against an equal duo of the second. All positions are 1-based in
line with the external file format.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from .errors import (
    InstanceFormatError,
    LengthMismatchError,
    NonPositiveWeightError,
    NotPermutationError,
)

PROXIMITY_FORMS = ("inverse", "linear", "gaussian")

# Smallest positive double; keeps gaussian weights strictly positive when
# exp() underflows at extreme position distances.
_MIN_POSITIVE = 5e-324


@dataclass(frozen=True)
class Duo:
    """A pair of consecutive characters at a 1-based position in a string."""

    position: int
    chars: str


@dataclass(frozen=True)
class WeightSpec:
    """Weight function over pairs of equal duos.

    Kinds:
      unit       -- every pair weighs 1
      proximity  -- weight decays with the position distance |i - j|;
                    forms: inverse 1/(1+|i-j|), linear max(1, n-|i-j|),
                    gaussian exp(-(i-j)^2 / (2 sigma^2))
      matrix     -- explicit (i, j) -> weight table with a default fallback
    """

    kind: str
    form: str | None = None
    sigma: float = 1.0
    entries: dict[tuple[int, int], float] = field(default_factory=dict)
    default: float = 1.0

    def __post_init__(self) -> None:
        if self.kind == "unit":
            return
        if self.kind == "proximity":
            if self.form not in PROXIMITY_FORMS:
                raise InstanceFormatError(
                    f"weight.form must be one of {PROXIMITY_FORMS}, got {self.form!r}"
                )
            if not self.sigma > 0:
                raise InstanceFormatError("weight.sigma must be > 0")
            return
        if self.kind == "matrix":
            if not self.default > 0:
                raise NonPositiveWeightError(
                    f"matrix default weight must be > 0, got {self.default}"
                )
            for (i, j), w in self.entries.items():
                if not (isinstance(i, int) and isinstance(j, int) and i >= 1 and j >= 1):
                    raise InstanceFormatError(
                        f"matrix entry positions must be 1-based integers, got ({i}, {j})"
                    )
                if not w > 0:
                    raise NonPositiveWeightError(
                        f"matrix entry ({i}, {j}) has non-positive weight {w}"
                    )
            return
        raise InstanceFormatError(f"unknown weight kind {self.kind!r}")

    @classmethod
    def unit(cls) -> "WeightSpec":
        return cls(kind="unit")

    @classmethod
    def proximity(cls, form: str, sigma: float = 1.0) -> "WeightSpec":
        return cls(kind="proximity", form=form, sigma=sigma)

    @classmethod
    def matrix(
        cls, entries: dict[tuple[int, int], float], default: float = 1.0
    ) -> "WeightSpec":
        return cls(kind="matrix", entries=dict(entries), default=default)


@dataclass(frozen=True)
class Instance:
    """A validated problem instance. Immutable; safe to share across solves."""

    s1: str
    s2: str
    weight: WeightSpec
    strict: bool = True

    @property
    def n(self) -> int:
        return len(self.s1)


def extract_duos(s: str) -> list[Duo]:
    """Return the duos of ``s`` in left-to-right order (empty when len <= 1).

    Repeated duos are kept, distinguished by their positions.
    """
    return [Duo(position=p, chars=s[p - 1 : p + 1]) for p in range(1, len(s))]


def validate_instance(
    s1: str, s2: str, weight: WeightSpec, strict: bool = True
) -> Instance:
    """Validate the inputs and build an :class:`Instance`.

    In strict mode (the default) ``s2`` must be a character-multiset
    permutation of ``s1`` so that any selection of preserved duos extends to
    a full bijection. Relaxed mode skips that check; downstream, solving then
    reports preserved duos only, with no bijection reconstruction.

    Raises:
        LengthMismatchError: the strings differ in length.
        NotPermutationError: strict mode and the character multisets differ.
    """
    if len(s1) != len(s2):
        raise LengthMismatchError(
            f"strings must have equal length, got {len(s1)} and {len(s2)}"
        )
    if strict and Counter(s1) != Counter(s2):
        raise NotPermutationError(
            "second string is not a character permutation of the first"
        )
    return Instance(s1=s1, s2=s2, weight=weight, strict=strict)


def eval_weight(spec: WeightSpec, i: int, j: int, n: int) -> float:
    """Weight of mapping the duo at position ``i`` of s1 to position ``j`` of s2.

    Only ever evaluated on equal duos; all results are strictly positive.
    ``n`` is the string length (the linear proximity form depends on it).
    """
    if spec.kind == "unit":
        return 1.0
    if spec.kind == "proximity":
        d = abs(i - j)
        if spec.form == "inverse":
            return 1.0 / (1 + d)
        if spec.form == "linear":
            return float(max(1, n - d))
        # gaussian
        return max(math.exp(-(d * d) / (2.0 * spec.sigma * spec.sigma)), _MIN_POSITIVE)
    return spec.entries.get((i, j), spec.default)


# ---------------------------------------------------------------------------
# Instance file format (JSON-shaped). Keys: s1, s2, weight. Positions 1-based.
# ---------------------------------------------------------------------------


def weight_spec_to_obj(spec: WeightSpec) -> dict[str, Any]:
    if spec.kind == "unit":
        return {"kind": "unit"}
    if spec.kind == "proximity":
        return {"kind": "proximity", "form": spec.form, "sigma": spec.sigma}
    entries = [[i, j, w] for (i, j), w in sorted(spec.entries.items())]
    return {"kind": "matrix", "entries": entries, "default": spec.default}


def weight_spec_from_obj(obj: Any) -> WeightSpec:
    if not isinstance(obj, dict):
        raise InstanceFormatError("field 'weight' must be an object")
    kind = obj.get("kind")
    if kind == "unit":
        return WeightSpec.unit()
    if kind == "proximity":
        form = obj.get("form")
        sigma = obj.get("sigma", 1.0)
        if not isinstance(sigma, (int, float)):
            raise InstanceFormatError("field 'weight.sigma' must be a number")
        return WeightSpec.proximity(form=form, sigma=float(sigma))
    if kind == "matrix":
        raw = obj.get("entries", [])
        if not isinstance(raw, list):
            raise InstanceFormatError("field 'weight.entries' must be a list")
        entries: dict[tuple[int, int], float] = {}
        for item in raw:
            if not (isinstance(item, list) and len(item) == 3):
                raise InstanceFormatError(
                    "field 'weight.entries' items must be [i, j, weight] triples"
                )
            i, j, w = item
            if not isinstance(i, int) or not isinstance(j, int):
                raise InstanceFormatError(
                    "field 'weight.entries' positions must be integers"
                )
            entries[(i, j)] = float(w)
        default = obj.get("default", 1.0)
        if not isinstance(default, (int, float)):
            raise InstanceFormatError("field 'weight.default' must be a number")
        return WeightSpec.matrix(entries, default=float(default))
    raise InstanceFormatError(f"field 'weight.kind' has unknown value {kind!r}")


def instance_to_obj(instance: Instance) -> dict[str, Any]:
    return {
        "s1": instance.s1,
        "s2": instance.s2,
        "weight": weight_spec_to_obj(instance.weight),
    }


def instance_from_obj(obj: Any, strict: bool = True) -> Instance:
    if not isinstance(obj, dict):
        raise InstanceFormatError("instance file must contain a JSON object")
    for key in ("s1", "s2", "weight"):
        if key not in obj:
            raise InstanceFormatError(f"missing field '{key}'")
    if not isinstance(obj["s1"], str):
        raise InstanceFormatError("field 's1' must be a string")
    if not isinstance(obj["s2"], str):
        raise InstanceFormatError("field 's2' must be a string")
    spec = weight_spec_from_obj(obj["weight"])
    return validate_instance(obj["s1"], obj["s2"], spec, strict=strict)


def dump_instance(instance: Instance) -> str:
    return json.dumps(instance_to_obj(instance), indent=2) + "\n"


def parse_instance(text: str, strict: bool = True) -> Instance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"invalid JSON: {exc}") from exc
    return instance_from_obj(obj, strict=strict)


def load_instance(path: str, strict: bool = True) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read(), strict=strict)
