"""Class-description files.

A description is a JSON object with ``kind`` in {"zipf", "envelope",
"permutation", "explicit"} plus kind-specific fields. Real numbers are
written as decimal strings so that files round-trip without bit drift.
"""

from pathlib import Path
from typing import Any, Dict, Union
import json
import logging

from ..exceptions import ValidationError
from .classes import EnvelopeClass, PermutationClass
from .distribution import Distribution, ZipfClass

logger = logging.getLogger(__name__)

ClassDescription = Union[ZipfClass, EnvelopeClass, PermutationClass, Distribution]

KINDS = ("zipf", "envelope", "permutation", "explicit")


def _reals(values: Any, field_name: str) -> tuple:
    if not isinstance(values, list) or not values:
        raise ValidationError(f"'{field_name}' must be a non-empty list")
    try:
        return tuple(float(v) for v in values)
    except (TypeError, ValueError) as e:
        raise ValidationError(f"'{field_name}' holds a non-numeric entry") from e


def parse_class_description(data: Dict[str, Any]) -> ClassDescription:
    """Build a class object from a decoded description.

    Raises:
        ValidationError: On an unknown kind or missing/invalid fields.
    """
    if not isinstance(data, dict):
        raise ValidationError("Class description must be a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise ValidationError("Unknown class kind", {"kind": kind, "expected": "|".join(KINDS)})
    try:
        if kind == "zipf":
            return ZipfClass(float(data["alpha"]), int(data["k"]))
        if kind == "envelope":
            if "envelope" in data:
                env = EnvelopeClass(_reals(data["envelope"], "envelope"))
                if "k" in data and int(data["k"]) != env.k:
                    raise ValidationError("Envelope length disagrees with k", {"k": data["k"]})
                return env
            return EnvelopeClass.power_law(float(data["alpha"]), float(data["c"]), int(data["k"]))
        probs = _reals(data["probs"], "probs")
    except KeyError as e:
        raise ValidationError("Missing field in class description", {"field": str(e)}) from e
    if kind == "permutation":
        return PermutationClass(Distribution(probs))
    return Distribution(probs)


def load_class_description(path: Union[str, Path]) -> ClassDescription:
    """Read and parse a class-description JSON file."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ValidationError(f"Cannot read class description {path}", {"error": str(e)}) from e
    description = parse_class_description(data)
    logger.debug(f"Loaded {data['kind']} class from {path}")
    return description


def dump_class_description(description: ClassDescription, path: Union[str, Path]) -> None:
    """Write a class description as JSON."""
    with open(Path(path), "w", encoding="utf-8") as f:
        json.dump(description.to_dict(), f, indent=2, sort_keys=True)
        f.write("\n")
