# src/vest/codec.py
import json
import logging
from typing import Optional, Tuple

from src.arith.field import FieldTag
from src.errors import MalformedInputError
from src.linalg.matrix import Matrix, Vector
from src.vest.instance import TargetVariant, VestInstance

logger = logging.getLogger(__name__)


def instance_to_json(inst: VestInstance, k: Optional[int] = None) -> dict:
    return {
        "field": inst.tag.to_json(),
        "dim": inst.d,
        "target": inst.target.value,
        "s": inst.s.to_json() if inst.s is not None else None,
        "v": inst.v.to_json() if inst.v is not None else None,
        "matrices": [t.to_json() for t in inst.transforms],
        "k": k,
    }


def _matrix(tag: FieldTag, rows, what: str) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedInputError(f"{what} must be an array of arrays")
    return Matrix.from_rows(tag, rows)


def instance_from_json(data: dict) -> Tuple[VestInstance, Optional[int]]:
    if not isinstance(data, dict):
        raise MalformedInputError("instance JSON must be an object")
    try:
        tag = FieldTag.from_json(data["field"])
        d = int(data["dim"])
        target = TargetVariant(data.get("target", TargetVariant.VECTOR_ZERO.value))
        matrices = data["matrices"]
    except KeyError as e:
        raise MalformedInputError(f"instance JSON is missing {e}") from None
    except (TypeError, ValueError) as e:
        raise MalformedInputError(f"bad instance JSON: {e}") from None
    if not isinstance(matrices, list):
        raise MalformedInputError("matrices must be a list")

    transforms = tuple(_matrix(tag, m, f"matrix {i}") for i, m in enumerate(matrices))
    s = _matrix(tag, data["s"], "s") if data.get("s") is not None else None
    v = Vector.of(tag, data["v"]) if data.get("v") is not None else None
    k = data.get("k")
    if k is not None and (not isinstance(k, int) or k < 0):
        raise MalformedInputError(f"k must be a nonnegative integer, got {k!r}")
    return VestInstance(tag, d, transforms, s, v, target), k


def load_instance(path: str) -> Tuple[VestInstance, Optional[int]]:
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"{path} is not valid JSON: {e}") from None
    inst, k = instance_from_json(data)
    logger.info(f"Loaded {inst.describe()} from {path}.")
    return inst, k


def dump_json(data, path: str):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2, sort_keys=False)
        f.write("\n")
