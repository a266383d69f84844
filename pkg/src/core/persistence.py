"""
Instance, result and stats files.

All files are YAML documents. Rationals are written as "a" or "a/b" strings
and only integers or such strings are accepted on read, so numbers never pass
through floating point. Dumps are deterministic: fixed key order, canonical
rational text, nested lists in flow style.
"""

import logging
from pathlib import Path
from typing import Any, Sequence

import yaml

from constants import RESULT_FORMAT_VERSION
from core.exceptions import InstanceFormatError, PersistenceException, ValidationException
from core.models import MolpInstance, RunStats, SolveResult, Vector
from utils.validation import format_rational, parse_rational

logger = logging.getLogger(__name__)

INSTANCE_KEYS = ("p", "n", "m", "C", "A", "b")


def _format_vector(values: Sequence) -> list[str]:
    return [format_rational(v) for v in values]


def _format_matrix(rows: Sequence[Sequence]) -> list[list[str]]:
    return [_format_vector(row) for row in rows]


def _parse_vector(values: Any, field_name: str) -> Vector:
    if not isinstance(values, list):
        raise InstanceFormatError(f"expected a list, got {type(values).__name__}", field_name)
    try:
        return tuple(parse_rational(v, field_name) for v in values)
    except InstanceFormatError:
        raise
    except ValidationException as e:
        raise InstanceFormatError(str(e), field_name)


def _parse_matrix(rows: Any, field_name: str) -> tuple[Vector, ...]:
    if not isinstance(rows, list):
        raise InstanceFormatError(f"expected a list of rows, got {type(rows).__name__}", field_name)
    return tuple(_parse_vector(row, f"{field_name}[{i}]") for i, row in enumerate(rows))


def _parse_count(data: dict, key: str) -> int:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InstanceFormatError(f"expected a non-negative integer, got {value!r}", key)
    return value


def dump_yaml(data: dict) -> str:
    """Deterministic YAML text for a mapping."""
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None, width=1000)


def write_atomic(path: Path, text: str) -> None:
    """
    Write ``text`` to ``path`` through a temporary file.

    Raises:
        PersistenceException: If the file cannot be written
    """
    path = Path(path)
    try:
        temp_path = path.with_suffix(path.suffix + ".tmp")
        temp_path.write_text(text)
        temp_path.replace(path)
    except OSError as e:
        raise PersistenceException(f"Failed to write {path}: {e}")
    logger.debug(f"Wrote {path}")


def _read_mapping(path: Path) -> dict:
    path = Path(path)
    if not path.exists():
        raise InstanceFormatError(f"File not found: {path}", "path")
    try:
        data = yaml.safe_load(path.read_text())
    except yaml.YAMLError as e:
        raise InstanceFormatError(f"invalid YAML: {e}", str(path))
    except OSError as e:
        raise PersistenceException(f"Failed to read {path}: {e}")
    if not isinstance(data, dict):
        raise InstanceFormatError("expected a mapping at the top level", str(path))
    return data


def instance_to_dict(instance: MolpInstance) -> dict:
    """Serializable form of an instance."""
    return {
        "p": instance.p,
        "n": instance.n,
        "m": instance.m,
        "C": _format_matrix(instance.C),
        "A": _format_matrix(instance.A),
        "b": _format_vector(instance.b),
    }


def instance_from_dict(data: dict) -> MolpInstance:
    """
    Parse and validate an instance mapping.

    Raises:
        InstanceFormatError: On missing keys, non-exact numbers or shape mismatches
    """
    missing = [key for key in INSTANCE_KEYS if key not in data]
    if missing:
        raise InstanceFormatError(f"missing keys: {', '.join(missing)}", "instance")

    p, n, m = (_parse_count(data, key) for key in ("p", "n", "m"))
    C = _parse_matrix(data["C"], "C")
    A = _parse_matrix(data["A"], "A")
    b = _parse_vector(data["b"], "b")

    if len(C) != p or any(len(row) != n for row in C):
        raise InstanceFormatError(f"expected a {p}x{n} matrix", "C")
    if len(A) != m or any(len(row) != n for row in A):
        raise InstanceFormatError(f"expected a {m}x{n} matrix", "A")
    if len(b) != m:
        raise InstanceFormatError(f"expected {m} entries, got {len(b)}", "b")

    try:
        return MolpInstance.from_rows(C, A, b)
    except ValidationException as e:
        raise InstanceFormatError(str(e), e.field)


def load_instance(path: Path) -> MolpInstance:
    """Read an instance file."""
    instance = instance_from_dict(_read_mapping(path))
    logger.debug(f"Loaded instance from {path}: p={instance.p}, n={instance.n}, m={instance.m}")
    return instance


def save_instance(instance: MolpInstance, path: Path) -> None:
    """Write an instance file."""
    write_atomic(path, dump_yaml(instance_to_dict(instance)))


def result_to_dict(result: SolveResult) -> dict:
    """Serializable form of a solve result; outcomes are sorted."""
    outcomes = sorted(result.efficient_extreme_outcomes)
    p = len(outcomes[0]) if outcomes else 0
    return {
        "version": RESULT_FORMAT_VERSION,
        "algorithm": result.algorithm,
        "p": p,
        "efficient_extreme_outcomes": _format_matrix(outcomes),
        "stats": result.stats.to_dict(),
    }


def result_from_dict(data: dict) -> SolveResult:
    """
    Parse a result mapping (without its final polytope).

    Raises:
        InstanceFormatError: If a field is missing or malformed
    """
    for key in ("algorithm", "efficient_extreme_outcomes"):
        if key not in data:
            raise InstanceFormatError(f"missing key {key}", "result")
    version = data.get("version", RESULT_FORMAT_VERSION)
    if version != RESULT_FORMAT_VERSION:
        logger.warning(f"Result format version mismatch: {version} (expected {RESULT_FORMAT_VERSION})")
    outcomes = _parse_matrix(data["efficient_extreme_outcomes"], "efficient_extreme_outcomes")
    stats = RunStats.from_dict(data.get("stats") or {})
    return SolveResult(str(data["algorithm"]), tuple(sorted(outcomes)), stats)


def save_result(result: SolveResult, path: Path) -> None:
    """Write a result file."""
    write_atomic(path, dump_yaml(result_to_dict(result)))


def load_result(path: Path) -> SolveResult:
    """Read a result file."""
    return result_from_dict(_read_mapping(path))


def save_stats(stats: RunStats, path: Path) -> None:
    """Write the stats mapping alone."""
    write_atomic(path, dump_yaml(stats.to_dict()))


__all__ = [
    "dump_yaml",
    "write_atomic",
    "instance_to_dict",
    "instance_from_dict",
    "load_instance",
    "save_instance",
    "result_to_dict",
    "result_from_dict",
    "save_result",
    "load_result",
    "save_stats",
]
