# -*- coding: utf-8 -*-
"""
Run configuration: a JSON document overlaid by command-line flags.
"""

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

from operators import DEFAULT_MAX_DENSE_DIM

from .errors import ValidationError

THREADS_ENV = "SPINWAVE_THREADS"
FORMATS = ("json", "csv", "text", "xlsx")


@dataclass
class RunConfig:
    dims: Optional[List[int]] = None
    boundary: str = "open"
    betas: Optional[List[float]] = None
    step: Optional[int] = None
    sectors: Optional[List[int]] = None
    factor: float = 2.0
    format: Optional[str] = None
    out: Optional[str] = None
    threads: Optional[int] = None
    max_dense_dim: int = DEFAULT_MAX_DENSE_DIM
    sector: Optional[int] = None
    sweep_dims: Optional[List[List[int]]] = None
    inject_fault: bool = False


KNOWN_KEYS = tuple(f.name for f in fields(RunConfig))


def load_config_file(path: str) -> Dict[str, Any]:
    """Read a JSON object; unknown keys are rejected"""
    source = Path(path)
    if not source.exists():
        raise ValidationError(f"config: file not found: {path}")
    try:
        document = json.loads(source.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"config: {path} is not valid JSON ({exc})")
    if not isinstance(document, dict):
        raise ValidationError(f"config: {path} must hold a JSON object")
    unknown = sorted(set(document) - set(KNOWN_KEYS))
    if unknown:
        raise ValidationError(f"config: unknown keys {unknown}")
    return document


def _int_list(name: str, value: Any) -> List[int]:
    if not isinstance(value, (list, tuple)) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ValidationError(f"{name}: expected a list of integers, got {value!r}")
    return [int(x) for x in value]


def _positive_int(name: str, value: Any) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValidationError(f"{name}: expected a positive integer, got {value!r}")
    return value


def resolve_threads(flag: Optional[int], configured: Optional[int], environ: Mapping[str, str] = os.environ) -> int:
    """Flag, then environment, then config file, then 1"""
    if flag is not None:
        return _positive_int("threads", flag)
    env_value = environ.get(THREADS_ENV)
    if env_value:
        try:
            return _positive_int(THREADS_ENV, int(env_value))
        except ValueError:
            raise ValidationError(f"{THREADS_ENV}: expected a positive integer, got {env_value!r}")
    if configured is not None:
        return _positive_int("threads", configured)
    return 1


def build_run_config(
    document: Optional[Mapping[str, Any]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
    environ: Mapping[str, str] = os.environ,
) -> RunConfig:
    """Merge file values and flag overrides (non-None flags win) and validate"""
    values: Dict[str, Any] = dict(document or {})
    unknown = sorted(set(values) - set(KNOWN_KEYS))
    if unknown:
        raise ValidationError(f"config: unknown keys {unknown}")
    flag_threads = None
    for key, value in (overrides or {}).items():
        if key not in KNOWN_KEYS:
            raise ValidationError(f"config: unknown keys ['{key}']")
        if key == "threads":
            flag_threads = value
        elif value is not None:
            values[key] = value

    cfg = RunConfig(**{k: v for k, v in values.items() if k != "threads"})
    cfg.threads = resolve_threads(flag_threads, values.get("threads"), environ)

    if cfg.dims is not None:
        cfg.dims = _int_list("dims", cfg.dims)
    if cfg.sectors is not None:
        cfg.sectors = _int_list("sectors", cfg.sectors)
    if cfg.sweep_dims is not None:
        if not isinstance(cfg.sweep_dims, list) or not cfg.sweep_dims:
            raise ValidationError("sweep_dims: expected a non-empty list of dims lists")
        cfg.sweep_dims = [_int_list("sweep_dims", d) for d in cfg.sweep_dims]
    if cfg.betas is not None:
        if not isinstance(cfg.betas, list) or not all(isinstance(b, (int, float)) and not isinstance(b, bool) for b in cfg.betas):
            raise ValidationError(f"betas: expected a list of numbers, got {cfg.betas!r}")
        cfg.betas = [float(b) for b in cfg.betas]
    if cfg.step is not None and (not isinstance(cfg.step, int) or cfg.step < 0):
        raise ValidationError(f"step: expected a non-negative integer, got {cfg.step!r}")
    if cfg.sector is not None and (not isinstance(cfg.sector, int) or cfg.sector < 0):
        raise ValidationError(f"sector: expected a non-negative integer, got {cfg.sector!r}")
    if not isinstance(cfg.factor, (int, float)) or cfg.factor <= 0:
        raise ValidationError(f"factor: expected a positive number, got {cfg.factor!r}")
    cfg.factor = float(cfg.factor)
    if cfg.format is not None and cfg.format not in FORMATS:
        raise ValidationError(f"format: expected one of {FORMATS}, got {cfg.format!r}")
    cfg.max_dense_dim = _positive_int("max_dense_dim", cfg.max_dense_dim)
    return cfg
