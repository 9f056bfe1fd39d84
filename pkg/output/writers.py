# -*- coding: utf-8 -*-
"""
Serialization of tables and reports: JSON, CSV, aligned text, Matrix Market.
CSV and text carry 17 significant digits; JSON uses the shortest repr that
round-trips exactly.
"""

import io
import json
import sys
from pathlib import Path
from typing import Any, Optional

import numpy as np
import pandas as pd
import scipy.io

FLOAT_FORMAT = "%.17g"


def _json_default(value: Any):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"cannot serialize {type(value).__name__}")


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, default=_json_default) + "\n"


def to_csv(frame: pd.DataFrame) -> str:
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def to_text(frame: pd.DataFrame, title: Optional[str] = None) -> str:
    body = frame.to_string(index=False, float_format=lambda x: FLOAT_FORMAT % x) if not frame.empty else "(no rows)"
    return f"{title}\n{body}\n" if title else f"{body}\n"


def emit(text: str, out: Optional[str] = None) -> None:
    """Write to the --out path, or stdout when none is given"""
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def export_matrix_market(op, path: str, comment: str = "") -> None:
    """Coordinate integer Matrix Market file of any operator with a .matrix"""
    scipy.io.mmwrite(path, op.matrix, comment=comment, field="integer")
