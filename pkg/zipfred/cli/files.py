"""File handling and report emission for the command-line front end."""

from pathlib import Path
from typing import Any, Dict, List, Optional, Union
import json
import logging
import math
import sys

import numpy as np
import pandas as pd

from ..core.exceptions import ValidationError

logger = logging.getLogger(__name__)


def read_alphabet(path: Union[str, Path]) -> List[str]:
    """Read newline-delimited symbols; symbol i (1-based) is on line i.

    Raises:
        ValidationError: If the file is unreadable, empty or repeats a symbol.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"Cannot read alphabet file {path}", {"error": str(e)}) from e
    symbols = [line for line in text.splitlines() if line != ""]
    if not symbols:
        raise ValidationError("Alphabet file is empty", {"path": str(path)})
    if len(set(symbols)) != len(symbols):
        raise ValidationError("Alphabet repeats a symbol", {"path": str(path)})
    return symbols


def read_tokens(path: Union[str, Path], unit: str) -> List[str]:
    """Read a token stream: whitespace-separated tokens, or characters of each line."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"Cannot read input file {path}", {"error": str(e)}) from e
    if unit == "char":
        return [ch for line in text.splitlines() for ch in line]
    return text.split()


def render_tokens(tokens: List[str], unit: str) -> str:
    """Inverse of read_tokens up to whitespace layout."""
    if unit == "char":
        return "".join(tokens) + "\n"
    return "\n".join(tokens) + "\n"


def tokens_to_symbols(tokens: List[str], alphabet: List[str]) -> List[int]:
    """Map tokens to 1-based symbol indices.

    Raises:
        ValidationError: On a token outside the alphabet.
    """
    index = {symbol: i for i, symbol in enumerate(alphabet, start=1)}
    symbols = []
    for position, token in enumerate(tokens):
        if token not in index:
            raise ValidationError("Token not in alphabet", {"position": position, "token": token})
        symbols.append(index[token])
    return symbols


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, np.generic):
        return _jsonable(value.item())
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def dumps_report(report: Dict[str, Any]) -> str:
    """Deterministic JSON: sorted keys, non-finite floats as null."""
    return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"


def emit(text: str, output: Optional[str]) -> None:
    """Write to ``output`` or stdout."""
    if output is None:
        sys.stdout.write(text)
        return
    Path(output).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {output}")


def emit_table(frame: pd.DataFrame, fmt: str, output: Optional[str], config: Dict[str, Any]) -> None:
    """Emit a table as CSV, or as JSON records with the run config."""
    if fmt == "csv":
        emit(frame.to_csv(index=False, lineterminator="\n"), output)
        return
    records = frame.astype(object).where(frame.notna(), None).to_dict(orient="records")
    emit(dumps_report({"config": config, "rows": records}), output)
