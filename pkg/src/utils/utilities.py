"""
utilities.py

This module aims to provide several functionalities that are broader on scope than the rest of the source code:
finite differences, grid parsing, worker counts and CSV emission.
The functions are written in a functional programming style, with lazy evaluation where it pays off.
"""
from collections.abc import Callable, Generator, Iterable, Mapping
import math
import os
from pathlib import Path
from typing import Any, Optional

import numpy as np
import polars as pl

from src.abstractions import DomainError


def central_difference(
    fn: Callable[[float], float],
    x: float,
    step: float,
    richardson_step: float,
    disagreement: float,
) -> float:
    """
    Centered finite difference with a Richardson fallback.

    :param fn: Scalar function to differentiate.
    :param x: Evaluation point.
    :param step: Primary step.
    :param richardson_step: Smaller step used when the two estimates disagree.
    :param disagreement: Relative disagreement that triggers the fallback.
    :return: Derivative estimate.
    """
    coarse = (fn(x + step) - fn(x - step)) / (2.0 * step)
    fine = (fn(x + richardson_step) - fn(x - richardson_step)) / (2.0 * richardson_step)
    if abs(coarse - fine) <= disagreement * max(abs(coarse), abs(fine), 1e-300):
        return coarse
    ratio = (step / richardson_step) ** 2
    return (ratio * fine - coarse) / (ratio - 1.0)


def one_sided_difference(fn: Callable[[float], float], x: float, step: float) -> float:
    """
    Forward difference on [x, x + step] with one Richardson extrapolation.

    :param fn: Scalar function to differentiate.
    :param x: Left end of the stencil.
    :param step: Stencil width.
    :return: Derivative estimate, second order in step.
    """
    base = fn(x)
    full = (fn(x + step) - base) / step
    half = (fn(x + 0.5 * step) - base) / (0.5 * step)
    return 2.0 * half - full


def parse_grid(grid: str) -> np.ndarray:
    """
    Parse "start:stop:step" into an inclusive, evenly spaced grid.

    :param grid: Grid description.
    :return: Grid points.
    :raises DomainError: For malformed or empty grids.
    """
    try:
        start, stop, step = (float(part) for part in grid.split(":"))
    except ValueError as exc:
        raise DomainError(f"Grid must read start:stop:step, got '{grid}'") from exc
    if step <= 0.0 or stop < start or not all(math.isfinite(value) for value in (start, stop, step)):
        raise DomainError(f"Empty grid '{grid}'")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(count), 12)


def worker_count(default: Optional[int] = None) -> int:
    """
    Number of worker threads, capped by BE_THREADS when it is set.
    """
    available = default or os.cpu_count() or 1
    cap = os.getenv("BE_THREADS")
    if cap:
        try:
            return max(1, min(available, int(cap)))
        except ValueError as exc:
            raise DomainError(f"BE_THREADS must be an integer, got '{cap}'") from exc
    return available


def iter_rows(records: Iterable[Any]) -> Generator[dict[str, Any], None, None]:
    """Lazily dump pydantic records (aliases applied) or pass mappings through."""
    for record in records:
        if isinstance(record, Mapping):
            yield dict(record)
        else:
            yield record.model_dump(mode="json", by_alias=True)


def rows_to_frame(rows: Iterable[Mapping[str, Any]]) -> pl.DataFrame:
    return pl.DataFrame(list(rows))


def write_table(rows: Iterable[Mapping[str, Any]], out: Optional[str | Path]) -> str:
    """
    Write rows as CSV with floats at 12 significant digits.

    :param rows: Row mappings sharing the same keys.
    :param out: Destination path; when None the CSV text is returned only.
    :return: CSV text.
    """
    frame = rows_to_frame(rows).with_columns(
        pl.col(pl.Float64).map_elements(lambda value: f"{value:.12g}", return_dtype=pl.String)
    )
    text = frame.write_csv()
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")
    return text
