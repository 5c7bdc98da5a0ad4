"""Input validation helpers used by the estimators and public functions."""

from __future__ import annotations

from typing import Sequence

import numpy as np


def check_window(window: int) -> int:
    if not isinstance(window, int) or window < 1:
        raise ValueError(f"window must be a positive integer, got {window!r}")
    return window


def check_fraction(fraction: float, name: str = "fraction") -> float:
    f = float(fraction)
    if not 0.0 < f <= 1.0:
        raise ValueError(f"{name} must be in (0, 1], got {fraction!r}")
    return f


def check_probability(p: float, name: str = "probability") -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {p!r}")
    return p


def check_counts_2x2(k11: float, k12: float, k21: float, k22: float) -> tuple[float, ...]:
    cells = (k11, k12, k21, k22)
    for k in cells:
        if k < 0:
            raise ValueError(f"contingency cells must be non-negative, got {cells}")
    if sum(cells) <= 0:
        raise ValueError("contingency table is all zero")
    return tuple(float(k) for k in cells)


def check_distance_matrix(d: "np.ndarray | Sequence[Sequence[float]]") -> np.ndarray:
    arr = np.asarray(d, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"distance matrix must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("distance matrix contains non-finite entries")
    if not np.allclose(arr, arr.T, atol=1e-12):
        raise ValueError("distance matrix must be symmetric")
    if not np.allclose(np.diag(arr), 0.0, atol=1e-12):
        raise ValueError("distance matrix must have a zero diagonal")
    if arr.min() < -1e-12:
        raise ValueError("distances must be non-negative")
    return arr


def check_view_filter(zoom: int, focus: int, contrast: int, n_transcripts: int) -> None:
    if not 1 <= zoom <= n_transcripts:
        raise ValueError(f"zoom must be in [1, {n_transcripts}], got {zoom}")
    if focus < 1:
        raise ValueError(f"focus must be >= 1, got {focus}")
    if contrast < 1:
        raise ValueError(f"contrast must be >= 1, got {contrast}")
