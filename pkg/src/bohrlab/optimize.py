# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.

import math
from typing import Callable, Tuple

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2


def golden_section_max(func: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> float:
    """
    Golden-section search for the maximiser of a unimodal function on [a, b].
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return (a + b) / 2
    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = func(c)
    yd = func(d)
    for _ in range(n):
        if yc > yd:
            b = d
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = func(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = func(d)
    return (a + d) / 2 if yc > yd else (c + b) / 2


def grid_argmax(func: Callable, a: float, b: float, points: int) -> Tuple[np.ndarray, int]:
    """
    Evaluate a vectorised function on an even grid; return the grid and the argmax index.
    """
    grid = np.linspace(a, b, points)
    values = np.asarray(func(grid), dtype=float)
    if not np.all(np.isfinite(values)):
        raise ArithmeticError("Objective is not finite on the grid")
    return grid, int(np.argmax(values))


def maximize_on_interval(
        func: Callable,
        a: float,
        b: float,
        grid_points: int = 10_000,
        tol: float = 1e-12
) -> Tuple[float, float]:
    """
    Maximise a vectorised function on [a, b]: grid scan, golden-section
    refinement around the best grid cell, then compare against both endpoints.

    :return: (maximiser, maximum)
    """
    grid, i = grid_argmax(func, a, b, grid_points)
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, len(grid) - 1)]
    refined = golden_section_max(lambda x: float(func(x)), lo, hi, tol)
    candidates = [refined, float(grid[i]), a, b]
    values = [float(func(x)) for x in candidates]
    best = int(np.argmax(values))
    return candidates[best], values[best]
