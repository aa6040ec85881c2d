"""Dense symmetric matrices of a graph and structural queries on them.

All matrices are float64 ndarrays built from exact integers, so symmetry is
exact. Returned arrays are read-only.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

import numpy as np

from .graph import Graph
from .metrics import DistanceData

__all__ = [
    "RowSums",
    "adjacency_matrix",
    "degree_matrix",
    "signless_laplacian",
    "distance_matrix",
    "transmission_matrix",
    "distance_signless_laplacian",
    "add_row_sum_diagonal",
    "row_sums",
    "extreme_entries",
    "is_irreducible",
    "is_nonnegative",
    "format_matrix",
    "dump_matrix",
]


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return _freeze(a)


def degree_matrix(g: Graph) -> np.ndarray:
    return _freeze(np.diag(np.asarray(g.degrees(), dtype=float)))


def signless_laplacian(g: Graph) -> np.ndarray:
    """``Q = D + A``."""
    q = adjacency_matrix(g).copy()
    q[np.diag_indices(g.n)] = g.degrees()
    return _freeze(q)


def distance_matrix(dd: DistanceData) -> np.ndarray:
    return _freeze(dd.dist.astype(float))


def transmission_matrix(dd: DistanceData) -> np.ndarray:
    return _freeze(np.diag(dd.transmissions.astype(float)))


def distance_signless_laplacian(dd: DistanceData) -> np.ndarray:
    """Transmission diagonal plus distance matrix; row ``i`` sums to ``2 D_i``."""
    m = dd.dist.astype(float)
    m[np.diag_indices(dd.n)] = dd.transmissions
    return _freeze(m)


def add_row_sum_diagonal(a: np.ndarray) -> np.ndarray:
    """``B = A + diag(row sums of A)``."""
    b = np.array(a, dtype=float)
    b[np.diag_indices(b.shape[0])] += b.sum(axis=1)
    return _freeze(b)


class RowSums(NamedTuple):
    values: np.ndarray
    sorted: np.ndarray
    order: np.ndarray


def row_sums(m: np.ndarray) -> RowSums:
    """Row sums plus a nonincreasing copy; ``sorted == values[order]``.

    The sort is stable so ties keep their original order.
    """
    r = np.asarray(m, dtype=float).sum(axis=1)
    order = np.argsort(-r, kind="stable")
    return RowSums(r, r[order], order)


def extreme_entries(m: np.ndarray) -> tuple[float, float]:
    """Largest diagonal entry and largest off-diagonal entry."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if n < 2:
        raise ValueError("no off-diagonal entries")
    off = m[~np.eye(n, dtype=bool)]
    return float(np.diag(m).max()), float(off.max())


def is_nonnegative(m: np.ndarray) -> bool:
    return bool(np.all(np.asarray(m) >= 0))


def is_irreducible(m: np.ndarray) -> bool:
    """Strong connectivity of the off-diagonal nonzero pattern.

    Raises ``ValueError`` on negative entries.
    """
    m = np.asarray(m)
    if not is_nonnegative(m):
        raise ValueError("is_irreducible requires a nonnegative matrix")
    n = m.shape[0]
    if n == 1:
        return True
    pattern = m != 0
    np.fill_diagonal(pattern, False)

    def reach(adj):
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(adj[u] & ~seen):
                seen[v] = True
                queue.append(v)
        return seen.all()

    return bool(reach(pattern) and reach(pattern.T))


def format_matrix(m: np.ndarray) -> str:
    """One row per line, entries with 17 significant digits."""
    return "".join(" ".join(f"{x:.17g}" for x in row) + "\n" for row in np.asarray(m))


def dump_matrix(m: np.ndarray, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix(m))
