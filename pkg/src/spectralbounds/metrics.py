"""Shortest-path distances and the transmission sequences derived from them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import Graph, GraphError, is_connected

__all__ = [
    "DistanceData",
    "all_pairs_distances",
    "second_distance_degrees",
    "is_transmission_regular",
    "is_regular",
    "is_complete",
]


@dataclass(frozen=True)
class DistanceData:
    """Exact integer distance information of a connected graph.

    Attributes
    ----------
    dist : (n, n) int64 ndarray
        Shortest-path lengths.
    transmissions : (n,) int64 ndarray
        Row sums of ``dist``.
    second_degrees : (n,) int64 ndarray
        ``T_i = sum_j dist[i, j] * transmissions[j]``.
    diameter : int
        Largest distance (0 for the one-vertex graph).
    order : (n,) int ndarray
        Stable permutation sorting the transmissions nonincreasing.
    """

    dist: np.ndarray
    transmissions: np.ndarray
    second_degrees: np.ndarray
    diameter: int
    order: np.ndarray

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    @property
    def sorted_transmissions(self) -> np.ndarray:
        return self.transmissions[self.order]


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def all_pairs_distances(g: Graph) -> DistanceData:
    """BFS from every vertex.

    Raises
    ------
    GraphError
        If ``g`` is not connected.
    """
    if not is_connected(g):
        raise GraphError("graph not connected")
    dist = np.array([_bfs(g, s) for s in range(g.n)], dtype=np.int64)
    trans = dist.sum(axis=1)
    order = np.argsort(-trans, kind="stable")
    return DistanceData(
        dist=_readonly(dist),
        transmissions=_readonly(trans),
        second_degrees=_readonly(dist @ trans),
        diameter=int(dist.max()),
        order=_readonly(order),
    )


def second_distance_degrees(dd: DistanceData) -> np.ndarray:
    # T_i = sum_j d_ij D_j, the reading consistent with T_i playing the role
    # of s_i = sum_j a_ij r_j for the distance matrix.
    return dd.dist @ dd.transmissions


def is_transmission_regular(dd: DistanceData) -> bool:
    t = dd.transmissions
    return bool(np.all(t == t[0]))


def is_regular(g: Graph) -> bool:
    degs = g.degrees()
    return all(d == degs[0] for d in degs)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2
