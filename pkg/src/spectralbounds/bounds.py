"""Spectral-radius bounds for nonnegative matrices and their graph versions.

Three generic results on nonnegative matrices are evaluated directly on a
matrix:

* the row-sum sandwich ``min r_i <= lambda <= max r_i``;
* the shifted bound ``lambda(A + diag(r)) <= lambda(A) + r_1``;
* the pairwise bound for ``B = A + diag(r)`` positive semidefinite,
  ``max_{i,j} (r_i + r_j + sqrt((r_i - r_j)^2 + 4 s_i s_j / (r_i r_j))) / 2``
  with ``s_i = sum_j a_ij r_j``;
* the indexed bound using the largest diagonal entry ``M`` and largest
  off-diagonal entry ``N``.

The graph-level bounds for the signless Laplacian ``Q`` and the distance
signless Laplacian ``DQ`` are evaluated a second time from degrees,
transmissions, second distance degrees and the diameter, so the two routes
can be checked against each other.

Bound names in reports follow the numbering of the source results
(``"T3.2-upper"`` and so on); matrix-level evaluations carry the matrix as a
prefix (``"DQ:L2.1-upper"``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

import numpy as np

from . import linalg
from .graph import FamilySpec, Graph, GraphError, is_connected
from .metrics import (
    DistanceData,
    all_pairs_distances,
    is_regular,
    is_transmission_regular,
)
from .spectra import SpectrumResult, check_psd, jacobi_eigenvalues, power_spectral_radius

__all__ = [
    "EQ_RTOL",
    "BoundValue",
    "BoundReport",
    "GraphAnalysis",
    "is_bipartite_semiregular",
    "rowsum_sandwich",
    "shifted_radius_bound",
    "psd_pairwise_bound",
    "indexed_diag_offdiag_bound",
    "indexed_bounds",
    "q_bounds",
    "dsl_bounds",
    "distance_radius_bounds",
    "closed_form_dsl",
    "StarCounterexample",
    "counterexample_star",
]

EQ_RTOL = 1e-8


def _tol(radius: float) -> float:
    return EQ_RTOL * max(1.0, abs(radius))


def _observed(value: float, radius: float | None) -> bool | None:
    if radius is None:
        return None
    return abs(value - radius) <= _tol(radius)


@dataclass(frozen=True)
class BoundValue:
    """One evaluated bound.

    ``iff`` records whether the source result claims its equality condition
    in both directions; ``equality_observed`` is ``None`` when no radius was
    supplied.
    """

    name: str
    side: str
    value: float
    equality_predicted: bool
    equality_observed: bool | None = None
    iff: bool = True
    index_detail: Any = None

    def holds(self, radius: float) -> bool:
        tol = _tol(radius)
        if self.side == "upper":
            return self.value >= radius - tol
        return self.value <= radius + tol

    def gap(self, radius: float) -> float:
        """Distance from the radius, positive when strict."""
        return self.value - radius if self.side == "upper" else radius - self.value


@dataclass
class BoundReport:
    """Bounds on a single spectral radius ``radius_name``."""

    subject: str
    radius_name: str
    radius: float
    bounds: list[BoundValue]
    radii: dict[str, float] = field(default_factory=dict)

    @property
    def sandwich_ok(self) -> bool:
        return all(b.holds(self.radius) for b in self.bounds)

    def __getitem__(self, name: str) -> BoundValue:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)

    def names(self) -> list[str]:
        return [b.name for b in self.bounds]

    def tightest(self) -> dict[str, str | None]:
        ups = [b for b in self.bounds if b.side == "upper"]
        los = [b for b in self.bounds if b.side == "lower"]
        return {
            "upper": min(ups, key=lambda b: b.value).name if ups else None,
            "lower": max(los, key=lambda b: b.value).name if los else None,
        }

    def unpredicted_equalities(self) -> list[BoundValue]:
        return [b for b in self.bounds if b.equality_observed and not b.equality_predicted]

    def unsound_predictions(self) -> list[BoundValue]:
        return [b for b in self.bounds if b.equality_predicted and b.equality_observed is False]


# ---------------------------------------------------------------------------
# Generic matrix bounds


def _constant(x) -> bool:
    x = np.asarray(x)
    return bool(np.all(x == x[0]))


def _radius_of(m, radius):
    if radius is None:
        m = np.asarray(m, dtype=float)
        if np.array_equal(m, m.T):
            radius = float(jacobi_eigenvalues(m).eigenvalues[0])
        else:
            radius = power_spectral_radius(m).spectral_radius
    return radius


def rowsum_sandwich(m, radius: float | None = None, prefix: str = "") -> tuple[BoundValue, BoundValue]:
    """Smallest and largest row sum of a nonnegative matrix.

    Both sides are attained exactly when all row sums are equal (for an
    irreducible matrix).
    """
    m = np.asarray(m, dtype=float)
    if not linalg.is_nonnegative(m):
        raise ValueError("row-sum sandwich requires a nonnegative matrix")
    radius = _radius_of(m, radius)
    r = linalg.row_sums(m)
    pred = _constant(r.values) and linalg.is_irreducible(m)
    lo, hi = float(r.sorted[-1]), float(r.sorted[0])
    return (
        BoundValue(prefix + "L2.1-lower", "lower", lo, pred, _observed(lo, radius)),
        BoundValue(prefix + "L2.1-upper", "upper", hi, pred, _observed(hi, radius)),
    )


def _require_irreducible_nonneg(a):
    if not linalg.is_nonnegative(a):
        raise ValueError("matrix must be nonnegative")
    if not linalg.is_irreducible(a):
        raise ValueError("matrix must be irreducible")


def shifted_radius_bound(
    a,
    radius_b: float | None = None,
    radius_a: float | None = None,
    prefix: str = "",
) -> BoundValue:
    """Bound ``lambda(A) + max_i r_i`` on the radius of ``A + diag(r)``."""
    a = np.asarray(a, dtype=float)
    _require_irreducible_nonneg(a)
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    radius_a = _radius_of(a, radius_a)
    radius_b = _radius_of(linalg.add_row_sum_diagonal(a), radius_b)
    r = a.sum(axis=1)
    value = radius_a + float(r.max())
    return BoundValue(prefix + "T2.2-upper", "upper", value, _constant(r), _observed(value, radius_b))


def _pairwise_max(r, s) -> tuple[float, int, int]:
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    ri, rj = r[:, None], r[None, :]
    vals = (ri + rj + np.sqrt((ri - rj) ** 2 + 4.0 * np.outer(s, s) / np.outer(r, r))) / 2.0
    i, j = np.unravel_index(np.argmax(vals), vals.shape)
    return float(vals[i, j]), int(i), int(j)


def psd_pairwise_bound(
    a,
    radius_b: float | None = None,
    b_spectrum: SpectrumResult | None = None,
    prefix: str = "",
) -> BoundValue:
    """Pairwise bound on the radius of ``B = A + diag(r)``.

    ``a`` must have a zero diagonal, positive row sums, and ``B`` must be
    positive semidefinite (checked with the Jacobi oracle; pass
    ``b_spectrum`` to reuse an existing decomposition). The maximising
    ordered pair is stored in ``index_detail``.
    """
    a = np.asarray(a, dtype=float)
    _require_irreducible_nonneg(a)
    if np.any(np.diag(a) != 0):
        raise ValueError("pairwise bound requires a zero diagonal")
    r = a.sum(axis=1)
    if np.any(r <= 0):
        raise ValueError("pairwise bound requires positive row sums")
    b = linalg.add_row_sum_diagonal(a)
    if b_spectrum is None:
        b_spectrum = jacobi_eigenvalues(b)
    if not check_psd(b, b_spectrum):
        raise ValueError("A + diag(r) is not positive semidefinite")
    if radius_b is None:
        radius_b = float(b_spectrum.eigenvalues[0])
    value, i, j = _pairwise_max(r, a @ r)
    return BoundValue(
        prefix + "T2.6-upper", "upper", value, _constant(r), _observed(value, radius_b),
        index_detail={"i": i, "j": j},
    )


def _indexed_values(r_sorted, big_m: float, big_n: float) -> np.ndarray:
    r = np.asarray(r_sorted, dtype=float)
    k = np.arange(len(r))  # i - 1
    disc = (r + big_n - big_m) ** 2 + 4.0 * k * (r[0] - r) * big_n
    return (r + big_m - big_n + np.sqrt(np.maximum(disc, 0.0))) / 2.0


def _indexed_equality(m: np.ndarray, order: np.ndarray, r_sorted: np.ndarray, i: int, big_m, big_n) -> bool:
    """Equality condition of the indexed bound at 1-based index ``i``.

    With ``r_1 = r_i`` the bound collapses to ``r_1`` and equality means
    constant row sums. Otherwise the leading ``i - 1`` rows (in sorted order)
    must carry ``M`` on the diagonal, every entry in those columns off the
    diagonal must equal ``N``, and the row sums must be constant on the
    leading block and on the rest.
    """
    irreducible = linalg.is_irreducible(m)
    if i == 1 or r_sorted[0] == r_sorted[i - 1]:
        return irreducible and _constant(r_sorted)
    top = order[: i - 1]
    cols = m[:, top].copy()
    cols[top, np.arange(i - 1)] = big_n  # diagonal positions are checked separately
    return bool(
        irreducible
        and np.all(np.diag(m)[top] == big_m)
        and np.all(cols == big_n)
        and _constant(r_sorted[: i - 1])
        and _constant(r_sorted[i - 1 :])
    )


def indexed_diag_offdiag_bound(a, i: int, radius: float | None = None, prefix: str = "") -> BoundValue:
    """Indexed bound at a single 1-based position ``i`` of the sorted row sums."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if not 1 <= i <= n:
        raise ValueError(f"index must be in 1..{n}")
    if not linalg.is_nonnegative(a):
        raise ValueError("matrix must be nonnegative")
    radius = _radius_of(a, radius)
    rs = linalg.row_sums(a)
    big_m, big_n = linalg.extreme_entries(a)
    value = float(_indexed_values(rs.sorted, big_m, big_n)[i - 1])
    pred = _indexed_equality(a, rs.order, rs.sorted, i, big_m, big_n)
    return BoundValue(
        f"{prefix}T2.10-upper[i={i}]", "upper", value, pred, _observed(value, radius),
        index_detail={"i": i, "vertex": int(rs.order[i - 1])},
    )


def indexed_bounds(a, radius: float | None = None, prefix: str = "") -> BoundValue:
    """Indexed bound at every position; reports the smallest.

    ``index_detail`` lists, per 1-based position, the vertex, the value and
    the predicted equality. The best value is predicted to be attained when
    any position's condition holds.
    """
    a = np.asarray(a, dtype=float)
    if not linalg.is_nonnegative(a):
        raise ValueError("matrix must be nonnegative")
    radius = _radius_of(a, radius)
    rs = linalg.row_sums(a)
    big_m, big_n = linalg.extreme_entries(a)
    values = _indexed_values(rs.sorted, big_m, big_n)
    detail = []
    for k, v in enumerate(values, start=1):
        pred = _indexed_equality(a, rs.order, rs.sorted, k, big_m, big_n)
        detail.append({
            "i": k,
            "vertex": int(rs.order[k - 1]),
            "value": float(v),
            "equality_predicted": pred,
            "equality_observed": _observed(float(v), radius),
        })
    best = float(values.min())
    pred = any(d["equality_predicted"] and d["value"] == best for d in detail)
    return BoundValue(prefix + "T2.10-upper", "upper", best, pred, _observed(best, radius), index_detail=detail)


# ---------------------------------------------------------------------------
# Graph level


def is_bipartite_semiregular(g: Graph) -> bool:
    """Bipartite, with a common degree inside each colour class."""
    if not is_connected(g):
        return False
    colour = [-1] * g.n
    colour[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if colour[v] < 0:
                colour[v] = 1 - colour[u]
                stack.append(v)
            elif colour[v] == colour[u]:
                return False
    degs = g.degrees()
    for c in (0, 1):
        part = {degs[v] for v in range(g.n) if colour[v] == c}
        if len(part) > 1:
            return False
    return True


class GraphAnalysis:
    """Matrices and oracle spectra of one connected graph, computed lazily
    and at most once."""

    def __init__(self, g: Graph):
        if g.n < 2:
            raise GraphError("bounds need n >= 2")
        if not is_connected(g):
            raise GraphError("graph not connected")
        self.g = g

    @cached_property
    def dd(self) -> DistanceData:
        return all_pairs_distances(self.g)

    @cached_property
    def adjacency(self):
        return linalg.adjacency_matrix(self.g)

    @cached_property
    def signless_laplacian(self):
        return linalg.signless_laplacian(self.g)

    @cached_property
    def distance(self):
        return linalg.distance_matrix(self.dd)

    @cached_property
    def dsl(self):
        return linalg.distance_signless_laplacian(self.dd)

    @cached_property
    def spec_adjacency(self) -> SpectrumResult:
        return jacobi_eigenvalues(self.adjacency)

    @cached_property
    def spec_signless_laplacian(self) -> SpectrumResult:
        return jacobi_eigenvalues(self.signless_laplacian)

    @cached_property
    def spec_distance(self) -> SpectrumResult:
        return jacobi_eigenvalues(self.distance)

    @cached_property
    def spec_dsl(self) -> SpectrumResult:
        return jacobi_eigenvalues(self.dsl)

    @property
    def lambda1(self) -> float:
        return float(self.spec_adjacency.eigenvalues[0])

    @property
    def q1(self) -> float:
        return float(self.spec_signless_laplacian.eigenvalues[0])

    @property
    def delta1(self) -> float:
        return float(self.spec_distance.eigenvalues[0])

    @property
    def delta1Q(self) -> float:
        return float(self.spec_dsl.eigenvalues[0])


def _analysis(g_or_ctx) -> GraphAnalysis:
    return g_or_ctx if isinstance(g_or_ctx, GraphAnalysis) else GraphAnalysis(g_or_ctx)


def _indexed_formula_report(name, values, preds, radius, order) -> BoundValue:
    detail = [
        {
            "i": k,
            "vertex": int(order[k - 1]),
            "value": float(v),
            "equality_predicted": bool(p),
            "equality_observed": _observed(float(v), radius),
        }
        for k, (v, p) in enumerate(zip(values, preds), start=1)
    ]
    best = float(np.min(values))
    pred = any(d["equality_predicted"] and d["value"] == best for d in detail)
    return BoundValue(name, "upper", best, pred, _observed(best, radius), index_detail=detail)


def q_bounds(g, label: str = "") -> BoundReport:
    """All bounds on the signless Laplacian spectral radius ``q_1``.

    Degree-formula versions (``C2.3``, ``C2.9``, ``C2.11``) are computed from
    the degree sequence; the same results evaluated on the matrices appear
    under the ``A:``/``Q:`` prefixes.
    """
    ctx = _analysis(g)
    g = ctx.g
    q1, lam1 = ctx.q1, ctx.lambda1
    degs = np.asarray(g.degrees(), dtype=float)
    regular = is_regular(g)
    bounds: list[BoundValue] = []

    bounds.extend(rowsum_sandwich(ctx.signless_laplacian, q1, prefix="Q:"))
    bounds.append(shifted_radius_bound(ctx.adjacency, q1, lam1, prefix="A:"))
    bounds.append(psd_pairwise_bound(ctx.adjacency, q1, ctx.spec_signless_laplacian, prefix="A:"))
    bounds.append(indexed_bounds(ctx.signless_laplacian, q1, prefix="Q:"))

    v = lam1 + float(degs.max())
    bounds.append(BoundValue("C2.3-upper", "upper", v, regular, _observed(v, q1)))

    # s_i = sum of the degrees of the neighbours of v_i
    s = np.array([sum(g.degrees()[k] for k in g.adjacency[i]) for i in range(g.n)], dtype=float)
    v, i, j = _pairwise_max(degs, s)
    bounds.append(BoundValue("C2.9-upper", "upper", v, regular, _observed(v, q1), index_detail={"i": i, "j": j}))

    order = np.argsort(-degs, kind="stable")
    d = degs[order]
    n = g.n
    k = np.arange(n)
    vals = (2 * d + d[0] - 1 + np.sqrt((2 * d + 1 - d[0]) ** 2 + 8 * k * (d[0] - d))) / 2
    preds = [
        regular or (i >= 2 and np.all(d[: i - 1] == n - 1) and _constant(d[i - 1 :]))
        for i in range(1, n + 1)
    ]
    bounds.append(_indexed_formula_report("C2.11-upper", vals, preds, q1, order))

    return BoundReport(label, "q1", q1, bounds, {"q1": q1, "lambda1": lam1})


def dsl_bounds(g, label: str = "") -> BoundReport:
    """All bounds on the distance signless Laplacian spectral radius."""
    ctx = _analysis(g)
    dd = ctx.dd
    rho, delta1 = ctx.delta1Q, ctx.delta1
    tr = dd.transmissions.astype(float)
    T = dd.second_degrees.astype(float)
    treg = is_transmission_regular(dd)
    bounds: list[BoundValue] = []

    bounds.extend(rowsum_sandwich(ctx.dsl, rho, prefix="DQ:"))
    bounds.append(shifted_radius_bound(ctx.distance, rho, delta1, prefix="D:"))
    bounds.append(psd_pairwise_bound(ctx.distance, rho, ctx.spec_dsl, prefix="D:"))
    idx = indexed_bounds(ctx.dsl, rho, prefix="DQ:")
    bounds.append(idx)

    lo, hi = 2 * float(tr.min()), 2 * float(tr.max())
    bounds.append(BoundValue("T3.2-lower", "lower", lo, treg, _observed(lo, rho)))
    bounds.append(BoundValue("T3.2-upper", "upper", hi, treg, _observed(hi, rho)))

    d1 = float(tr.max())
    bounds.append(BoundValue("T3.4-lower", "lower", d1, False, _observed(d1, rho), iff=False))
    v = delta1 + d1
    bounds.append(BoundValue("T3.4-upper", "upper", v, treg, _observed(v, rho)))

    v, i, j = _pairwise_max(tr, T)
    bounds.append(BoundValue("T3.6-upper", "upper", v, treg, _observed(v, rho), iff=False,
                             index_detail={"i": i, "j": j}))

    order = dd.order
    D = tr[order]
    diam = float(dd.diameter)
    k = np.arange(dd.n)
    vals = (2 * D + D[0] - diam + np.sqrt((2 * D + diam - D[0]) ** 2 + 8 * k * (D[0] - D) * diam)) / 2
    # every index attains the bound exactly on transmission-regular graphs
    preds = [treg] * dd.n
    bounds.append(_indexed_formula_report("T3.7-upper", vals, preds, rho, order))

    ratio = tr + T / tr
    num = dd.transmissions ** 2 + dd.second_degrees  # ratio_i = num_i / D_i
    ratio_const = bool(np.all(num * dd.transmissions[0] == num[0] * dd.transmissions))
    bounds.append(BoundValue("T3.8-lower", "lower", float(ratio.min()), ratio_const, _observed(float(ratio.min()), rho)))
    bounds.append(BoundValue("T3.8-upper", "upper", float(ratio.max()), ratio_const, _observed(float(ratio.max()), rho)))

    sq = np.sqrt(2 * T + 2 * tr ** 2)
    sq_const = _constant(dd.second_degrees + dd.transmissions ** 2)
    bounds.append(BoundValue("T3.9-lower", "lower", float(sq.min()), sq_const, _observed(float(sq.min()), rho)))
    bounds.append(BoundValue("T3.9-upper", "upper", float(sq.max()), sq_const, _observed(float(sq.max()), rho)))

    return BoundReport(label, "delta1Q", rho, bounds, {"delta1Q": rho, "delta1": delta1})


def distance_radius_bounds(g, label: str = "") -> BoundReport:
    """Transmission sandwich on the distance spectral radius."""
    ctx = _analysis(g)
    tr = ctx.dd.transmissions
    rho = ctx.delta1
    treg = is_transmission_regular(ctx.dd)
    lo, hi = float(tr.min()), float(tr.max())
    bounds = [
        BoundValue("T3.1-lower", "lower", lo, treg, _observed(lo, rho)),
        BoundValue("T3.1-upper", "upper", hi, treg, _observed(hi, rho)),
    ]
    return BoundReport(label, "delta1", rho, bounds, {"delta1": rho})


def closed_form_dsl(spec: FamilySpec) -> int:
    """Exact distance signless Laplacian radius for K_n, C_n and K_{n/2,n/2}."""
    n = spec.n
    if spec.kind == "complete":
        return 2 * (n - 1)
    if spec.kind == "cycle":
        return (n * n - 1) // 2 if n % 2 else n * n // 2
    if spec.kind == "complete-bipartite" and 2 * spec.a == n:
        return 3 * n - 4
    raise ValueError(f"no closed form for {spec.label}")


# ---------------------------------------------------------------------------
# Star graph


@dataclass(frozen=True)
class StarCounterexample:
    """Pairwise degree bound on the star ``S_n`` versus ``q_1(S_n)``.

    ``prop27_bound`` uses ``s_i`` as the sum of neighbour degrees. The
    ``printed_bound`` uses the values ``s_1 = n - 1``, ``s_i = 2n - 3`` for the
    leaves, which is what reproduces the claimed value ``2n - 2``.
    """

    n: int
    q1: float
    q1_power: float
    s_values: tuple
    prop27_bound: float
    printed_s_values: tuple
    printed_bound: float
    bipartite_semiregular: bool
    regular: bool
    equality_holds: bool

    @property
    def q1_is_n(self) -> bool:
        return abs(self.q1 - self.n) <= _tol(self.n)

    @property
    def corrected_equality_holds(self) -> bool:
        """Whether the regular-only equality condition predicts correctly."""
        return self.regular == self.equality_holds

    @property
    def prop27_refuted(self) -> bool:
        """True when S_n (bipartite semi-regular) fails to attain the bound."""
        return self.bipartite_semiregular and not self.equality_holds

    @property
    def gap(self) -> float:
        return self.prop27_bound - self.q1


def counterexample_star(n: int) -> StarCounterexample:
    from .graph import generate_family

    if n < 3:
        raise ValueError("star counterexample needs n >= 3")
    g = generate_family(FamilySpec("star", n))
    ctx = GraphAnalysis(g)
    report = q_bounds(ctx)
    bound = report["C2.9-upper"]
    degs = g.degrees()
    s = tuple(sum(degs[k] for k in g.adjacency[i]) for i in range(n))
    printed_s = (n - 1,) + (2 * n - 3,) * (n - 1)
    printed, _, _ = _pairwise_max(degs, printed_s)
    return StarCounterexample(
        n=n,
        q1=ctx.q1,
        q1_power=power_spectral_radius(ctx.signless_laplacian).spectral_radius,
        s_values=s,
        prop27_bound=bound.value,
        printed_s_values=printed_s,
        printed_bound=printed,
        bipartite_semiregular=is_bipartite_semiregular(g),
        regular=is_regular(g),
        equality_holds=bool(bound.equality_observed),
    )
