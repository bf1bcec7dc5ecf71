"""
Filtered graph of the identity component and its zero-dimensional persistence.

Vertices are canonical presentations reachable from ``(x, y)`` through
presentations of length at most ``lmax``; a vertex's filtration value is its
presentation length and an edge's is the larger of its endpoints' values.
A single level-ordered union-find sweep yields the connectivity value of
every vertex (the level at which it first joins the base vertex), the
isolated components, and optionally elder-rule bars.
"""

from __future__ import annotations

import logging
from array import array
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import numpy.typing as npt

from ac_workbench.core.moves import neighbors
from ac_workbench.core.presentation import TRIVIAL, Presentation, canonicalize
from ac_workbench.enums import MoveSet
from ac_workbench.exceptions import EnumerationAborted
from ac_workbench.models.results import ComponentRecord, ElderBar, PersistenceRow
from ac_workbench.union_find import UnionFind

logger = logging.getLogger(__name__)

_PROGRESS_EVERY = 1_000_000

IntArray = npt.NDArray[np.int64]


@dataclass
class FilteredGraph:
    """Vertices with filtration values and deduplicated undirected edges."""

    filtration: IntArray
    edge_u: IntArray
    edge_v: IntArray
    base: int = 0
    states: list[Presentation] = field(default_factory=list)
    move_set: MoveSet | None = None
    lmax: int | None = None

    @classmethod
    def from_edges(cls, filtration: list[int], edges: list[tuple[int, int]], base: int = 0) -> FilteredGraph:
        """Build a small graph by hand; edges are deduplicated and self-loops dropped."""
        pairs = sorted({(min(a, b), max(a, b)) for a, b in edges if a != b})
        u = np.array([a for a, _ in pairs], dtype=np.int64)
        v = np.array([b for _, b in pairs], dtype=np.int64)
        return cls(filtration=np.asarray(filtration, dtype=np.int64), edge_u=u, edge_v=v, base=base)

    @property
    def num_vertices(self) -> int:
        return int(self.filtration.shape[0])

    @property
    def num_edges(self) -> int:
        return int(self.edge_u.shape[0])

    @property
    def edge_levels(self) -> IntArray:
        return np.maximum(self.filtration[self.edge_u], self.filtration[self.edge_v])


@dataclass
class Sweep:
    conn: IntArray
    components: list[ComponentRecord]
    bars: list[ElderBar]


# ============================================================================
# Enumeration
# ============================================================================


def enumerate_identity_component(
    lmax: int, move_set: MoveSet = MoveSet.PRIME, max_vertices: int | None = None
) -> FilteredGraph:
    """Breadth-first enumeration from the trivial presentation, bounded by presentation length.

    Ids are assigned in discovery order. Every move from every vertex that
    lands on another enumerated vertex contributes the unordered pair once.

    Raises:
        EnumerationAborted: ``max_vertices`` exceeded or memory exhausted.
    """
    if lmax < 2:
        raise ValueError(f"lmax must be >= 2, got {lmax}")
    index: dict[Presentation, int] = {TRIVIAL: 0}
    states: list[Presentation] = [TRIVIAL]
    filtration = array("l", [TRIVIAL.length])
    src = array("l")
    dst = array("l")
    head = 0
    try:
        while head < len(states):
            state = states[head]
            seen: set[int] = set()
            for _, child in neighbors(state, move_set):
                if len(child.r1) + len(child.r2) > lmax:
                    continue
                key = canonicalize(child)
                target = index.get(key)
                if target is None:
                    target = len(states)
                    index[key] = target
                    states.append(key)
                    filtration.append(len(key.r1) + len(key.r2))
                    if max_vertices is not None and len(states) > max_vertices:
                        raise EnumerationAborted(
                            f"Vertex limit {max_vertices} exceeded at lmax={lmax}",
                            {"vertices": len(states), "directed_edges": len(src), "expanded": head},
                        )
                    if len(states) % _PROGRESS_EVERY == 0:
                        logger.info("lmax=%d: %d vertices, %d expanded", lmax, len(states), head)
                if target != head and target not in seen:
                    seen.add(target)
                    src.append(head)
                    dst.append(target)
            head += 1
    except MemoryError:
        raise EnumerationAborted(
            f"Out of memory at lmax={lmax}", {"vertices": len(states), "directed_edges": len(src), "expanded": head}
        ) from None

    a = np.asarray(src, dtype=np.int64)
    b = np.asarray(dst, dtype=np.int64)
    keys = np.unique((np.minimum(a, b) << 32) | np.maximum(a, b))
    logger.info("lmax=%d %s: %d vertices, %d edges", lmax, move_set.value, len(states), keys.shape[0])
    return FilteredGraph(
        filtration=np.asarray(filtration, dtype=np.int64),
        edge_u=keys >> 32,
        edge_v=keys & 0xFFFFFFFF,
        base=0,
        states=states,
        move_set=move_set,
        lmax=lmax,
    )


# ============================================================================
# Level sweep
# ============================================================================


def sweep(graph: FilteredGraph, elder_bars: bool = False) -> Sweep:
    """Add vertices and edges level by level, tracking when components reach the base.

    Vertices that never reach the base keep connectivity value -1.
    """
    filt = graph.filtration
    num = graph.num_vertices
    conn = np.full(num, -1, dtype=np.int64)
    if num == 0:
        return Sweep(conn=conn, components=[], bars=[])

    vertex_order = np.argsort(filt, kind="stable")
    vertices = vertex_order.tolist()
    vertex_levels = filt[vertex_order].tolist()
    levels = graph.edge_levels
    edge_order = np.argsort(levels, kind="stable")
    us = graph.edge_u[edge_order].tolist()
    vs = graph.edge_v[edge_order].tolist()
    edge_levels = levels[edge_order].tolist()

    uf = UnionFind(num)
    base = graph.base
    # Non-base components only; the base component's members are final once they join.
    members: dict[int, list[int]] = {}
    birth: dict[int, int] = {}
    components: list[ComponentRecord] = []
    bars: list[ElderBar] = []
    vi = ei = 0

    for level in range(int(vertex_levels[0]), int(vertex_levels[-1]) + 1):
        previous = [(root, birth[root], len(group)) for root, group in members.items()]

        while vi < num and vertex_levels[vi] == level:
            vertex = vertices[vi]
            vi += 1
            if vertex == base:
                conn[vertex] = level
            else:
                members[vertex] = [vertex]
                birth[vertex] = level

        while ei < len(us) and edge_levels[ei] == level:
            ra, rb = uf.find(us[ei]), uf.find(vs[ei])
            ei += 1
            if ra == rb:
                continue
            base_root = uf.find(base)
            if ra == base_root or rb == base_root:
                other = rb if ra == base_root else ra
                for m in members.pop(other):
                    conn[m] = level
                born = birth.pop(other)
                if elder_bars and level > born:
                    bars.append(ElderBar(birth=born, death=level))
                uf.unite(ra, rb)
            else:
                group_a, group_b = members.pop(ra), members.pop(rb)
                born_a, born_b = birth.pop(ra), birth.pop(rb)
                younger = max(born_a, born_b)
                if elder_bars and level > younger:
                    bars.append(ElderBar(birth=younger, death=level))
                root = uf.unite(ra, rb)
                if len(group_a) < len(group_b):
                    group_a, group_b = group_b, group_a
                group_a.extend(group_b)
                members[root] = group_a
                birth[root] = min(born_a, born_b)

        base_root = uf.find(base)
        for root, born, size in previous:
            if uf.find(root) == base_root:
                components.append(ComponentRecord(conn=level, birth=born, members=size, isolation=level - born))

    return Sweep(conn=conn, components=components, bars=bars)


def connectivity_values(graph: FilteredGraph) -> IntArray:
    """Conn(v): the minimax level over paths from v to the base."""
    return sweep(graph).conn


def isolated_components(graph: FilteredGraph) -> list[ComponentRecord]:
    """Isolated vertices grouped by connectivity value and connectivity one level below."""
    return sweep(graph).components


def elder_bars(graph: FilteredGraph) -> list[ElderBar]:
    """Finite reduced H0 bars under the elder rule, the base being the eldest class."""
    return sweep(graph, elder_bars=True).bars


# ============================================================================
# Tables
# ============================================================================


def persistence_rows(graph: FilteredGraph, result: Sweep, lmax: int, lmin: int = 3) -> list[PersistenceRow]:
    """Cumulative (v, e, ic1, ic2, ic3) for every length up to ``lmax``."""
    conn = result.conn
    reached = conn >= 0
    vertex_counts = np.cumsum(np.bincount(conn[reached], minlength=lmax + 1))
    edge_conn = np.maximum(conn[graph.edge_u], conn[graph.edge_v])
    edge_conn = edge_conn[(conn[graph.edge_u] >= 0) & (conn[graph.edge_v] >= 0)]
    edge_counts = np.cumsum(np.bincount(edge_conn, minlength=lmax + 1))

    isolated = np.zeros((lmax + 1, 4), dtype=np.int64)
    for comp in result.components:
        if comp.conn <= lmax and 1 <= comp.isolation <= 3:
            isolated[comp.conn, comp.isolation] += 1
    isolated = np.cumsum(isolated, axis=0)

    return [
        PersistenceRow(
            lmax=ell,
            vertices=int(vertex_counts[ell]),
            edges=int(edge_counts[ell]),
            ic1=int(isolated[ell, 1]),
            ic2=int(isolated[ell, 2]),
            ic3=int(isolated[ell, 3]),
        )
        for ell in range(lmin, lmax + 1)
    ]


def persistence_table(
    lmax: int, move_set: MoveSet = MoveSet.PRIME, max_vertices: int | None = None
) -> list[PersistenceRow]:
    """Enumerate once at ``lmax`` and report every length from 3 upward."""
    if lmax < 3:
        raise ValueError(f"lmax must be >= 3, got {lmax}")
    graph = enumerate_identity_component(lmax, move_set, max_vertices)
    return persistence_rows(graph, sweep(graph), lmax)


def dump_graph(graph: FilteredGraph, directory: Path) -> None:
    """Write ``vertices.bin`` (id, length) and ``edges.bin`` (id, id, level) as little-endian u32."""
    directory.mkdir(parents=True, exist_ok=True)
    ids = np.arange(graph.num_vertices, dtype=np.int64)
    np.column_stack([ids, graph.filtration]).astype("<u4").tofile(directory / "vertices.bin")
    np.column_stack([graph.edge_u, graph.edge_v, graph.edge_levels]).astype("<u4").tofile(directory / "edges.bin")
    logger.info("Wrote %d vertices and %d edges to %s", graph.num_vertices, graph.num_edges, directory)
