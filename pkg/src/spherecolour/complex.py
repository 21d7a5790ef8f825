"""Abstract triangulations of spheres.

A triangulation is stored only as its dimension ``d`` and its chambers, each
a sorted ``(d+1)``-tuple of vertex ids in ``range(n)``.  Every other cell is
derived from the chambers.  Nothing geometric is stored: ``build`` checks the
combinatorial consequences of being a sphere (pseudomanifold, connected dual
graph, cyclic codimension-2 links) but does not certify the topology.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .errors import (
    BadLink,
    DimensionOutOfRange,
    DisconnectedDual,
    DuplicateChamber,
    MalformedChamber,
    NonOrientable,
    NotACell,
    NotPseudomanifold,
    UnknownVertex,
)

Cell = Tuple[int, ...]


@dataclass(frozen=True)
class Triangulation:
    """Validated chamber list; construct through :func:`build`."""

    d: int
    n: int
    chambers: Tuple[Cell, ...]

    @cached_property
    def index(self) -> Dict[Cell, int]:
        return {c: i for i, c in enumerate(self.chambers)}

    @cached_property
    def facet_chambers(self) -> Dict[Cell, Tuple[int, ...]]:
        """(d-1)-cell -> indices of the chambers containing it."""
        return _faces_to_chambers(self.chambers, self.d)

    @cached_property
    def ridge_chambers(self) -> Dict[Cell, Tuple[int, ...]]:
        """(d-2)-cell -> indices of the chambers containing it."""
        return _faces_to_chambers(self.chambers, self.d - 1)

    def vertices(self) -> range:
        return range(self.n)

    def __len__(self) -> int:
        return len(self.chambers)


@dataclass(frozen=True)
class OrientationAssignment:
    """One sign per chamber; +1 means the sorted vertex order is positive."""

    signs: Tuple[int, ...]

    def __getitem__(self, t: int) -> int:
        return self.signs[t]

    def __len__(self) -> int:
        return len(self.signs)

    def flipped(self) -> "OrientationAssignment":
        return OrientationAssignment(tuple(-s for s in self.signs))

    @property
    def positive(self) -> FrozenSet[int]:
        return frozenset(i for i, s in enumerate(self.signs) if s > 0)

    @property
    def negative(self) -> FrozenSet[int]:
        return frozenset(i for i, s in enumerate(self.signs) if s < 0)


@dataclass(frozen=True)
class Complex2:
    """Abstract simplicial 2-complex; every face boundary edge is an edge."""

    vertices: Tuple[int, ...]
    edges: Tuple[Cell, ...]
    faces: Tuple[Cell, ...]

    def __post_init__(self):
        if len(set(self.faces)) != len(self.faces):
            raise MalformedChamber("repeated face")
        edge_set = set(self.edges)
        for f in self.faces:
            if len(f) != 3 or tuple(sorted(f)) != f or len(set(f)) != 3:
                raise MalformedChamber(f"face {f} must be a strictly increasing triple")
            for e in combinations(f, 2):
                if e not in edge_set:
                    raise MalformedChamber(f"edge {e} of face {f} is missing")
        vertex_set = set(self.vertices)
        for e in self.edges:
            if len(e) != 2 or e[0] >= e[1] or not set(e) <= vertex_set:
                raise MalformedChamber(f"bad edge {e}")

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[int]], vertices: Iterable[int] = ()) -> "Complex2":
        faces = sorted({tuple(sorted(f)) for f in faces})
        edges = sorted({e for f in faces for e in combinations(f, 2)})
        verts = sorted(set(vertices) | {v for f in faces for v in f})
        return cls(tuple(verts), tuple(edges), tuple(faces))

    @classmethod
    def from_triangulation(cls, T: Triangulation) -> "Complex2":
        return cls(tuple(T.vertices()), tuple(sorted(cells(T, 1))), tuple(sorted(cells(T, 2))))

    def induced(self, keep: Iterable[int]) -> "Complex2":
        keep = set(keep)
        return Complex2(
            tuple(v for v in self.vertices if v in keep),
            tuple(e for e in self.edges if set(e) <= keep),
            tuple(f for f in self.faces if set(f) <= keep),
        )


def _faces_to_chambers(chambers: Sequence[Cell], size: int) -> Dict[Cell, Tuple[int, ...]]:
    out: Dict[Cell, List[int]] = defaultdict(list)
    for i, c in enumerate(chambers):
        for f in combinations(c, size):
            out[f].append(i)
    return {f: tuple(ts) for f, ts in out.items()}


def _normalise(d, chambers) -> List[Cell]:
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise MalformedChamber(f"dimension must be an integer >= 2, got {d!r}")
    out = []
    for c in chambers:
        try:
            verts = [v for v in c]
        except TypeError:
            raise MalformedChamber(f"chamber {c!r} is not a sequence") from None
        if any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in verts):
            raise MalformedChamber(f"chamber {c!r} must contain non-negative integers")
        if len(verts) != d + 1 or len(set(verts)) != d + 1:
            raise MalformedChamber(f"chamber {c!r} must have {d + 1} distinct vertices")
        out.append(tuple(sorted(verts)))
    if not out:
        raise MalformedChamber("no chambers")
    return out


def build(d: int, chambers: Iterable[Sequence[int]]) -> Triangulation:
    """Validate a chamber list and return the canonical :class:`Triangulation`.

    Vertex ids are compacted to ``range(n)`` preserving their order, each
    chamber is sorted, and the chamber list is sorted lexicographically.
    """
    raw = _normalise(d, chambers)
    seen: Set[Cell] = set()
    for c in raw:
        if c in seen:
            raise DuplicateChamber(f"chamber {c} appears twice")
        seen.add(c)

    relabel = {v: i for i, v in enumerate(sorted({v for c in raw for v in c}))}
    chambers_ = tuple(sorted(tuple(relabel[v] for v in c) for c in raw))
    T = Triangulation(d, len(relabel), chambers_)

    for f, ts in T.facet_chambers.items():
        if len(ts) != 2:
            raise NotPseudomanifold(f"(d-1)-cell {f} lies in {len(ts)} chambers")

    if not _dual_connected(T):
        raise DisconnectedDual("dual graph is not connected")

    for f, ts in T.ridge_chambers.items():
        if not _link_is_cycle(T, f, ts):
            raise BadLink(f"link of (d-2)-cell {f} is not a single cycle")
    return T


def _dual_connected(T: Triangulation) -> bool:
    adj = defaultdict(list)
    for s, t in T.facet_chambers.values():
        adj[s].append(t)
        adj[t].append(s)
    seen = {0}
    queue = deque([0])
    while queue:
        s = queue.popleft()
        for t in adj[s]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return len(seen) == len(T.chambers)


def _link_is_cycle(T: Triangulation, f: Cell, ts: Sequence[int]) -> bool:
    # the link of f is the graph with one edge (chamber minus f) per chamber
    fs = set(f)
    link = nx.Graph()
    for t in ts:
        a, b = (v for v in T.chambers[t] if v not in fs)
        link.add_edge(a, b)
    if link.number_of_edges() != len(ts):
        return False
    return all(deg == 2 for _, deg in link.degree()) and nx.is_connected(link)


def cells(T: Triangulation, k: int) -> Set[Cell]:
    """All k-cells: the (k+1)-subsets of chambers, deduplicated."""
    if not 0 <= k <= T.d:
        raise DimensionOutOfRange(f"cell dimension {k} outside [0, {T.d}]")
    return {f for c in T.chambers for f in combinations(c, k + 1)}


def incidence_count(T: Triangulation, f: Sequence[int]) -> int:
    """Number of (d-1)-cells containing the (d-2)-cell ``f``."""
    f = tuple(sorted(f))
    if len(f) != T.d - 1 or f not in T.ridge_chambers:
        raise NotACell(f"{f} is not a (d-2)-cell")
    # the link of f is a cycle, so facets through f and chambers through f are equinumerous
    return len(T.ridge_chambers[f])


def skeleton(T: Triangulation) -> nx.Graph:
    """The 1-skeleton on vertices ``0..n-1``."""
    g = nx.Graph()
    g.add_nodes_from(T.vertices())
    g.add_edges_from(cells(T, 1))
    return g


def facet_sign(chamber_sign: int, omitted_position: int) -> int:
    """Orientation induced on the facet obtained by deleting one position."""
    return chamber_sign * (-1 if omitted_position % 2 else 1)


def _omitted(chamber: Cell, facet: Cell) -> int:
    for i, v in enumerate(chamber):
        if i == len(facet) or facet[i] != v:
            return i
    raise AssertionError("facet is not a face of chamber")


def coherent_orientation(T: Triangulation) -> OrientationAssignment:
    """Signs making every shared facet receive opposite induced orientations.

    Chamber 0 is declared positive.  Propagation is breadth-first in chamber
    index order; a conflict means the complex is not orientable.
    """
    m = len(T.chambers)
    sign = [0] * m
    sign[0] = 1
    adj: Dict[int, List[Tuple[int, Cell]]] = defaultdict(list)
    for f, (s, t) in sorted(T.facet_chambers.items()):
        adj[s].append((t, f))
        adj[t].append((s, f))
    queue = deque([0])
    while queue:
        s = queue.popleft()
        for t, f in sorted(adj[s]):
            want = -facet_sign(sign[s], _omitted(T.chambers[s], f)) * facet_sign(1, _omitted(T.chambers[t], f))
            if sign[t] == 0:
                sign[t] = want
                queue.append(t)
            elif sign[t] != want:
                raise NonOrientable(f"sign conflict across facet {f}")
    return OrientationAssignment(tuple(sign))


def is_coherent(T: Triangulation, orient: OrientationAssignment) -> bool:
    for f, (s, t) in T.facet_chambers.items():
        a = facet_sign(orient[s], _omitted(T.chambers[s], f))
        b = facet_sign(orient[t], _omitted(T.chambers[t], f))
        if a != -b:
            return False
    return True


def subdivide(T: Triangulation, S: Iterable[int]) -> Triangulation:
    """Cone each chamber of ``S`` from a fresh interior vertex.

    Fresh vertices get ids ``n, n+1, ...`` in increasing chamber-index order.
    """
    S = sorted(set(S))
    for t in S:
        if not 0 <= t < len(T.chambers):
            raise IndexError(f"chamber index {t} out of range")
    if not S:
        return T
    chosen = set(S)
    out = [c for i, c in enumerate(T.chambers) if i not in chosen]
    for offset, t in enumerate(S):
        u = T.n + offset
        out.extend(f + (u,) for f in combinations(T.chambers[t], T.d))
    return build(T.d, out)


def carry_orientation(
    T: Triangulation, orient: OrientationAssignment, S: Iterable[int], sub: Triangulation
) -> OrientationAssignment:
    """Orientation of ``sub = subdivide(T, S)`` agreeing with ``orient`` on kept chambers.

    Replacing the omitted vertex of a chamber by the new interior vertex, in
    place, keeps the orientation; the interior vertex is the largest id, so
    the sorted order of a new chamber differs from that by a cyclic shift.
    """
    S = sorted(set(S))
    parent = {T.n + offset: t for offset, t in enumerate(S)}
    signs = []
    for c in sub.chambers:
        u = c[-1]
        if u in parent:
            t = parent[u]
            i = _omitted(T.chambers[t], c[:-1])
            signs.append(orient[t] * (-1 if (T.d - i) % 2 else 1))
        else:
            signs.append(orient[T.index[c]])
    return OrientationAssignment(tuple(signs))


def link_graph(C: Complex2, v: int) -> nx.Graph:
    """Graph on the edges at ``v``; two are adjacent iff they span a face."""
    if v not in set(C.vertices):
        raise UnknownVertex(f"vertex {v} not in complex")
    g = nx.Graph()
    g.add_nodes_from(e for e in C.edges if v in e)
    for f in C.faces:
        if v in f:
            a, b = (tuple(sorted((v, w))) for w in f if w != v)
            g.add_edge(a, b)
    return g
