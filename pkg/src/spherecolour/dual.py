"""Dual graphs, f-cycles and permutation gain graphs.

A dual edge is a record ``(s, t, cell)`` with ``s < t`` for edges built from a
triangulation.  A *dart* is a directed edge ``(edge_index, direction)`` where
direction ``+1`` runs ``s -> t`` and ``-1`` runs ``t -> s``.  Walks are dart
sequences; parallel edges are therefore fine.

Gains act on chamber colourings by right composition: crossing a dart with
gain ``rho`` sends ``sigma`` to ``sigma ∘ rho``.  The gain of a walk
``e1 e2 ... ek`` is ``rho_1 ∘ rho_2 ∘ ... ∘ rho_k`` so that following the
walk sends ``sigma`` to ``sigma ∘ walk_gain``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from . import perm as P
from .complex import Cell, Triangulation
from .errors import BadLink, NotAWalk, NotClosed, Unbalanced

Dart = Tuple[int, int]


class DualEdge(NamedTuple):
    s: int
    t: int
    cell: Cell


@dataclass(frozen=True)
class DualGraph:
    n_chambers: int
    edges: Tuple[DualEdge, ...]

    @cached_property
    def by_cell(self) -> Dict[Cell, int]:
        return {e.cell: i for i, e in enumerate(self.edges)}

    @cached_property
    def darts_at(self) -> Tuple[Tuple[Dart, ...], ...]:
        """Outgoing darts per chamber, sorted by (head chamber, edge index)."""
        out: List[List[Tuple[int, Dart]]] = [[] for _ in range(self.n_chambers)]
        for i, e in enumerate(self.edges):
            out[e.s].append((e.t, (i, 1)))
            out[e.t].append((e.s, (i, -1)))
        return tuple(tuple(d for _, d in sorted(lst)) for lst in out)

    def tail(self, dart: Dart) -> int:
        e = self.edges[dart[0]]
        return e.s if dart[1] > 0 else e.t

    def head(self, dart: Dart) -> int:
        e = self.edges[dart[0]]
        return e.t if dart[1] > 0 else e.s

    def dart(self, s: int, t: int) -> Dart:
        """The first dart from ``s`` to ``t`` (lowest edge index)."""
        for d in self.darts_at[s]:
            if self.head(d) == t:
                return d
        raise KeyError(f"no dual edge {s} -> {t}")


@dataclass(frozen=True)
class FCycle:
    """The cycle of chambers around a (d-2)-cell.

    ``darts[i]`` runs from ``chambers[i]`` to ``chambers[(i+1) % len]``.
    """

    cell: Cell
    chambers: Tuple[int, ...]
    darts: Tuple[Dart, ...]

    def __len__(self) -> int:
        return len(self.chambers)


@dataclass(frozen=True)
class GainAssignment:
    """Forward gain per dual edge; reverse darts carry the inverse."""

    k: int
    forward: Tuple[P.Perm, ...]

    @cached_property
    def _backward(self) -> Tuple[P.Perm, ...]:
        return tuple(P.inverse(p) for p in self.forward)

    def __call__(self, dart: Dart) -> P.Perm:
        e, direction = dart
        return self.forward[e] if direction > 0 else self._backward[e]

    def act(self, dart: Dart, sigma: P.Perm) -> P.Perm:
        return P.compose(sigma, self(dart))


def dual_graph(T: Triangulation) -> DualGraph:
    """One edge per (d-1)-cell, in sorted cell order."""
    edges = tuple(DualEdge(s, t, f) for f, (s, t) in sorted(T.facet_chambers.items()))
    return DualGraph(len(T.chambers), edges)


def is_bipartite(G: DualGraph) -> bool:
    side = [0] * G.n_chambers
    for root in range(G.n_chambers):
        if side[root]:
            continue
        side[root] = 1
        queue = deque([root])
        while queue:
            s = queue.popleft()
            for dart in G.darts_at[s]:
                t = G.head(dart)
                if side[t] == 0:
                    side[t] = -side[s]
                    queue.append(t)
                elif side[t] == side[s]:
                    return False
    return True


def f_cycle(T: Triangulation, G: DualGraph, f: Sequence[int]) -> FCycle:
    f = tuple(sorted(f))
    star = T.ridge_chambers.get(f)
    if not star:
        raise BadLink(f"{f} is not a (d-2)-cell")
    fs = set(f)
    start = star[0]
    a, b = (v for v in T.chambers[start] if v not in fs)
    # leave the first chamber through the facet spanned by f and its smaller apex
    exit_vertex = a
    chambers = [start]
    darts: List[Dart] = []
    current = start
    while True:
        facet = tuple(sorted(f + (exit_vertex,)))
        e = G.by_cell[facet]
        edge = G.edges[e]
        dart = (e, 1) if edge.s == current else (e, -1)
        darts.append(dart)
        nxt = G.head(dart)
        if nxt == start:
            break
        if nxt in chambers or len(chambers) > len(star):
            raise BadLink(f"star of {f} does not close into a single cycle")
        chambers.append(nxt)
        (other,) = (v for v in T.chambers[nxt] if v not in fs and v != exit_vertex)
        exit_vertex = other
        current = nxt
    if len(chambers) != len(star):
        raise BadLink(f"star of {f} splits into several cycles")
    return FCycle(f, tuple(chambers), tuple(darts))


def f_cycles(T: Triangulation, G: Optional[DualGraph] = None) -> List[FCycle]:
    """One f-cycle per (d-2)-cell, in sorted cell order."""
    if G is None:
        G = dual_graph(T)
    return [f_cycle(T, G, f) for f in sorted(T.ridge_chambers)]


def check_walk(G: DualGraph, walk: Sequence[Dart]) -> None:
    for d1, d2 in zip(walk, walk[1:]):
        if G.head(d1) != G.tail(d2):
            raise NotAWalk(f"dart {d2} does not start where {d1} ends")


def reverse_walk(walk: Sequence[Dart]) -> List[Dart]:
    return [(e, -direction) for e, direction in reversed(walk)]


def walk_gain(gains: GainAssignment, walk: Sequence[Dart], G: Optional[DualGraph] = None) -> P.Perm:
    """Accumulated gain ``rho_1 ∘ ... ∘ rho_k``; identity for the empty walk.

    Contiguity is only checked when the dual graph ``G`` is supplied.
    """
    if G is not None:
        check_walk(G, walk)
    return P.compose_all((gains(d) for d in walk), gains.k)


def is_balanced(gains: GainAssignment, cycle: Sequence[Dart], G: Optional[DualGraph] = None) -> bool:
    cycle = list(cycle)
    if G is not None:
        check_walk(G, cycle)
        if cycle and G.head(cycle[-1]) != G.tail(cycle[0]):
            raise NotClosed("walk does not return to its start")
    forward = P.is_identity(walk_gain(gains, cycle))
    backward = P.is_identity(walk_gain(gains, reverse_walk(cycle)))
    if forward != backward:
        raise AssertionError("balance depends on traversal direction")
    return forward


def propagate(
    G: DualGraph, gains: GainAssignment, root: int = 0, sigma0: Optional[P.Perm] = None
) -> List[P.Perm]:
    """Chamber colouring commuting with every gain, grown along a BFS tree.

    Tree edges are discovered in increasing chamber order.  Every dart is then
    checked; a failure means some cycle is unbalanced.
    """
    if sigma0 is None:
        sigma0 = P.identity(gains.k)
    phi: List[Optional[P.Perm]] = [None] * G.n_chambers
    phi[root] = tuple(sigma0)
    queue = deque([root])
    while queue:
        s = queue.popleft()
        for dart in G.darts_at[s]:
            t = G.head(dart)
            if phi[t] is None:
                phi[t] = gains.act(dart, phi[s])
                queue.append(t)
    if any(p is None for p in phi):
        raise ValueError("dual graph is not connected")
    for i, e in enumerate(G.edges):
        if gains.act((i, 1), phi[e.s]) != phi[e.t]:
            raise Unbalanced(f"edge {i} ({e.s}->{e.t}) does not commute", edge=i)
    return phi  # type: ignore[return-value]


def gains_to_json(G: DualGraph, gains: GainAssignment) -> dict:
    return {
        "edges": [
            {"s": e.s, "t": e.t, "cell": list(e.cell), "rho": list(gains.forward[i])}
            for i, e in enumerate(G.edges)
        ]
    }


def gains_from_json(obj: dict) -> Tuple[DualGraph, GainAssignment]:
    edges = obj["edges"]
    n = 1 + max(max(e["s"], e["t"]) for e in edges)
    G = DualGraph(n, tuple(DualEdge(e["s"], e["t"], tuple(e["cell"])) for e in edges))
    forward = tuple(P.check(e["rho"]) for e in edges)
    return G, GainAssignment(len(forward[0]), forward)
