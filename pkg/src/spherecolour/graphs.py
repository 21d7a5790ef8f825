"""Vertex colourings of simple graphs and the exact backtracking colourer.

Graphs are ``networkx.Graph`` instances.  Colourings are total maps from the
graph's nodes to ``range(k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Hashable, Mapping, Optional, Tuple

import networkx as nx


@dataclass(frozen=True)
class VertexColouring:
    """``colours[v]`` is the colour of vertex ``v``; vertices are ``0..n-1``."""

    k: int
    colours: Tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= c < self.k for c in self.colours):
            raise ValueError(f"colours must lie in range({self.k})")

    def __getitem__(self, v: int) -> int:
        return self.colours[v]

    def __len__(self) -> int:
        return len(self.colours)

    def relabel(self, perm) -> "VertexColouring":
        """Rename colour ``c`` to ``perm[c]``."""
        return VertexColouring(self.k, tuple(perm[c] for c in self.colours))

    def restrict(self, n: int) -> "VertexColouring":
        return VertexColouring(self.k, self.colours[:n])

    def as_dict(self) -> Dict[int, int]:
        return dict(enumerate(self.colours))


def _colour_map(g: nx.Graph, psi) -> Mapping[Hashable, int]:
    if isinstance(psi, VertexColouring):
        return psi.as_dict()
    return psi


def verify_proper(g: nx.Graph, psi) -> bool:
    colour = _colour_map(g, psi)
    return all(colour[u] != colour[v] for u, v in g.edges())


def exact_graph_colouring(g: nx.Graph, k: int) -> Optional[Dict[Hashable, int]]:
    """Return a proper ``k``-colouring of ``g`` or ``None`` if none exists.

    Vertices are visited in sorted order and each one tries the lowest free
    colour first, so the result is the lexicographically least proper
    colouring of the sorted vertex sequence.  Colours above ``max used + 1``
    are never tried; that only discards renamings of branches already seen.
    """
    order = sorted(g.nodes())
    index = {v: i for i, v in enumerate(order)}
    # neighbours earlier in the order are the only ones already coloured
    earlier = [[index[u] for u in g.neighbors(v) if index[u] < i] for i, v in enumerate(order)]
    n = len(order)
    if k <= 0 and n:
        return None
    colour = [-1] * n
    used = [0] * (n + 1)  # used[i]: colours in use among the first i vertices
    i = 0
    while 0 <= i < n:
        blocked = {colour[j] for j in earlier[i]}
        limit = min(k, used[i] + 1)
        c = colour[i] + 1
        while c < limit and c in blocked:
            c += 1
        if c < limit:
            colour[i] = c
            used[i + 1] = max(used[i], c + 1)
            i += 1
        else:
            colour[i] = -1
            i -= 1
    if i < 0:
        return None
    return {v: colour[i] for i, v in enumerate(order)}


def exact_vertex_colouring(g: nx.Graph, k: int) -> Optional[VertexColouring]:
    """``exact_graph_colouring`` packaged for graphs on ``0..n-1``."""
    found = exact_graph_colouring(g, k)
    if found is None:
        return None
    return VertexColouring(k, tuple(found[v] for v in range(g.number_of_nodes())))


def brute_force_colouring(g: nx.Graph, k: int) -> Optional[Dict[Hashable, int]]:
    """Enumerate all ``k**n`` assignments; the first proper one in lexicographic order."""
    order = sorted(g.nodes())
    edges = list(g.edges())
    for assignment in product(range(k), repeat=len(order)):
        colour = dict(zip(order, assignment))
        if all(colour[u] != colour[v] for u, v in edges):
            return colour
    return None


def chromatic_number(g: nx.Graph) -> int:
    k = 0
    while exact_graph_colouring(g, k) is None:
        k += 1
    return k


def contains_clique(g: nx.Graph, vertices) -> bool:
    vertices = list(vertices)
    return all(g.has_edge(u, v) for i, u in enumerate(vertices) for v in vertices[i + 1:])
