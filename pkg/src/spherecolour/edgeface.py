"""Edge and face colourings derived from vertex colourings.

Edges are sorted pairs and faces sorted triples.  Colour 0 is "red" and
colour 1 is "blue" wherever two edge colours are involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from . import perm as P
from .complex import (
    Cell,
    Complex2,
    OrientationAssignment,
    Triangulation,
    carry_orientation,
    cells,
    coherent_orientation,
    link_graph,
    skeleton,
    subdivide,
)
from .errors import (
    InvariantViolation,
    LinkNotFourColourable,
    NotAPathColouring,
    NotProper,
    OddColourCount,
    OddOrder,
    UnsupportedDimension,
    UnsupportedSize,
    WrongColourCount,
)
from .generators import maximal_subdivision
from .graphs import VertexColouring, exact_graph_colouring, exact_vertex_colouring, verify_proper
from .vertex import div3_condition, extend_colouring

RAMSEY = {2: 6, 3: 17}
RED, BLUE = 0, 1


@dataclass(frozen=True)
class EdgeColouring:
    k: int
    colours: Dict[Cell, int]

    def __getitem__(self, edge) -> int:
        return self.colours[tuple(sorted(edge))]

    def restrict(self, edges) -> "EdgeColouring":
        return EdgeColouring(self.k, {e: self.colours[e] for e in sorted(edges)})


@dataclass(frozen=True)
class FaceColouring:
    k: int
    colours: Dict[Cell, int]

    def __getitem__(self, face) -> int:
        return self.colours[tuple(sorted(face))]


@dataclass(frozen=True)
class OneFactorization:
    m: int
    matchings: Tuple[Tuple[Cell, ...], ...]

    def matching_of(self) -> Dict[Cell, int]:
        return {e: i for i, M in enumerate(self.matchings) for e in M}


Complexish = Union[Triangulation, Complex2]


def _edges_faces(C: Complexish) -> Tuple[List[Cell], List[Cell]]:
    if isinstance(C, Triangulation):
        return sorted(cells(C, 1)), sorted(cells(C, 2))
    return list(C.edges), list(C.faces)


def _vertex_graph(C: Complexish) -> nx.Graph:
    if isinstance(C, Triangulation):
        return skeleton(C)
    g = nx.Graph()
    g.add_nodes_from(C.vertices)
    g.add_edges_from(C.edges)
    return g


def monochromatic_faces(faces: Sequence[Cell], colouring: EdgeColouring) -> List[Cell]:
    return [f for f in faces if len({colouring[e] for e in combinations(f, 2)}) == 1]


# --- Ramsey witnesses ---------------------------------------------------------------

# log table of GF(16) = GF(2)[x] / (x^4 + x + 1); x is a generator of order 15
_GF16_LOG: Dict[int, int] = {}
_g = 1
for _i in range(15):
    _GF16_LOG[_g] = _i
    _g <<= 1
    if _g & 0b10000:
        _g ^= 0b10011
del _g, _i


def mono_free_colouring_K(n: int, k: int) -> EdgeColouring:
    """k-edge-colouring of K_n without monochromatic triangles, for (5, 2) and (16, 3).

    K_5: the pentagon 0-1-2-3-4-0 is colour 0 and the pentagram colour 1.
    K_16: vertices are elements of GF(16); edge ``ab`` is coloured by the
    class of ``log(a + b)`` modulo 3, i.e. the cubic-residue class of the
    difference.
    """
    if (n, k) == (5, 2):
        return EdgeColouring(2, {(a, b): 0 if (b - a) % 5 in (1, 4) else 1 for a, b in combinations(range(5), 2)})
    if (n, k) == (16, 3):
        return EdgeColouring(3, {(a, b): _GF16_LOG[a ^ b] % 3 for a, b in combinations(range(16), 2)})
    raise UnsupportedSize(f"no monochromatic-triangle-free witness for K_{n} with {k} colours")


def monochromatic_triangles(colouring: EdgeColouring, n: int) -> List[Cell]:
    return monochromatic_faces(list(combinations(range(n), 3)), colouring)


def edge_colour_no_mono_faces(C: Complexish, k: int, psi: VertexColouring) -> EdgeColouring:
    """Pull back the K_{R_k(3)-1} witness along a proper vertex colouring."""
    if k not in RAMSEY:
        raise UnsupportedSize(f"k must be 2 or 3, got {k}")
    n = RAMSEY[k] - 1
    if psi.k != n:
        raise WrongColourCount(f"need a proper {n}-colouring for k={k}, got k={psi.k}")
    g = _vertex_graph(C)
    if not verify_proper(g, psi):
        raise NotProper("vertex colouring is not proper")
    witness = mono_free_colouring_K(n, k)
    edges, faces = _edges_faces(C)
    out = EdgeColouring(k, {(u, v): witness[(psi[u], psi[v])] for u, v in edges})
    if monochromatic_faces(faces, out):
        raise InvariantViolation("pulled-back colouring has a monochromatic face")
    return out


# --- path colourings (d = 3) ---------------------------------------------------------


def _require_d3(T: Triangulation) -> None:
    if T.d != 3:
        raise UnsupportedDimension(f"needs a triangulation of S^3, got d={T.d}")


def colour_path(chamber: Cell, pathcol: EdgeColouring, colour: int) -> Optional[Tuple[int, ...]]:
    """Vertices of ``chamber`` along its ``colour`` path (smaller end first), or ``None``."""
    g = nx.Graph()
    g.add_nodes_from(chamber)
    g.add_edges_from(e for e in combinations(chamber, 2) if pathcol[e] == colour)
    if g.number_of_edges() != 3 or max(deg for _, deg in g.degree()) > 2 or not nx.is_connected(g):
        return None
    ends = sorted(v for v, deg in g.degree() if deg == 1)
    order = [ends[0]]
    while len(order) < 4:
        (nxt,) = (w for w in g.neighbors(order[-1]) if w not in order)
        order.append(nxt)
    return tuple(order)


def is_path_colouring(T: Triangulation, pathcol: EdgeColouring) -> bool:
    return all(colour_path(c, pathcol, RED) and colour_path(c, pathcol, BLUE) for c in T.chambers)


def derive_path_colouring(T: Triangulation) -> Optional[EdgeColouring]:
    """2-edge-colouring in which each colour is a 3-edge path on every chamber.

    Exists iff the 1-skeleton is 5-colourable.  The colouring is obtained on
    the maximal subdivision from a pulled-back K_5 witness and restricted.
    """
    _require_d3(T)
    psi = exact_vertex_colouring(skeleton(T), 5)
    if psi is None:
        return None
    sub = maximal_subdivision(T)
    sub_psi = extend_colouring(T, psi, range(len(T.chambers)))
    edges = cells(T, 1)
    pathcol = edge_colour_no_mono_faces(sub, 2, sub_psi).restrict(edges)
    if not is_path_colouring(T, pathcol):
        raise InvariantViolation("restricted colouring is not a path colouring")
    return pathcol


def classify_chambers(T: Triangulation, pathcol: EdgeColouring, orient: Optional[OrientationAssignment] = None) -> Tuple[str, ...]:
    """"even" when the red path order is a positive vertex ordering, else "odd"."""
    _require_d3(T)
    if orient is None:
        orient = coherent_orientation(T)
    out = []
    for t, c in enumerate(T.chambers):
        path = colour_path(c, pathcol, RED)
        if path is None or colour_path(c, pathcol, BLUE) is None:
            raise NotAPathColouring(f"chamber {c} is not split into two 3-edge paths")
        sign = orient[t] * P.sequence_parity(path, c)
        if sign != orient[t] * P.sequence_parity(path[::-1], c):
            raise InvariantViolation("path reversal changed the orientation class")
        out.append("even" if sign > 0 else "odd")
    return tuple(out)


def subdivide_odd(
    T: Triangulation, pathcol: EdgeColouring, orient: Optional[OrientationAssignment] = None
) -> Tuple[Triangulation, EdgeColouring]:
    """Subdivide the odd chambers and extend the path colouring into them.

    For a red path ``v0 v1 v2 v3`` the new vertex ``v`` gets ``vv0``, ``vv3``
    red and ``vv1``, ``vv2`` blue.
    """
    if orient is None:
        orient = coherent_orientation(T)
    classes = classify_chambers(T, pathcol, orient)
    S = [t for t, cls in enumerate(classes) if cls == "odd"]
    sub = subdivide(T, S)
    colours = dict(pathcol.colours)
    for offset, t in enumerate(S):
        v = T.n + offset
        v0, v1, v2, v3 = colour_path(T.chambers[t], pathcol, RED)
        colours[(v0, v)] = colours[(v3, v)] = RED
        colours[(v1, v)] = colours[(v2, v)] = BLUE
    sub_col = EdgeColouring(2, dict(sorted(colours.items())))

    sub_classes = classify_chambers(sub, sub_col, carry_orientation(T, orient, S, sub))
    if "odd" in sub_classes:
        raise InvariantViolation("odd chamber remains after subdividing")
    if not div3_condition(sub):
        raise InvariantViolation("edge incidence not divisible by 3 after subdividing")
    return sub, sub_col


# --- 4-edge-colouring of 2-complexes ------------------------------------------------------


def four_edge_colour(C: Complex2) -> EdgeColouring:
    """4-edge-colouring without monochromatic faces, adding vertices in increasing order.

    When vertex ``v`` is added, its edges to earlier vertices are coloured by
    an exact 4-colouring of the link graph at ``v`` in the complex induced on
    the vertices up to ``v``.  Two edges of a face through ``v`` are adjacent
    in that link graph, so no such face is monochromatic.
    """
    colours: Dict[Cell, int] = {}
    order = sorted(C.vertices)
    for i, v in enumerate(order):
        sub = C.induced(order[: i + 1])
        link = link_graph(sub, v)
        found = exact_graph_colouring(link, 4)
        if found is None:
            raise LinkNotFourColourable(f"link graph at vertex {v} is not 4-colourable")
        colours.update(found)
    out = EdgeColouring(4, dict(sorted(colours.items())))
    if monochromatic_faces(C.faces, out):
        raise InvariantViolation("4-edge-colouring has a monochromatic face")
    return out


# --- 1-factorizations ----------------------------------------------------------------------


def one_factorization(m: int) -> OneFactorization:
    """Circle method: vertex ``m-1`` is fixed while ``0..m-2`` rotate."""
    if m < 2 or m % 2:
        raise OddOrder(f"K_{m} has no 1-factorization")
    r = m - 1
    matchings = []
    for rnd in range(r):
        M = [(rnd, m - 1)]
        for i in range(1, m // 2):
            a, b = (rnd + i) % r, (rnd - i) % r
            M.append((min(a, b), max(a, b)))
        matchings.append(tuple(sorted(M)))
    return OneFactorization(m, tuple(matchings))


def proper_edge_colouring(C: Complexish, psi: VertexColouring) -> EdgeColouring:
    """(2k-1)-edge-colouring from a proper 2k-colouring via a 1-factorization of K_2k."""
    if psi.k % 2:
        raise OddColourCount(f"need an even number of colours, got {psi.k}")
    if not verify_proper(_vertex_graph(C), psi):
        raise NotProper("vertex colouring is not proper")
    which = one_factorization(psi.k).matching_of()
    edges, faces = _edges_faces(C)
    out = EdgeColouring(psi.k - 1, {(u, v): which[tuple(sorted((psi[u], psi[v])))] for u, v in edges})
    for f in faces:
        if len({out[e] for e in combinations(f, 2)}) != 3:
            raise InvariantViolation(f"face {f} has two edges of one colour")
    return out


# --- face colourings (d = 3) -----------------------------------------------------------------


def k5_matchings() -> Tuple[Tuple[Cell, ...], ...]:
    """The five maximum matchings of K_5: a 1-factorization of K_6 minus vertex 5."""
    return tuple(tuple(e for e in M if 5 not in e) for M in one_factorization(6).matchings)


def face_colouring_5(T: Triangulation, psi: VertexColouring) -> FaceColouring:
    """Colour face ``f`` by the matching of K_5 containing the two colours ``f`` misses."""
    _require_d3(T)
    if psi.k != 5:
        raise WrongColourCount(f"need a 5-colouring, got k={psi.k}")
    if not verify_proper(skeleton(T), psi):
        raise NotProper("vertex colouring is not proper")
    which = {e: i for i, M in enumerate(k5_matchings()) for e in M}
    out = {}
    for f in sorted(cells(T, 2)):
        rest = tuple(sorted(set(range(5)) - {psi[v] for v in f}))
        out[f] = which[rest]
    fc = FaceColouring(5, out)
    if not is_chamber_proper(T, fc):
        raise InvariantViolation("face colouring repeats a colour on some chamber")
    return fc


def is_chamber_proper(T: Triangulation, fc: FaceColouring) -> bool:
    return all(len({fc[f] for f in combinations(c, 3)}) == 4 for c in T.chambers)


def face_conflict_graph(T: Triangulation) -> nx.Graph:
    """Faces, adjacent when they lie on a common chamber."""
    g = nx.Graph()
    g.add_nodes_from(sorted(cells(T, 2)))
    for c in T.chambers:
        g.add_edges_from(combinations(combinations(c, 3), 2))
    return g


def exact_face_colouring(T: Triangulation, k: int) -> Optional[FaceColouring]:
    _require_d3(T)
    found = exact_graph_colouring(face_conflict_graph(T), k)
    return None if found is None else FaceColouring(k, dict(sorted(found.items())))
