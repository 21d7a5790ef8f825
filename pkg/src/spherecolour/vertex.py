"""(d+1)- and (d+2)-colourings of sphere triangulations via dual gain graphs.

A chamber colouring ``(t, pi)`` gives colour ``pi[i]`` to the i-th smallest
vertex of chamber ``t``; positions ``d+1 .. k-1`` hold the colours the
chamber does not use.  Gains on the dual graph say how a chamber colouring
must change when crossing a facet; if every f-cycle is balanced the
colouring propagates consistently to the whole complex and the induced
vertex colours form a proper colouring of the 1-skeleton.
"""

from __future__ import annotations

from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from . import perm as P
from .complex import (
    OrientationAssignment,
    Triangulation,
    carry_orientation,
    coherent_orientation,
    skeleton,
    subdivide,
)
from .dual import (
    DualGraph,
    FCycle,
    GainAssignment,
    dual_graph,
    f_cycles,
    is_balanced,
    is_bipartite,
    propagate,
)
from .errors import (
    InternalUnbalanced,
    InvariantViolation,
    NotProper,
    PreconditionViolated,
    Unbalanced,
    WrongColourCount,
)
from .graphs import VertexColouring, exact_vertex_colouring, verify_proper

__all__ = [
    "ChamberColouring",
    "VertexColouring",
    "apex_colours",
    "canonical_local_from_colouring",
    "chamber_permutation",
    "colour_d_plus_1",
    "colour_d_plus_2",
    "colour_via_subdivision",
    "div3_condition",
    "extend_colouring",
    "extract_colouring",
    "facet_agreement_gains",
    "find_subdivision",
    "find_subdivision_exhaustive",
    "find_subdivision_via_colouring",
    "heawood_condition",
    "psi_orientation",
    "renaming_between",
    "subdivision_from_colouring",
    "verify_proper",
]


class ChamberColouring(NamedTuple):
    chamber: int
    perm: P.Perm

    def induced(self, T: Triangulation) -> Dict[int, int]:
        return {v: self.perm[i] for i, v in enumerate(T.chambers[self.chamber])}


def _check_proper(T: Triangulation, psi: VertexColouring) -> None:
    if len(psi) != T.n:
        raise NotProper(f"colouring has {len(psi)} entries for {T.n} vertices")
    for c in T.chambers:
        if len({psi[v] for v in c}) != len(c):
            raise NotProper(f"chamber {c} has repeated colours")


# --- conditions -----------------------------------------------------------


def heawood_condition(T: Triangulation) -> bool:
    """Every (d-2)-cell lies in an even number of (d-1)-cells."""
    even = all(len(ts) % 2 == 0 for ts in T.ridge_chambers.values())
    if even != is_bipartite(dual_graph(T)):
        raise InvariantViolation("even incidences disagree with dual bipartiteness")
    return even


def div3_condition(T: Triangulation) -> bool:
    return all(len(ts) % 3 == 0 for ts in T.ridge_chambers.values())


# --- gains and extraction ---------------------------------------------------


def facet_agreement_gains(T: Triangulation, G: DualGraph, k: int) -> GainAssignment:
    """Gains that keep the colours of the shared facet fixed.

    With ``k = d+1`` the apex of ``t`` inherits the apex colour of ``s``.
    With ``k = d+2`` the apex of ``t`` takes the colour ``s`` leaves unused,
    and the colour ``t`` leaves unused is the apex colour of ``s``.
    ``rho`` maps positions in ``t`` to positions in ``s``.
    """
    d = T.d
    if k not in (d + 1, d + 2):
        raise WrongColourCount(f"facet agreement gains need k in {{d+1, d+2}}, got {k}")
    forward = []
    for e in G.edges:
        s, t = T.chambers[e.s], T.chambers[e.t]
        pos_s = {v: i for i, v in enumerate(s)}
        rho = list(range(k))
        for j, v in enumerate(t):
            if v in pos_s:
                rho[j] = pos_s[v]
            else:
                apex_t = j
        (apex_s,) = (i for i, v in enumerate(s) if v not in set(t))
        if k == d + 1:
            rho[apex_t] = apex_s
        else:
            rho[apex_t] = d + 1
            rho[d + 1] = apex_s
        forward.append(P.check(rho))
    return GainAssignment(k, tuple(forward))


def extract_colouring(T: Triangulation, phi: Sequence[P.Perm], k: int) -> VertexColouring:
    """Read vertex colours off chamber colourings, checking that they agree."""
    colour: List[Optional[int]] = [None] * T.n
    for t, c in enumerate(T.chambers):
        for i, v in enumerate(c):
            col = phi[t][i]
            if colour[v] is None:
                colour[v] = col
            elif colour[v] != col:
                raise InvariantViolation(f"chambers disagree on the colour of vertex {v}")
    return VertexColouring(k, tuple(colour))  # type: ignore[arg-type]


def _colour_with_gains(T: Triangulation, k: int) -> VertexColouring:
    G = dual_graph(T)
    gains = facet_agreement_gains(T, G, k)
    for cyc in f_cycles(T, G):
        if not is_balanced(gains, cyc.darts):
            raise InternalUnbalanced(f"f-cycle around {cyc.cell} is unbalanced")
    try:
        phi = propagate(G, gains, 0, P.identity(k))
    except Unbalanced as exc:
        raise InternalUnbalanced(str(exc)) from exc
    psi = extract_colouring(T, phi, k)
    if not verify_proper(skeleton(T), psi):
        raise InvariantViolation("extracted colouring is not proper")
    return psi


def colour_d_plus_1(T: Triangulation) -> Optional[VertexColouring]:
    """Proper (d+1)-colouring when every (d-2)-cell has even incidence, else ``None``."""
    if not heawood_condition(T):
        return None
    return _colour_with_gains(T, T.d + 1)


def colour_d_plus_2(T: Triangulation) -> VertexColouring:
    """Proper (d+2)-colouring of a triangulation whose (d-2)-cells all have incidence divisible by 3."""
    if not div3_condition(T):
        raise PreconditionViolated("some (d-2)-cell has incidence not divisible by 3")
    return _colour_with_gains(T, T.d + 2)


# --- orientations ------------------------------------------------------------


def chamber_permutation(T: Triangulation, t: int, psi: VertexColouring) -> P.Perm:
    """Colours of chamber ``t`` in vertex order, unused colours appended ascending."""
    used = [psi[v] for v in T.chambers[t]]
    rest = [c for c in range(psi.k) if c not in set(used)]
    return P.check(used + rest)


def psi_orientation(
    T: Triangulation, psi: VertexColouring, orient: Optional[OrientationAssignment] = None, mode: str = "d+1"
) -> OrientationAssignment:
    """Per-chamber sign of the colour permutation along a positive vertex order."""
    expected = {"d+1": T.d + 1, "d+2": T.d + 2}.get(mode)
    if expected is None:
        raise ValueError(f"mode must be 'd+1' or 'd+2', got {mode!r}")
    if psi.k != expected:
        raise WrongColourCount(f"mode {mode} needs {expected} colours, got {psi.k}")
    _check_proper(T, psi)
    if orient is None:
        orient = coherent_orientation(T)
    return OrientationAssignment(
        tuple(orient[t] * P.parity(chamber_permutation(T, t, psi)) for t in range(len(T.chambers)))
    )


def apex_colours(T: Triangulation, cycle: FCycle, G: DualGraph, psi: VertexColouring) -> List[int]:
    """Colours of the facet vertices outside ``cycle.cell``, in cyclic order."""
    fs = set(cycle.cell)
    out = []
    for e, _ in cycle.darts:
        (w,) = (v for v in G.edges[e].cell if v not in fs)
        out.append(psi[w])
    return out


# --- subdivisions ---------------------------------------------------------------


def extend_colouring(T: Triangulation, psi: VertexColouring, S: Sequence[int]) -> VertexColouring:
    """Give each new vertex of ``subdivide(T, S)`` the colour its chamber leaves unused."""
    extra = []
    for t in sorted(set(S)):
        missing = [c for c in range(psi.k) if c not in {psi[v] for v in T.chambers[t]}]
        if len(missing) != 1:
            raise WrongColourCount("the chamber must leave exactly one colour unused")
        extra.append(missing[0])
    return VertexColouring(psi.k, psi.colours + tuple(extra))


def subdivision_from_colouring(
    T: Triangulation, psi: VertexColouring, orient: Optional[OrientationAssignment] = None
) -> Tuple[int, ...]:
    """The negatively psi-oriented chambers; subdividing them yields incidences divisible by 3."""
    if psi.k != T.d + 2:
        raise WrongColourCount(f"need a (d+2)-colouring, got k={psi.k}")
    if orient is None:
        orient = coherent_orientation(T)
    signs = psi_orientation(T, psi, orient, "d+2")
    S = tuple(sorted(signs.negative))

    sub = subdivide(T, S)
    sub_psi = extend_colouring(T, psi, S)
    sub_signs = psi_orientation(sub, sub_psi, carry_orientation(T, orient, S, sub), "d+2")
    if sub_signs.negative:
        raise InvariantViolation("subdivided complex still has negative chambers")
    if not div3_condition(sub):
        raise InvariantViolation("subdivided complex violates the divisibility condition")
    return S


def _incidence_system(T: Triangulation):
    ridges = sorted(T.ridge_chambers)
    base = np.array([len(T.ridge_chambers[f]) % 3 for f in ridges], dtype=np.int16)
    A = np.zeros((len(T.chambers), len(ridges)), dtype=np.int16)
    for j, f in enumerate(ridges):
        A[list(T.ridge_chambers[f]), j] = 1
    return base, A


def find_subdivision_exhaustive(T: Triangulation, low_bits: int = 14) -> Optional[Tuple[int, ...]]:
    """Smallest, then lexicographically least, chamber set whose subdivision satisfies div3.

    Subdividing a chamber adds one incident facet to each of its (d-2)-cells
    and creates only new (d-2)-cells of incidence 3, so the condition on the
    subdivided complex reads ``inc(f) + #{t in S : f in t} = 0 (mod 3)`` over
    the original (d-2)-cells.  All ``2**m`` subsets are scanned in blocks.
    """
    m = len(T.chambers)
    base, A = _incidence_system(T)
    L = min(m, low_bits)
    low = np.zeros((1 << L, A.shape[1]), dtype=np.int16)
    for bit in range(L):
        half = 1 << bit
        low[half:2 * half] = low[:half] + A[bit]
    low_pop = np.zeros(1 << L, dtype=np.int16)
    for bit in range(L):
        half = 1 << bit
        low_pop[half:2 * half] = low_pop[:half] + 1

    best: Optional[Tuple[int, Tuple[int, ...]]] = None
    for high in range(1 << (m - L)):
        high_bits = [L + j for j in range(m - L) if high >> j & 1]
        offset = base + A[high_bits].sum(axis=0) if high_bits else base
        ok = np.flatnonzero(((low + offset) % 3 == 0).all(axis=1))
        if ok.size == 0:
            continue
        pops = low_pop[ok] + len(high_bits)
        size = int(pops.min())
        if best is not None and size > best[0]:
            continue
        for mask in ok[pops == size]:
            S = tuple([i for i in range(L) if int(mask) >> i & 1] + high_bits)
            if best is None or (size, S) < best:
                best = (size, S)
    if best is None:
        return None
    S = best[1]
    if not div3_condition(subdivide(T, S)):
        raise InvariantViolation("incidence formula disagrees with the subdivided complex")
    return S


def find_subdivision_via_colouring(T: Triangulation) -> Optional[Tuple[int, ...]]:
    psi = exact_vertex_colouring(skeleton(T), T.d + 2)
    if psi is None:
        return None
    return subdivision_from_colouring(T, psi)


def find_subdivision(T: Triangulation, max_bruteforce_chambers: int = 20) -> Optional[Tuple[int, ...]]:
    """A chamber set whose subdivision has all (d-2)-incidences divisible by 3.

    Small inputs are searched exhaustively and cross-checked against the
    colouring route; larger ones use the colouring route alone.
    """
    via_colouring = find_subdivision_via_colouring(T)
    if len(T.chambers) > max_bruteforce_chambers:
        return via_colouring
    exhaustive = find_subdivision_exhaustive(T)
    if (exhaustive is None) != (via_colouring is None):
        raise InvariantViolation("exhaustive search and colouring route disagree on existence")
    return exhaustive


def colour_via_subdivision(T: Triangulation, max_bruteforce_chambers: int = 20) -> Optional[VertexColouring]:
    """(d+2)-colour the subdivided complex through gains and restrict to ``T``."""
    S = find_subdivision(T, max_bruteforce_chambers)
    if S is None:
        return None
    psi = colour_d_plus_2(subdivide(T, S)).restrict(T.n)
    if not verify_proper(skeleton(T), psi):
        raise InvariantViolation("restricted colouring is not proper")
    return psi


# --- canonical local colourings ------------------------------------------------------


def canonical_local_from_colouring(T: Triangulation, psi: VertexColouring) -> GainAssignment:
    """Gains ``pi_s^-1 ∘ pi_t`` built from a proper colouring's chamber permutations."""
    if psi.k < T.d + 1:
        raise WrongColourCount(f"need at least d+1 colours, got {psi.k}")
    if not verify_proper(skeleton(T), psi):
        raise NotProper("colouring is not proper")
    G = dual_graph(T)
    pis = [chamber_permutation(T, t, psi) for t in range(len(T.chambers))]
    forward = tuple(P.compose(P.inverse(pis[e.s]), pis[e.t]) for e in G.edges)
    gains = GainAssignment(psi.k, forward)

    for e, rho in zip(G.edges, forward):
        pos_s = {v: i for i, v in enumerate(T.chambers[e.s])}
        for j, v in enumerate(T.chambers[e.t]):
            if v in pos_s and rho[j] != pos_s[v]:
                raise InvariantViolation(f"gain on {e.s}->{e.t} moves a facet vertex")
    for cyc in f_cycles(T, G):
        if not is_balanced(gains, cyc.darts):
            raise InvariantViolation(f"f-cycle around {cyc.cell} is unbalanced")
    return gains


def renaming_between(a: VertexColouring, b: VertexColouring) -> Optional[Dict[int, int]]:
    """Colour renaming ``r`` with ``r[a[v]] == b[v]`` for all ``v``, if one exists."""
    if len(a) != len(b):
        return None
    fwd: Dict[int, int] = {}
    back: Dict[int, int] = {}
    for x, y in zip(a.colours, b.colours):
        if fwd.setdefault(x, y) != y or back.setdefault(y, x) != x:
            return None
    return fwd
