"""Deterministic example families.

Original vertices come first; apexes and subdivision vertices are appended
in creation order.
"""

from __future__ import annotations

import random
from itertools import combinations, product
from typing import Dict, Optional

from .complex import Triangulation, build, subdivide
from .errors import BadParams, TooFewVertices, UnknownFamily


def simplex_boundary(d: int) -> Triangulation:
    if d < 2:
        raise BadParams("d must be at least 2")
    return build(d, combinations(range(d + 2), d + 1))


def cross_polytope_boundary(d: int) -> Triangulation:
    """Vertices ``2a`` and ``2a+1`` are the antipodal pair on axis ``a``."""
    if d < 2:
        raise BadParams("d must be at least 2")
    return build(d, ([2 * a + s for a, s in enumerate(signs)] for signs in product((0, 1), repeat=d + 1)))


def octahedron() -> Triangulation:
    return cross_polytope_boundary(2)


def gale_evenness(subset, n: int) -> bool:
    """Every two non-members are separated by an even number of members."""
    members = set(subset)
    outside = [i for i in range(n) if i not in members]
    for a, b in zip(outside, outside[1:]):
        if sum(1 for v in members if a < v < b) % 2:
            return False
    return True


def cyclic_polytope_boundary(n: int, d: int = 3) -> Triangulation:
    """Boundary of the cyclic (d+1)-polytope on ``n`` vertices."""
    if d < 2:
        raise BadParams("d must be at least 2")
    if n < d + 2:
        raise TooFewVertices(f"cyclic polytope boundary needs at least {d + 2} vertices, got {n}")
    return build(d, (c for c in combinations(range(n), d + 1) if gale_evenness(c, n)))


def double_cone(T: Triangulation) -> Triangulation:
    """Suspension: join every chamber to each of two new apexes ``n`` and ``n+1``."""
    x, y = T.n, T.n + 1
    return build(T.d + 1, [c + (apex,) for c in T.chambers for apex in (x, y)])


def maximal_subdivision(T: Triangulation) -> Triangulation:
    return subdivide(T, range(len(T.chambers)))


def random_subdivision(T: Triangulation, seed: Optional[int] = None, p: float = 0.5) -> Triangulation:
    """Subdivide each chamber independently with probability ``p``."""
    rng = random.Random(seed)
    return subdivide(T, [t for t in range(len(T.chambers)) if rng.random() < p])


FAMILIES = {
    "simplex-boundary": ("d",),
    "cross-polytope": ("d",),
    "octahedron": (),
    "cyclic": ("n",),
}


def generate(family: str, **params) -> Triangulation:
    if family not in FAMILIES:
        raise UnknownFamily(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    missing = [p for p in FAMILIES[family] if params.get(p) is None]
    if missing:
        raise BadParams(f"family {family} needs --{' --'.join(missing)}")
    try:
        if family == "simplex-boundary":
            return simplex_boundary(params["d"])
        if family == "cross-polytope":
            return cross_polytope_boundary(params["d"])
        if family == "octahedron":
            return octahedron()
        return cyclic_polytope_boundary(params["n"], params.get("d") or 3)
    except TooFewVertices as exc:
        raise BadParams(str(exc)) from exc


def corpus(max_chambers: int = 64) -> Dict[str, Triangulation]:
    """Named test instances with at most ``max_chambers`` chambers, in a fixed order."""
    out: Dict[str, Triangulation] = {}

    def add(name: str, T: Triangulation) -> None:
        if len(T.chambers) <= max_chambers:
            out[name] = T

    bases = {f"simplex-{d}": simplex_boundary(d) for d in (2, 3, 4, 5)}
    bases.update({f"cross-{d}": cross_polytope_boundary(d) for d in (2, 3, 4)})
    for name, T in bases.items():
        add(name, T)
        cone, label = T, name
        while len(cone.chambers) * 2 <= max_chambers:
            cone, label = double_cone(cone), f"cone({label})"
            add(label, cone)
    for n in (6, 7, 8, 9):
        add(f"cyclic-{n}", cyclic_polytope_boundary(n))
    add("cone(cyclic-6)", double_cone(cyclic_polytope_boundary(6)))
    for name in ("simplex-2", "simplex-3", "cross-2", "cross-3"):
        add(f"maxsub({name})", maximal_subdivision(bases[name]))
    for name in ("simplex-3", "cross-2", "cross-3", "cyclic-6"):
        base = bases[name] if name in bases else cyclic_polytope_boundary(6)
        for seed in range(3):
            add(f"randsub({name},{seed})", random_subdivision(base, seed=seed))
    return out
