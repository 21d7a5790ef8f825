"""Permutations of ``{0, ..., k-1}`` stored as image tuples.

``p[i]`` is the image of ``i``.  Composition follows the usual convention
``compose(a, b)(x) == a[b[x]]``, i.e. ``b`` is applied first.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

Perm = Tuple[int, ...]


def identity(k: int) -> Perm:
    return tuple(range(k))


def check(p: Sequence[int]) -> Perm:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"{p} is not a permutation of range({len(p)})")
    return p


def compose(a: Perm, b: Perm) -> Perm:
    if len(a) != len(b):
        raise ValueError("permutations of different degree")
    return tuple(a[x] for x in b)


def compose_all(perms: Iterable[Perm], k: int) -> Perm:
    """Left-to-right product ``p1 ∘ p2 ∘ ... ∘ pm``; identity when empty."""
    out = identity(k)
    for p in perms:
        out = compose(out, p)
    return out


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def parity(p: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd ones (via cycle count)."""
    seen = [False] * len(p)
    transpositions = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        transpositions += length - 1
    return -1 if transpositions % 2 else 1


def sequence_parity(seq: Sequence[int], reference: Sequence[int]) -> int:
    """Parity of the rearrangement taking ``reference`` to ``seq``."""
    pos = {v: i for i, v in enumerate(reference)}
    if len(pos) != len(seq) or set(seq) != set(pos):
        raise ValueError("sequences are not rearrangements of each other")
    return parity([pos[v] for v in seq])


def transposition(k: int, i: int, j: int) -> Perm:
    p = list(range(k))
    p[i], p[j] = p[j], p[i]
    return tuple(p)
