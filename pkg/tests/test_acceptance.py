"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with its measured runtime,
then asserts the outcome.
"""

import json
import random
import time
from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from spherecolour import io
from spherecolour import perm as P
from spherecolour import (
    Complex2,
    canonical_local_from_colouring,
    cells,
    colour_d_plus_1,
    colour_d_plus_2,
    div3_condition,
    dual_graph,
    f_cycles,
    heawood_condition,
    is_balanced,
    is_bipartite,
    propagate,
    psi_orientation,
    skeleton,
    subdivide,
    verify_proper,
)
from spherecolour.dual import gains_from_json, gains_to_json
from spherecolour.edgeface import (
    classify_chambers,
    derive_path_colouring,
    exact_face_colouring,
    face_colouring_5,
    four_edge_colour,
    is_chamber_proper,
    is_path_colouring,
    mono_free_colouring_K,
    monochromatic_triangles,
    one_factorization,
    proper_edge_colouring,
    subdivide_odd,
)
from spherecolour.complex import carry_orientation, coherent_orientation
from spherecolour.generators import (
    corpus,
    cross_polytope_boundary,
    cyclic_polytope_boundary,
    double_cone,
    octahedron,
    simplex_boundary,
)
from spherecolour.graphs import VertexColouring, exact_vertex_colouring
from spherecolour.vertex import (
    apex_colours,
    extract_colouring,
    find_subdivision,
    find_subdivision_exhaustive,
    find_subdivision_via_colouring,
    renaming_between,
)


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail, seconds, limit=None):
        within = limit is None or seconds < limit
        budget = f" (limit {limit:g} s)" if limit is not None else ""
        line = f"{'PASS' if ok and within else 'FAIL'} criterion {number}: {detail}; {seconds:.3f} s{budget}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert within, line

    return emit


def cone_closure(bases, max_chambers=64):
    out = {}
    for name, T in bases.items():
        while len(T.chambers) <= max_chambers:
            out[name] = T
            T, name = double_cone(T), f"cone({name})"
    return out


def test_criterion_1_heawood_equivalence(report):
    start = time.perf_counter()
    bases = {"octahedron": octahedron(), "cross-3": cross_polytope_boundary(3)}
    bases.update({f"simplex-{d}": simplex_boundary(d) for d in (2, 3, 4)})
    suite = cone_closure(bases)
    disagreements = []
    for name, T in suite.items():
        verdicts = (
            heawood_condition(T),
            is_bipartite(dual_graph(T)),
            colour_d_plus_1(T) is not None,
            exact_vertex_colouring(skeleton(T), T.d + 1) is not None,
        )
        if len(set(verdicts)) != 1:
            disagreements.append(name)
    seconds = time.perf_counter() - start
    report(1, not disagreements, f"{len(suite)} instances, {len(disagreements)} disagreements", seconds, 5)


def test_criterion_2_subdivision_equivalence(report):
    start = time.perf_counter()
    suite = corpus(20)
    disagreements = []
    for name, T in suite.items():
        route_a = find_subdivision_exhaustive(T)
        route_b = exact_vertex_colouring(skeleton(T), T.d + 2)
        if (route_a is None) != (route_b is None):
            disagreements.append(name)
        if route_a is not None and not div3_condition(subdivide(T, route_a)):
            disagreements.append(name + " (witness)")
    c6 = cyclic_polytope_boundary(6)
    specifics = (
        find_subdivision_exhaustive(simplex_boundary(3)) == ()
        and len(c6.chambers) == 9
        and find_subdivision_exhaustive(c6) is None
        and find_subdivision(c6) is None
    )
    seconds = time.perf_counter() - start
    ok = not disagreements and specifics
    report(2, ok, f"{len(suite)} instances, {len(disagreements)} disagreements, named cases {'ok' if specifics else 'wrong'}", seconds, 10)


def test_criterion_3_local_global_roundtrip(report):
    start = time.perf_counter()
    rng = random.Random(0)
    used, cases, failures = 0, 0, []
    for name, T in corpus().items():
        if used == 25:
            break
        colourings = [psi for k in (T.d + 1, T.d + 2) if (psi := exact_vertex_colouring(skeleton(T), k)) is not None]
        if not colourings:
            continue
        used += 1
        G = dual_graph(T)
        for psi in colourings:
            cases += 1
            gains = canonical_local_from_colouring(T, psi)
            if not all(is_balanced(gains, c.darts, G) for c in f_cycles(T, G)):
                failures.append(f"{name}: unbalanced")
                continue
            root = rng.randrange(len(T.chambers))
            back = extract_colouring(T, propagate(G, gains, root, tuple(rng.sample(range(psi.k), psi.k))), psi.k)
            if not verify_proper(skeleton(T), back) or renaming_between(back, psi) is None:
                failures.append(f"{name}: not recovered")
    seconds = time.perf_counter() - start
    ok = used == 25 and not failures
    report(3, ok, f"{used} instances, {cases} colourings, {len(failures)} failures", seconds)


def _cycles_through(seq, period):
    return len(set(seq)) == period and all(seq[i] == seq[(i + period) % len(seq)] for i in range(len(seq)))


def test_criterion_4_psi_orientation_laws(report):
    start = time.perf_counter()
    heawood, div3, violations = 0, 0, 0
    instances = dict(corpus())
    for name, T in corpus().items():
        S = None if div3_condition(T) else find_subdivision_via_colouring(T)
        if S:
            instances[f"sub({name})"] = subdivide(T, S)
    for T in instances.values():
        G = dual_graph(T)
        psi = colour_d_plus_1(T)
        if psi is not None:
            heawood += 1
            signs = psi_orientation(T, psi, mode="d+1")
            violations += sum(1 for e in G.edges if signs[e.s] == signs[e.t])
        if div3_condition(T):
            div3 += 1
            psi = colour_d_plus_2(T)
            violations += sum(1 for c in f_cycles(T, G) if not _cycles_through(apex_colours(T, c, G, psi), 3))
    seconds = time.perf_counter() - start
    report(4, violations == 0, f"{heawood} Heawood and {div3} div3 instances, {violations} violations", seconds)


def test_criterion_5_two_edge_colouring_pipeline(report):
    start = time.perf_counter()
    T = simplex_boundary(3)
    pc = derive_path_colouring(T)
    checks = {"derived": pc is not None}
    if pc is not None:
        splits = []
        for c in T.chambers:
            edges = list(combinations(c, 2))
            red = [e for e in edges if pc[e] == 0]
            blue = [e for e in edges if pc[e] == 1]
            splits.append(len(red) == len(blue) == 3)
        checks["3/3 paths"] = all(splits) and is_path_colouring(T, pc)
        orientations = {"coherent": coherent_orientation(T), "mirrored": coherent_orientation(T).flipped()}
        for label, orient in orientations.items():
            sub, col = subdivide_odd(T, pc, orient)
            S = [t for t, cls in enumerate(classify_chambers(T, pc, orient)) if cls == "odd"]
            inc = [len(ts) for ts in sub.ridge_chambers.values()]
            checks[f"{label} mod 3"] = all(x % 3 == 0 for x in inc)
            checks[f"{label} even"] = "odd" not in classify_chambers(sub, col, carry_orientation(T, orient, S, sub))
            checks[f"{label} 5-colourable"] = exact_vertex_colouring(skeleton(sub), 5) is not None
    seconds = time.perf_counter() - start
    failed = [k for k, v in checks.items() if not v]
    report(5, not failed, f"{len(checks)} checks, failed: {failed or 'none'}", seconds, 2)


def test_criterion_6_ramsey_witnesses(report):
    start = time.perf_counter()
    k5, k16 = mono_free_colouring_K(5, 2), mono_free_colouring_K(16, 3)
    t5, t16 = list(combinations(range(5), 3)), list(combinations(range(16), 3))
    mono5 = sum(1 for a, b, c in t5 if k5[a, b] == k5[a, c] == k5[b, c])
    mono16 = sum(1 for a, b, c in t16 if k16[a, b] == k16[a, c] == k16[b, c])
    ok = (len(t5), len(t16), mono5, mono16) == (10, 560, 0, 0) and not monochromatic_triangles(k16, 16)
    seconds = time.perf_counter() - start
    report(6, ok, f"K5: {mono5}/{len(t5)} monochromatic, K16: {mono16}/{len(t16)} monochromatic", seconds)


def _count_four_face_colourings(T):
    """Vectorised scan of every assignment of 4 colours to the faces."""
    faces = sorted(cells(T, 2))
    index = {f: i for i, f in enumerate(faces)}
    m = len(faces)
    codes = np.arange(4**m, dtype=np.int64)
    digits = (codes[:, None] // (4 ** np.arange(m))) % 4
    ok = np.ones(len(codes), dtype=bool)
    for c in T.chambers:
        for f, g in combinations(combinations(c, 3), 2):
            ok &= digits[:, index[f]] != digits[:, index[g]]
    return int(ok.sum())


def test_criterion_7_face_colouring(report):
    start = time.perf_counter()
    T = simplex_boundary(3)
    n_faces = len(cells(T, 2))
    pruned = exact_face_colouring(T, 4)
    exhaustive = _count_four_face_colourings(T)
    fc = face_colouring_5(T, VertexColouring(5, tuple(range(5))))
    ok = n_faces == 10 and pruned is None and exhaustive == 0 and is_chamber_proper(T, fc)
    seconds = time.perf_counter() - start
    detail = f"{n_faces} faces, 4-colourings found: pruned {pruned is not None}, exhaustive {exhaustive}, face5 chamber-proper {is_chamber_proper(T, fc)}"
    report(7, ok, detail, seconds, 30)


def test_criterion_8_one_factorizations(report):
    start = time.perf_counter()
    bad = []
    for m in range(2, 13, 2):
        F = one_factorization(m)
        union = [e for M in F.matchings for e in M]
        perfect = all(sorted(v for e in M for v in e) == list(range(m)) for M in F.matchings)
        if len(F.matchings) != m - 1 or not perfect or sorted(union) != list(combinations(range(m), 2)):
            bad.append(m)
    counts = {}
    for name, T, k in (("octahedron", octahedron(), 4), ("simplex-4", simplex_boundary(4), 6)):
        psi = exact_vertex_colouring(skeleton(T), k)
        ec = proper_edge_colouring(T, psi)
        face_proper = all(len({ec[a, b], ec[a, c], ec[b, c]}) == 3 for a, b, c in cells(T, 2))
        counts[name] = (ec.k, len(set(ec.colours.values())), face_proper)
    ok = not bad and counts == {"octahedron": (3, 3, True), "simplex-4": (5, 5, True)}
    seconds = time.perf_counter() - start
    report(8, ok, f"factorizations bad for m in {bad or 'none'}, edge colourings {counts}", seconds)


def test_criterion_9_counterexample_family(report):
    start = time.perf_counter()
    results = []
    for k in (2, 3):
        T = cyclic_polytope_boundary(3 + k)
        clique = list(range(3 + k))
        for d in (4, 5):
            apex = T.n
            T = double_cone(T)
            clique.append(apex)
            g = skeleton(T)
            sub = g.subgraph(clique)
            has = T.d == d and len(clique) == d + k and sub.number_of_edges() == len(clique) * (len(clique) - 1) // 2
            largest = max(len(c) for c in nx.find_cliques(g))
            results.append((k, d, has and largest >= d + k))
    ok = all(r[2] for r in results)
    seconds = time.perf_counter() - start
    report(9, ok, "K_{d+k} found for (k, d) in " + ", ".join(f"({k}, {d})" for k, d, r in results if r), seconds)


def _byte_cycle(tmp_path, name, obj_json, parse, serialize):
    p = tmp_path / f"{name}.json"
    io.write_json(p, obj_json)
    first = p.read_bytes()
    io.write_json(p, serialize(parse(io.read_json(p))))
    return first == p.read_bytes() and json.loads(first) == obj_json


def test_criterion_10_round_trip_io(report, tmp_path):
    start = time.perf_counter()
    artifacts, failures = 0, []
    for name, T in corpus().items():
        checks = [("tri", io.triangulation_to_json(T), io.triangulation_from_json, io.triangulation_to_json)]
        for k in (T.d + 1, T.d + 2):
            psi = exact_vertex_colouring(skeleton(T), k)
            if psi is not None:
                checks.append((f"col{k}", io.colouring_to_json(psi), io.colouring_from_json, io.colouring_to_json))
                G = dual_graph(T)
                gains = canonical_local_from_colouring(T, psi)
                checks.append((f"gain{k}", gains_to_json(G, gains), gains_from_json, lambda pair: gains_to_json(*pair)))
        if T.d <= 3:
            ec = four_edge_colour(Complex2.from_triangulation(T))
            checks.append(("edge", io.edge_colouring_to_json(ec), io.edge_colouring_from_json, io.edge_colouring_to_json))
        if T.d == 3 and (psi := exact_vertex_colouring(skeleton(T), 5)) is not None:
            fc = face_colouring_5(T, psi)
            checks.append(("face", io.face_colouring_to_json(fc), io.face_colouring_from_json, io.face_colouring_to_json))
        for label, obj, parse, serialize in checks:
            artifacts += 1
            if not _byte_cycle(tmp_path, label, obj, parse, serialize):
                failures.append(f"{name}/{label}")
        again = io.triangulation_from_json(json.loads(io.dumps(io.triangulation_to_json(T))))
        if again != T:
            failures.append(f"{name}/revalidate")
    seconds = time.perf_counter() - start
    report(10, not failures, f"{artifacts} artifacts, {len(failures)} failures", seconds)
