"""Command line interface.

One JSON report line goes to stdout per command, a short human summary to
stderr.  Exit codes: 0 success, 1 negative answer, 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from itertools import combinations
from typing import Any, Dict, List, Optional

from . import io
from .complex import Complex2, Triangulation, cells, coherent_orientation, skeleton
from .edgeface import (
    derive_path_colouring,
    edge_colour_no_mono_faces,
    face_colouring_5,
    four_edge_colour,
    is_chamber_proper,
    is_path_colouring,
    monochromatic_faces,
    proper_edge_colouring,
    subdivide_odd,
)
from .errors import InvariantViolation, NonOrientable, UnsupportedDimension
from .generators import double_cone, generate, maximal_subdivision, random_subdivision
from .graphs import exact_vertex_colouring, verify_proper
from .vertex import colour_d_plus_1, colour_via_subdivision, div3_condition, heawood_condition

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

DERIVED_FAMILIES = ("double-cone", "maximal-subdivision", "random-subdivision")
MODES = ("path2", "mono-free-2", "mono-free-3", "mono-free-4", "factorized", "face5")


class NoColouring(Exception):
    pass


def _summary(T: Triangulation) -> Dict[str, int]:
    return {"d": T.d, "n": T.n, "chambers": len(T.chambers)}


def _incidence_histogram(T: Triangulation) -> Dict[str, int]:
    hist = Counter(len(ts) for ts in T.ridge_chambers.values())
    return {str(k): v for k, v in sorted(hist.items())}


def cmd_generate(args) -> Dict[str, Any]:
    if args.family in DERIVED_FAMILIES:
        if args.input is None:
            raise io.ParseError(f"family {args.family} needs --input")
        base = io.read_triangulation(args.input)
        if args.family == "double-cone":
            T = double_cone(base)
        elif args.family == "maximal-subdivision":
            T = maximal_subdivision(base)
        else:
            T = random_subdivision(base, seed=args.seed, p=args.p)
    else:
        T = generate(args.family, d=args.d, n=args.n)
    report: Dict[str, Any] = {"command": "generate", "family": args.family, "instance": _summary(T)}
    _emit(args, io.triangulation_to_json(T), report)
    if args.output is not None:
        report["reverified"] = io.triangulation_to_json(io.read_triangulation(args.output)) == io.triangulation_to_json(T)
    return report


def cmd_check(args) -> Dict[str, Any]:
    T = io.read_triangulation(args.input)
    try:
        coherent_orientation(T)
        orientable = True
    except NonOrientable:
        orientable = False
    return {
        "command": "check",
        "instance": _summary(T),
        "valid": True,
        "orientable": orientable,
        "heawood": heawood_condition(T),
        "div3": div3_condition(T),
        "incidence_histogram": _incidence_histogram(T),
    }


def cmd_colour(args) -> Dict[str, Any]:
    T = io.read_triangulation(args.input)
    choice = args.colours
    if choice == "d+1":
        psi = colour_d_plus_1(T)
        method = "gains-d+1"
    elif choice == "d+2":
        psi = colour_via_subdivision(T, args.max_bruteforce_chambers)
        method = "subdivision-d+2"
    else:
        try:
            k = int(choice)
        except ValueError:
            raise io.ParseError(f"--colours must be d+1, d+2 or an integer, got {choice!r}") from None
        psi = exact_vertex_colouring(skeleton(T), k)
        method = "exact"
    report: Dict[str, Any] = {"command": "colour", "instance": _summary(T), "colours": choice, "method": method}
    if psi is None:
        report["found"] = False
        raise NoColouring(report)
    report["found"] = True
    report["k"] = psi.k
    report["proper"] = verify_proper(skeleton(T), psi)
    if not report["proper"]:
        raise InvariantViolation("produced colouring is not proper")
    _emit(args, io.colouring_to_json(psi), report)
    if args.output is not None:
        back = io.colouring_from_json(io.read_json(args.output))
        report["reverified"] = back == psi and verify_proper(skeleton(T), back)
    return report


def _smallest_even_colouring(T: Triangulation):
    k = T.d + 1 + (T.d + 1) % 2
    while k <= T.n + T.n % 2:
        psi = exact_vertex_colouring(skeleton(T), k)
        if psi is not None:
            return psi
        k += 2
    raise InvariantViolation("no even colouring found up to the vertex count")


def cmd_edge_face(args) -> Dict[str, Any]:
    T = io.read_triangulation(args.input)
    mode = args.mode
    report: Dict[str, Any] = {"command": "edge-face", "instance": _summary(T), "mode": mode}
    faces = sorted(cells(T, 2))

    if mode == "face5":
        if T.d != 3:
            raise UnsupportedDimension(f"face5 needs d=3, got d={T.d}")
        psi = exact_vertex_colouring(skeleton(T), 5)
        if psi is None:
            raise NoColouring({**report, "found": False, "reason": "skeleton is not 5-colourable"})
        fc = face_colouring_5(T, psi)
        report.update(found=True, faces=len(fc.colours), chamber_proper=is_chamber_proper(T, fc))
        _emit(args, io.face_colouring_to_json(fc), report)
        if args.output is not None:
            report["reverified"] = is_chamber_proper(T, io.face_colouring_from_json(io.read_json(args.output)))
        return report

    if mode == "path2":
        pathcol = derive_path_colouring(T)
        if pathcol is None:
            raise NoColouring({**report, "found": False, "reason": "skeleton is not 5-colourable"})
        orient = coherent_orientation(T)
        sub, _ = subdivide_odd(T, pathcol, orient)
        edge_incidence = Counter(len(ts) for ts in sub.ridge_chambers.values())
        report.update(
            found=True,
            path_property=is_path_colouring(T, pathcol),
            subdivided_chambers=len(sub.chambers) - len(T.chambers),
            subdivision=_summary(sub),
            mod3_certificate=all(k % 3 == 0 for k in edge_incidence),
            subdivision_incidence_histogram={str(k): v for k, v in sorted(edge_incidence.items())},
        )
        ec = pathcol
        verify = lambda back: is_path_colouring(T, back)  # noqa: E731
    elif mode in ("mono-free-2", "mono-free-3"):
        k = int(mode[-1])
        n_colours = {2: 5, 3: 16}[k]
        psi = exact_vertex_colouring(skeleton(T), n_colours)
        if psi is None:
            raise NoColouring({**report, "found": False, "reason": f"skeleton is not {n_colours}-colourable"})
        ec = edge_colour_no_mono_faces(T, k, psi)
        verify = lambda back: not monochromatic_faces(faces, back)  # noqa: E731
        report.update(found=True, monochromatic_faces=0)
    elif mode == "mono-free-4":
        ec = four_edge_colour(Complex2.from_triangulation(T))
        verify = lambda back: not monochromatic_faces(faces, back)  # noqa: E731
        report.update(found=True, monochromatic_faces=0)
    else:
        psi = _smallest_even_colouring(T)
        ec = proper_edge_colouring(T, psi)
        verify = lambda back: all(  # noqa: E731
            len({back[e] for e in combinations(f, 2)}) == 3 for f in faces
        )
        report.update(found=True, vertex_colours=psi.k, face_proper=True)
    report["k"] = ec.k
    _emit(args, io.edge_colouring_to_json(ec), report)
    if args.output is not None:
        report["reverified"] = bool(verify(io.edge_colouring_from_json(io.read_json(args.output))))
    return report


def _emit(args, artifact: Any, report: Dict[str, Any]) -> None:
    if args.output is None:
        report["artifact"] = artifact
    else:
        io.write_json(args.output, artifact)
        report["output"] = str(args.output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spherecolour", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        p.add_argument("--input", "-i", required=needs_input)
        p.add_argument("--output", "-o")
        p.add_argument("--seed", type=int, default=None, help="only used by random-subdivision")
        p.add_argument("--max-bruteforce-chambers", type=int, default=20)

    p = sub.add_parser("generate", help="write a triangulation from a known family")
    p.add_argument("family", choices=["simplex-boundary", "cross-polytope", "octahedron", "cyclic", *DERIVED_FAMILIES])
    p.add_argument("--d", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5, help="subdivision probability for random-subdivision")
    common(p, needs_input=False)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="validate and report colourability conditions")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("colour", help="colour the 1-skeleton")
    p.add_argument("--colours", default="d+1", help="d+1, d+2, or an integer k for the exact solver")
    common(p)
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("edge-face", help="edge and face colourings")
    p.add_argument("--mode", required=True, choices=MODES)
    common(p)
    p.set_defaults(func=cmd_edge_face)
    return parser


def _human(report: Dict[str, Any]) -> str:
    parts = [report.get("command", "?")]
    inst = report.get("instance")
    if inst:
        parts.append("d={d} n={n} chambers={chambers}".format(**inst))
    for key in ("valid", "heawood", "div3", "found", "proper", "k", "error"):
        if key in report:
            parts.append(f"{key}={report[key]}")
    return " ".join(str(p) for p in parts)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    code = EXIT_OK
    try:
        report = args.func(args)
    except NoColouring as exc:
        report, code = exc.args[0], EXIT_NEGATIVE
    except InvariantViolation as exc:
        report, code = {"command": args.command, "error": type(exc).__name__, "message": str(exc)}, EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        report, code = {"command": args.command, "error": type(exc).__name__, "message": str(exc)}, EXIT_INPUT
    report["seconds"] = round(time.perf_counter() - start, 6)
    report["exit"] = code
    sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")
    print(_human(report), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
