"""Canonical JSON forms.

Writers sort everything and use fixed separators so equal objects serialize
to identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .complex import Triangulation, build
from .edgeface import EdgeColouring, FaceColouring
from .errors import ParseError
from .graphs import VertexColouring


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def triangulation_to_json(T: Triangulation) -> dict:
    return {"d": T.d, "chambers": [list(c) for c in sorted(T.chambers)]}


def triangulation_from_json(obj: Any) -> Triangulation:
    if not isinstance(obj, dict) or "d" not in obj or not isinstance(obj.get("chambers"), list):
        raise ParseError('expected an object {"d": <int>, "chambers": [[...], ...]}')
    return build(obj["d"], obj["chambers"])


def colouring_to_json(psi: VertexColouring) -> dict:
    return {"k": psi.k, "colours": list(psi.colours)}


def colouring_from_json(obj: Any) -> VertexColouring:
    try:
        return VertexColouring(int(obj["k"]), tuple(int(c) for c in obj["colours"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad colouring: {exc}") from exc


def edge_colouring_to_json(ec: EdgeColouring) -> dict:
    return {"k": ec.k, "edges": [[u, v, c] for (u, v), c in sorted(ec.colours.items())]}


def edge_colouring_from_json(obj: Any) -> EdgeColouring:
    try:
        return EdgeColouring(int(obj["k"]), {tuple(sorted((u, v))): c for u, v, c in obj["edges"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad edge colouring: {exc}") from exc


def face_colouring_to_json(fc: FaceColouring) -> dict:
    return {"faces": [[u, v, w, c] for (u, v, w), c in sorted(fc.colours.items())]}


def face_colouring_from_json(obj: Any, k: int = 5) -> FaceColouring:
    try:
        return FaceColouring(k, {tuple(sorted((u, v, w))): c for u, v, w, c in obj["faces"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad face colouring: {exc}") from exc


def write_json(path: Union[str, Path], obj: Any) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def read_json(path: Union[str, Path]) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return _loads(text)


def read_triangulation(path: Union[str, Path]) -> Triangulation:
    return triangulation_from_json(read_json(path))


def write_triangulation(path: Union[str, Path], T: Triangulation) -> None:
    write_json(path, triangulation_to_json(T))
