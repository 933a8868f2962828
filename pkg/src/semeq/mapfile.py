"""Reading and writing maps as text or JSON files.

Text format: optional ``#`` comment lines, one ``vertices N`` line, then one
``face v1 v2 ... vk`` line per face with 1-based whitespace-separated labels.
A file whose first non-blank byte is ``{`` is parsed instead as a JSON
document ``{"vertices": N, "faces": [[...], ...]}``.

The writer emits faces in canonical-traversal order (the order in which the
canonical flag traversal first reaches each face), so isomorphic relabelings
of a map serialize with the same face ordering and files diff cleanly.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .mapcore import CombMap, FaceListMap, MapBuildError, build_from_faces
from .symmetry import _min_code_and_starts, _traverse

__all__ = ["MapFileError", "loads", "dumps", "read_map_file", "write_map_file"]


class MapFileError(ValueError):
    """Unparseable map file."""


def loads(text: str) -> FaceListMap:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MapFileError(f"bad JSON map file: {exc}") from exc
        try:
            n = int(doc["vertices"])
            faces = tuple(tuple(int(v) for v in f) for f in doc["faces"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MapFileError(f"JSON map file missing fields: {exc}") from exc
        return FaceListMap(vertex_count=n, faces=faces)

    n = None
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if n is not None:
                raise MapFileError(f"line {lineno}: duplicate vertices line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise MapFileError(f"line {lineno}: expected 'vertices N'")
            n = int(parts[1])
        elif parts[0] == "face":
            try:
                faces.append(tuple(int(v) for v in parts[1:]))
            except ValueError as exc:
                raise MapFileError(f"line {lineno}: bad face labels") from exc
        else:
            raise MapFileError(f"line {lineno}: unknown directive {parts[0]!r}")
    if n is None:
        raise MapFileError("missing 'vertices N' line")
    try:
        return FaceListMap(vertex_count=n, faces=tuple(faces))
    except MapBuildError as exc:
        raise MapFileError(str(exc)) from exc


def dumps(m: Union[CombMap, FaceListMap], comment: str = "") -> str:
    if isinstance(m, FaceListMap):
        m = build_from_faces(m)
    _, starts = _min_code_and_starts(m)
    order, _ = _traverse(m, starts[0])
    seen = set()
    face_order = []
    for fl in order:
        fi = m.face_of[fl]
        if fi not in seen:
            seen.add(fi)
            face_order.append(fi)
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(f"vertices {m.f0}")
    for fi in face_order:
        lines.append("face " + " ".join(str(v) for v in m.faces[fi]))
    return "\n".join(lines) + "\n"


def read_map_file(path) -> FaceListMap:
    return loads(Path(path).read_text())


def write_map_file(path, m: Union[CombMap, FaceListMap], comment: str = "") -> None:
    Path(path).write_text(dumps(m, comment=comment))
