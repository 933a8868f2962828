"""Bundled reference maps.

Sphere oracles (tetrahedron, octahedron, cube, cuboctahedron), one hexagonal
torus map, and the short-running census maps for Euler characteristic -1.
The census fixtures were produced by the enumerator itself and frozen; the
manifest records each file's canonical-code digest so a rebuilt fixture can
be checked bit-for-bit against the original census.
"""

from __future__ import annotations

import json
from importlib import resources

from .mapcore import CombMap, FaceListMap, build_from_faces
from .mapfile import loads

__all__ = ["fixture_names", "fixture_map", "fixture_face_list", "manifest", "fixtures_for_type"]


def _fixture_dir():
    return resources.files(__package__) / "fixtures"


def manifest() -> dict:
    return json.loads((_fixture_dir() / "MANIFEST.json").read_text())


def fixture_names() -> list[str]:
    return sorted(manifest()["fixtures"])


def fixture_face_list(name: str) -> FaceListMap:
    return loads((_fixture_dir() / f"{name}.map").read_text())


def fixture_map(name: str) -> CombMap:
    return build_from_faces(fixture_face_list(name))


def fixtures_for_type(type_string: str) -> list[str]:
    """Fixture names whose recorded vertex type matches (string form)."""
    return sorted(
        name
        for name, meta in manifest()["fixtures"].items()
        if meta.get("type") == type_string
    )
