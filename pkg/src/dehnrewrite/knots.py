"""Built-in PD codes (KnotInfo / Knot Atlas conventions)."""
from __future__ import annotations

from pathlib import Path

from .diagram import Diagram, DiagramError, parse_json, parse_pd

BUILTIN_PD = {
    "trefoil": "X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]",
    "figure8": "X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]",
    "5_1": "X[1,6,2,7], X[3,8,4,9], X[5,10,6,1], X[7,2,8,3], X[9,4,10,5]",
    "5_2": "X[1,5,2,4], X[3,9,4,8], X[5,1,6,10], X[7,3,8,2], X[9,7,10,6]",
    "6_1": "X[1,7,2,6], X[3,10,4,11], X[5,3,6,2], X[7,1,8,12], X[9,4,10,5], X[11,9,12,8]",
    "6_2": "X[1,8,2,9], X[3,11,4,10], X[5,1,6,12], X[7,2,8,3], X[9,7,10,6], X[11,5,12,4]",
    "6_3": "X[4,2,5,1], X[8,4,9,3], X[12,9,1,10], X[10,5,11,6], X[6,11,7,12], X[2,8,3,7]",
    # connected sum of two trefoils; fails the common-projection check
    "granny": "X[1,5,2,4], X[3,1,4,12], X[5,3,6,2], X[7,11,8,10], X[9,7,10,6], X[11,9,12,8]",
    "kink": "X[1,1,2,2]",
}
BUILTIN_PD["3_1"] = BUILTIN_PD["trefoil"]
BUILTIN_PD["4_1"] = BUILTIN_PD["figure8"]


def builtin(name: str) -> Diagram:
    try:
        return parse_pd(BUILTIN_PD[name])
    except KeyError:
        raise DiagramError(f"unknown built-in knot {name!r}; known: {sorted(BUILTIN_PD)}") from None


def load(source: str) -> Diagram:
    """Resolve a built-in name, a path to a .pd/.json file, or inline PD text."""
    if source in BUILTIN_PD:
        return builtin(source)
    path = Path(source)
    if "[" not in source and path.exists():
        text = path.read_text()
        return parse_json(text) if text.lstrip().startswith("{") else parse_pd(text)
    if source.lstrip().startswith("{"):
        return parse_json(source)
    return parse_pd(source)
