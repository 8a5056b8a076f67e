"""Knot diagrams given as planar-diagram (PD) codes.

A crossing is a 4-tuple of edge labels listed counterclockwise.  In a PD
code the first slot is the incoming under-strand, so the over-strand sits on
slots 1 and 3.  The JSON mirror format states the over pair explicitly.

Faces are found by walking corners of the combinatorial map: corner ``(c, i)``
is the angle between slots ``i`` and ``i + 1`` of crossing ``c``.
"""
from __future__ import annotations

import json
import re
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    id: int
    edges: tuple[int, int, int, int]
    # 0: over-strand on slots 0-2, 1: over-strand on slots 1-3 (PD convention)
    over: int = 1

    def __post_init__(self):
        if len(self.edges) != 4:
            raise DiagramError(f"crossing {self.id}: expected 4 edge slots, got {len(self.edges)}")
        if self.over not in (0, 1):
            raise DiagramError(f"crossing {self.id}: over must be 0 or 1")

    @property
    def under_slots(self) -> tuple[int, int]:
        return (1, 3) if self.over == 0 else (0, 2)

    def is_over_slot(self, slot: int) -> bool:
        return slot % 2 == self.over


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    unbounded: int | None = None  # face index; None picks the default

    def __post_init__(self):
        seen = defaultdict(int)
        for c in self.crossings:
            for e in c.edges:
                seen[e] += 1
        bad = sorted(e for e, n in seen.items() if n != 2)
        if bad:
            raise DiagramError(f"edge labels must appear exactly twice; offending: {bad}")

    @property
    def edges(self) -> list[int]:
        return sorted({e for c in self.crossings for e in c.edges})

    def darts(self) -> dict[int, list[tuple[int, int]]]:
        out = defaultdict(list)
        for ci, c in enumerate(self.crossings):
            for slot, e in enumerate(c.edges):
                out[e].append((ci, slot))
        return out

    def other_end(self, ci: int, slot: int) -> tuple[int, int]:
        return self._pairing[(ci, slot)]

    @property
    def _pairing(self) -> dict[tuple[int, int], tuple[int, int]]:
        cached = self.__dict__.get("_pairing_cache")
        if cached is None:
            cached = {}
            for e, (a, b) in self.darts().items():
                cached[a] = b
                cached[b] = a
            object.__setattr__(self, "_pairing_cache", cached)
        return cached

    @property
    def component_count(self) -> int:
        """Number of link components, found by following strands straight through crossings."""
        unvisited = set(self._pairing)
        count = 0
        while unvisited:
            count += 1
            start = min(unvisited)
            ci, slot = start
            while (ci, slot) in unvisited:
                unvisited.discard((ci, slot))
                through = (ci, (slot + 2) % 4)
                unvisited.discard(through)
                ci, slot = self.other_end(*through)
        return count

    def mirror(self) -> "Diagram":
        """Swap over and under at every crossing."""
        return Diagram(
            tuple(Crossing(c.id, c.edges, 1 - c.over) for c in self.crossings),
            self.unbounded,
        )

    def with_unbounded(self, face_index: int | None) -> "Diagram":
        return Diagram(self.crossings, face_index)


@dataclass(frozen=True)
class Region:
    id: int
    face_index: int
    boundary: tuple[tuple[int, int], ...]  # (crossing index, corner) pairs
    edges: tuple[int, ...]

    def __len__(self):
        return len(self.boundary)


_QUAD = re.compile(r"X\s*\[([^\]]*)\]")


def parse_pd(text: str) -> Diagram:
    """Parse ``X[a,b,c,d]`` terms; ``#`` starts a comment."""
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    crossings = []
    for m in _QUAD.finditer(body):
        parts = [p.strip() for p in m.group(1).split(",") if p.strip()]
        if len(parts) != 4:
            raise DiagramError(f"malformed quadruple {m.group(0)!r}: need 4 edge labels")
        try:
            labels = tuple(int(p) for p in parts)
        except ValueError:
            raise DiagramError(f"malformed quadruple {m.group(0)!r}: labels must be integers") from None
        if any(x <= 0 for x in labels):
            raise DiagramError(f"malformed quadruple {m.group(0)!r}: labels must be positive")
        crossings.append(Crossing(len(crossings), labels, over=1))
    leftover = _QUAD.sub("", body).replace(",", " ").replace("PD", "").strip("[]() \n\t")
    if leftover.strip():
        raise DiagramError(f"unparseable PD text near {leftover.strip()[:20]!r}")
    if not crossings:
        raise DiagramError("empty PD code")
    return Diagram(tuple(crossings))


def parse_json(text: str) -> Diagram:
    data = json.loads(text)
    try:
        crossings = tuple(
            Crossing(i, tuple(int(e) for e in c["edges"]), int(c.get("over", 1)))
            for i, c in enumerate(data["crossings"])
        )
    except (KeyError, TypeError) as exc:
        raise DiagramError(f"bad JSON diagram: {exc}") from None
    if not crossings:
        raise DiagramError("empty diagram")
    return Diagram(crossings, data.get("unbounded"))


def to_json(d: Diagram) -> str:
    data = {"crossings": [{"edges": list(c.edges), "over": c.over} for c in d.crossings]}
    if d.unbounded is not None:
        data["unbounded"] = d.unbounded
    return json.dumps(data)


def to_pd(d: Diagram) -> str:
    out = []
    for c in d.crossings:
        e = c.edges if c.over == 1 else c.edges[1:] + c.edges[:1]
        out.append("X[%d,%d,%d,%d]" % e)
    return ", ".join(out)


def _face_walk(d: Diagram) -> list[tuple[tuple[int, int], ...]]:
    seen = set()
    faces = []
    for ci in range(len(d.crossings)):
        for corner in range(4):
            if (ci, corner) in seen:
                continue
            walk = []
            cur = (ci, corner)
            while cur not in seen:
                seen.add(cur)
                walk.append(cur)
                c, i = cur
                cur = d.other_end(c, (i + 1) % 4)
            faces.append(tuple(walk))
    return faces


def faces(d: Diagram) -> list[Region]:
    """Regions of the projection; region 0 is the unbounded one.

    Faces are first indexed in discovery order.  The unbounded face is
    ``d.unbounded`` if given, otherwise the longest boundary (smallest index
    on ties); it is renumbered 0 and the others keep their relative order.
    """
    walks = _face_walk(d)
    n = len(d.crossings)
    if len(walks) != n + 2:
        raise DiagramError(
            f"face count {len(walks)} != crossings + 2 = {n + 2}: rotation data is not planar"
        )
    if d.unbounded is None:
        u = max(range(len(walks)), key=lambda f: (len(walks[f]), -f))
    else:
        u = d.unbounded
        if not 0 <= u < len(walks):
            raise DiagramError(f"unbounded face index {u} out of range 0..{len(walks) - 1}")
    regions = []
    for f, walk in enumerate(walks):
        rid = 0 if f == u else (f + 1 if f < u else f)
        edges = tuple(d.crossings[c].edges[(i + 1) % 4] for c, i in walk)
        regions.append(Region(rid, f, walk, edges))
    regions.sort(key=lambda r: r.id)
    return regions


def corner_regions(regions: list[Region]) -> dict[tuple[int, int], int]:
    return {corner: r.id for r in regions for corner in r.boundary}


def edge_sides(d: Diagram, regions: list[Region]) -> dict[int, tuple[int, int]]:
    """The two regions on either side of every edge."""
    cr = corner_regions(regions)
    out = {}
    for ci, c in enumerate(d.crossings):
        for slot, e in enumerate(c.edges):
            out[e] = tuple(sorted((cr[(ci, (slot - 1) % 4)], cr[(ci, slot)])))
    return out


def region_adjacency(d: Diagram, regions: list[Region]) -> dict[frozenset, set[int]]:
    """Map each unordered pair of regions to the edges they share."""
    shared = defaultdict(set)
    for e, (a, b) in edge_sides(d, regions).items():
        shared[frozenset((a, b))].add(e)
    return shared


def checkerboard(d: Diagram, regions: list[Region]) -> dict[int, int] | None:
    """2-colour the regions so adjacent regions differ; region 0 gets colour 0.

    Returns None when the adjacency graph is not bipartite.
    """
    nbrs = defaultdict(set)
    for pair in region_adjacency(d, regions):
        a, b = tuple(pair) if len(pair) == 2 else (next(iter(pair)),) * 2
        nbrs[a].add(b)
        nbrs[b].add(a)
    colour = {}
    for start in sorted(r.id for r in regions):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in nbrs[a]:
                if b not in colour:
                    colour[b] = 1 - colour[a]
                    queue.append(b)
                elif colour[b] == colour[a]:
                    return None
    return colour


@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    messages: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def record(self, name: str, passed: bool, message: str = ""):
        self.checks[name] = passed
        self.messages[name] = message

    def failures(self) -> list[str]:
        return [f"{k}: {self.messages[k]}" for k, v in self.checks.items() if not v]

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": {k: {"passed": v, "message": self.messages[k]} for k, v in self.checks.items()},
        }


def validate(d: Diagram) -> ValidationReport:
    report = ValidationReport()

    kinks = [c.id for c in d.crossings if len(set(c.edges)) < 4]
    report.record("reduced", not kinks, f"edge meets itself at crossing(s) {kinks}" if kinks else "")

    try:
        regions = faces(d)
    except DiagramError as exc:
        report.record("planar", False, str(exc))
        return report
    report.record("planar", True, f"{len(regions)} regions")

    comps = d.component_count
    report.record("single_component", comps == 1, f"{comps} component(s)")

    bad_edges = []
    for e, ends in d.darts().items():
        kinds = sorted(d.crossings[ci].is_over_slot(slot) for ci, slot in ends)
        if kinds != [False, True]:
            bad_edges.append(e)
    report.record(
        "alternating",
        not bad_edges,
        f"edges not joining an over to an under slot: {sorted(bad_edges)}" if bad_edges else "",
    )

    problems = []
    cr = corner_regions(regions)
    for ci in range(len(d.crossings)):
        around = [cr[(ci, k)] for k in range(4)]
        if len(set(around)) != 4:
            problems.append(f"crossing {ci} touches regions {around}")
    for pair, shared in sorted(region_adjacency(d, regions).items(), key=lambda kv: sorted(kv[0])):
        if len(pair) == 1:
            problems.append(f"region {next(iter(pair))} borders itself")
        elif len(shared) > 1:
            a, b = sorted(pair)
            problems.append(f"regions {a} and {b} share edges {sorted(shared)}")
    report.record("common", not problems, "; ".join(problems))

    colour = checkerboard(d, regions)
    report.record("checkerboard", colour is not None, "" if colour else "region graph not bipartite")
    return report


def require_valid(d: Diagram) -> ValidationReport:
    report = validate(d)
    if not report.ok:
        raise DiagramError("diagram failed validation: " + "; ".join(report.failures()))
    return report


def corner_incidence(d: Diagram, regions: list[Region] | None = None) -> dict[int, tuple[int, int, int, int]]:
    """Per crossing, the regions (a, b, c, d) giving the relator a b' c d'.

    Corners are read counterclockwise starting with the one just after an
    under-strand slot.
    """
    if regions is None:
        regions = faces(d)
    cr = corner_regions(regions)
    out = {}
    for ci, c in enumerate(d.crossings):
        s = c.under_slots[0]
        quad = tuple(cr[(ci, (s + k) % 4)] for k in range(4))
        if len(set(quad)) != 4:
            raise DiagramError(f"crossing {ci}: corner regions {quad} are not distinct")
        out[ci] = quad
    return out


def shared_edge_counts(d: Diagram, regions: list[Region]) -> dict[tuple[int, int], int]:
    """Brute-force count of edges shared by every pair of distinct regions."""
    out = {}
    for a, b in combinations(regions, 2):
        out[(a.id, b.id)] = len(set(a.edges) & set(b.edges))
    return out
