"""End-to-end construction from a diagram to the three rewriting systems."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import derived_graph as dg
from .diagram import Diagram, Region, ValidationReport, corner_incidence, edge_sides, faces, require_valid
from .engine import AuditReport, audit_confluence
from .presentation import Presentation, dehn_presentation, symmetrize
from .rules import build_R_double_prime, build_R_prime
from .system import RewritingSystem


@dataclass(frozen=True)
class BuildConfig:
    unbounded: int | None = None  # face index of the unbounded region
    keep_x0: bool = False  # keep the s0 s0' -> 1 rules in R' and R''
    second_antipath: bool = False  # seed x0 as a sink (augmented stage only)
    audit: bool = True


@dataclass
class Construction:
    diagram: Diagram
    config: BuildConfig
    report: ValidationReport
    regions: list[Region]
    incidence: dict
    presentation: Presentation
    delta: dg.DerivedGraph
    roles: dg.RoleAssignment
    t_plus: frozenset
    R: RewritingSystem
    R_prime: RewritingSystem | None = None
    R_double_prime: RewritingSystem | None = None
    audits: dict = field(default_factory=dict)

    def stage(self, name: str) -> RewritingSystem:
        name = {"Rp": "R'", "Rpp": "R''"}.get(name, name)
        S = {"R": self.R, "R'": self.R_prime, "R''": self.R_double_prime}[name]
        if S is None:
            raise ValueError(f"stage {name} is not available for this construction")
        return S

    def audit(self, name: str) -> AuditReport:
        name = {"Rp": "R'", "Rpp": "R''"}.get(name, name)
        if name not in self.audits:
            self.audits[name] = audit_confluence(self.stage(name))
        return self.audits[name]


def t_plus_of(d: Diagram, regions: list[Region], roles: dg.RoleAssignment) -> frozenset:
    """Sink regions sharing an edge with region 0."""
    nbrs = {b for a, b in edge_sides(d, regions).values() if a == 0} | {
        a for a, b in edge_sides(d, regions).values() if b == 0
    }
    return frozenset(g for g in nbrs if g != 0 and roles.role[g] == "sink")


def build(d: Diagram, config: BuildConfig = BuildConfig()) -> Construction:
    if config.unbounded is not None:
        d = d.with_unbounded(config.unbounded)
    report = require_valid(d)
    regions = faces(d)
    inc = corner_incidence(d, regions)
    pres = dehn_presentation(d, inc)
    pairs = [p for r in pres.relators for p in symmetrize(r)]
    delta = dg.build_delta(pairs, pres.generators)
    roles = dg.assign_roles(delta, 0, "sink" if config.second_antipath else "source")
    tp = t_plus_of(d, regions, roles)
    R = dg.build_R(pres.relators, roles, pres.generators, tp)
    c = Construction(d, config, report, regions, inc, pres, delta, roles, tp, R)
    if config.second_antipath:
        return c
    c.R_prime = build_R_prime(R, pres, roles, keep_x0=config.keep_x0)
    Rpp = build_R_double_prime(c.R_prime)
    if config.audit:
        rep = audit_confluence(Rpp)
        c.audits["R''"] = rep
        if rep.ok:
            Rpp = Rpp.mark_audited()
        rep_R = audit_confluence(R)
        c.audits["R"] = rep_R
        if rep_R.ok:
            c.R = R.mark_audited()
    c.R_double_prime = Rpp
    return c
