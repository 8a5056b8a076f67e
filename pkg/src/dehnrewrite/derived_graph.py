"""The derived graph, its source/sink antipath, and the complete system for the augmented presentation."""
from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass

from .presentation import Letter, RelationPair, Relator, letter_name, symmetrize
from .system import Rule, RewritingSystem, free_reduction_rules


class RoleConflict(ValueError):
    pass


@dataclass(frozen=True)
class DerivedGraph:
    vertices: frozenset  # of Letter
    multiplicity: dict  # (Letter, Letter) -> count

    @property
    def edges(self) -> list[tuple[Letter, Letter]]:
        return sorted(self.multiplicity)

    @property
    def raw_edge_count(self) -> int:
        return sum(self.multiplicity.values())

    def degrees(self) -> dict[Letter, int]:
        deg = Counter()
        for (a, b), m in self.multiplicity.items():
            deg[a] += m
            deg[b] += m
        return deg

    def components(self) -> list[frozenset]:
        nbrs = defaultdict(set)
        for a, b in self.multiplicity:
            nbrs[a].add(b)
            nbrs[b].add(a)
        seen, out = set(), []
        for v in sorted(nbrs):
            if v in seen:
                continue
            comp, queue = {v}, deque([v])
            while queue:
                for w in nbrs[queue.popleft()]:
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def eulerian_diagnostic(self) -> dict:
        deg = self.degrees()
        comps = self.components()
        return {
            "components": len(comps),
            "all_even": all(d % 2 == 0 for d in deg.values()),
            "component_edges": [
                sum(m for (a, _), m in self.multiplicity.items() if a in c) for c in comps
            ],
        }


def build_delta(pairs: list[RelationPair], generators=None) -> DerivedGraph:
    mult = Counter()
    for p in pairs:
        for side in (p.lhs, p.rhs):
            if len(side) != 2:
                raise ValueError(f"relation side of length {len(side)} in {p}")
            mult[tuple(side)] += 1
    gens = set(generators or ()) | {a.gen for e in mult for a in e}
    vertices = frozenset(Letter(g, s) for g in gens for s in (1, -1))
    g = DerivedGraph(vertices, dict(mult))
    odd = sorted(v for v, d in g.degrees().items() if d % 2)
    if odd:
        raise ValueError(f"odd-degree vertices in derived graph: {[letter_name(v) for v in odd]}")
    return g


@dataclass(frozen=True)
class RoleAssignment:
    role: dict  # generator -> "source" | "sink"

    def of(self, a: Letter) -> str:
        return self.role[a.gen]

    def sources(self) -> list[int]:
        return sorted(g for g, r in self.role.items() if r == "source")

    def sinks(self) -> list[int]:
        return sorted(g for g, r in self.role.items() if r == "sink")


def assign_roles(g: DerivedGraph, seed: int = 0, seed_role: str = "source") -> RoleAssignment:
    """Propagate roles from the seed: every edge of the graph joins a source to a sink.

    A generator and its inverse always share a role.  Seeding x0 as a source
    gives the antipath used throughout; seeding it as a sink gives the other one.
    """
    other = {"source": "sink", "sink": "source"}
    nbrs = defaultdict(set)
    for a, b in g.multiplicity:
        nbrs[a.gen].add(b.gen)
        nbrs[b.gen].add(a.gen)
    gens = {v.gen for v in g.vertices}
    if seed not in gens:
        raise RoleConflict(f"seed x{seed} is not a vertex of the derived graph")
    role = {seed: seed_role}
    queue = deque([seed])
    while queue:
        a = queue.popleft()
        for b in sorted(nbrs[a]):
            if b not in role:
                role[b] = other[role[a]]
                queue.append(b)
            elif role[b] == role[a]:
                raise RoleConflict(f"x{a} and x{b} are adjacent but both forced to be {role[a]}s")
    missing = sorted(gens - set(role))
    if missing:
        raise RoleConflict(f"generators {missing} not reached from the seed")
    return RoleAssignment(role)


def antipath(g: DerivedGraph, roles: RoleAssignment) -> list[tuple[Letter, Letter]]:
    """Edges leaving sources; these are the left-hand sides of the rules."""
    return [e for e in g.edges if roles.of(e[0]) == "source"]


def is_antipath(edges) -> bool:
    starts = {a for a, _ in edges}
    return not any(b in starts for _, b in edges)


def orient(pair: RelationPair, roles: RoleAssignment) -> tuple:
    """Return (lhs, rhs) with lhs the source-to-sink side."""
    def st(side):
        return roles.of(side[0]) == "source" and roles.of(side[1]) == "sink"

    def ts(side):
        return roles.of(side[0]) == "sink" and roles.of(side[1]) == "source"

    if st(pair.lhs) and ts(pair.rhs):
        return pair.lhs, pair.rhs
    if st(pair.rhs) and ts(pair.lhs):
        return pair.rhs, pair.lhs
    raise RoleConflict(f"relation {pair} does not join a source-sink side to a sink-source side")


def source_form(r: Relator, roles: RoleAssignment, t_plus=frozenset()) -> Relator:
    """Spell the relator as s_i t_j' s_k t_l' with the sources in the positive slots.

    Of the two such spellings, prefer the one whose l-sink is in ``t_plus``
    (and then the smaller i), so the l slot marks the sink with a kind-(1) rule.
    """
    cands = [f for f in r.forms() if roles.of(f.word[0]) == "source"]
    if not cands or any(roles.of(a) != ("source" if a.exp > 0 else "sink") for a in cands[0].word):
        raise RoleConflict(f"relator {r} does not alternate sources and sinks")
    return min(cands, key=lambda f: (f.indices[3] not in t_plus, f.indices[0]))


ALPHA_BETA = ("alpha", "gamma", "beta", "delta")


def relator_rules(r: Relator, roles: RoleAssignment, t_plus=frozenset()) -> list[Rule]:
    """The four oriented rules of one relator, labelled alpha, gamma, beta, delta in that order.

    With the relator spelled s_i t_j' s_k t_l':
    alpha s_i t_j' -> t_l s_k', gamma s_i' t_l -> t_j' s_k,
    beta s_k t_l' -> t_j s_i', delta s_k' t_j -> t_l' s_i.
    """
    f = source_form(r, roles, t_plus)
    out = []
    for kind, pair in zip(ALPHA_BETA, symmetrize(f)):
        lhs, rhs = orient(pair, roles)
        out.append(Rule(lhs, rhs, kind, None, r.crossing))
    return out


def build_R(relators, roles: RoleAssignment, generators=None, t_plus=frozenset()) -> RewritingSystem:
    """Complete system for the augmented presentation: 4 rules per relator plus free reduction."""
    rules = []
    for r in relators:
        rules.extend(relator_rules(r, roles, t_plus))
    lhs_seen = Counter(r.lhs for r in rules)
    dup = [k for k, n in lhs_seen.items() if n > 1]
    if dup:
        raise RoleConflict(f"two rules share a left-hand side: {dup[0]}")
    gens = generators if generators is not None else sorted(roles.role)
    rules.extend(free_reduction_rules(gens, roles.role))
    return RewritingSystem(tuple(rules), dict(roles.role), frozenset(t_plus), "R", None)


def emit_dot(g: DerivedGraph, roles: RoleAssignment) -> str:
    names = {v: letter_name(v, roles.role) for v in g.vertices}
    lines = ["digraph Delta {"]
    for v in sorted(g.vertices):
        shape = "box" if roles.of(v) == "source" else "ellipse"
        lines.append(f'  "{names[v]}" [shape={shape}];')
    for a, b in g.edges:
        style = ' [color=red, penwidth=2]' if roles.of(a) == "source" else ""
        lines.append(f'  "{names[a]}" -> "{names[b]}"{style};')
    lines.append("}")
    return "\n".join(lines)
