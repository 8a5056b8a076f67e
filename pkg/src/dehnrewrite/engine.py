"""Rewriting words: the V-ordering, normal forms, and the critical-pair audit."""
from __future__ import annotations

import json
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .presentation import Letter, Word, render
from .system import KIND_ORDER, Rule, RewritingSystem


class MonitorViolation(RuntimeError):
    """A rewrite step that failed to decrease the order vector."""


class FuseBlown(RuntimeError):
    pass


class IncompleteSystem(ValueError):
    pass


# -- decomposition and the order vector -------------------------------------

@dataclass(frozen=True)
class Decomposition:
    blocks: tuple  # k+1 runs of source letters
    sinks: tuple  # k sink letters

    @property
    def n(self) -> list[int]:
        return [len(b) for b in self.blocks]

    @property
    def k(self) -> int:
        return len(self.sinks)

    def word(self) -> Word:
        out = []
        for b, t in zip(self.blocks, self.sinks):
            out.extend(b)
            out.append(t)
        out.extend(self.blocks[-1])
        return tuple(out)


def decompose(w: Sequence[Letter], roles: dict[int, str]) -> Decomposition:
    blocks, sinks, cur = [], [], []
    for a in w:
        try:
            role = roles[a.gen]
        except KeyError:
            raise ValueError(f"letter {render((a,))} has no role") from None
        if role == "source":
            cur.append(a)
        else:
            blocks.append(tuple(cur))
            sinks.append(a)
            cur = []
    blocks.append(tuple(cur))
    return Decomposition(tuple(blocks), tuple(sinks))


class OrderVector(NamedTuple):
    v1: int  # sinks
    v2: int  # positive sinks bordering region 0
    v3: int  # weighted source counts left of each sink
    v4: int  # length


def v3_of(n: Sequence[int], k: int) -> int:
    # sum_{j=1..k} sum_{i=0..k-j} 2^i n_j; block k+1 does not count
    return sum(n[j - 1] * ((1 << (k - j + 1)) - 1) for j in range(1, k + 1))


def order_vector(w: Sequence[Letter], roles: dict[int, str], t_plus) -> OrderVector:
    d = decompose(w, roles)
    v2 = sum(1 for t in d.sinks if t.exp > 0 and t.gen in t_plus)
    return OrderVector(d.k, v2, v3_of(d.n, d.k), len(w))


# -- single steps -----------------------------------------------------------

def redexes(w: Word, S: RewritingSystem) -> list[tuple[int, Rule]]:
    out = []
    for pos in range(len(w)):
        for L in S.lhs_lengths:
            r = S.rule_for(w[pos:pos + L]) if pos + L <= len(w) else None
            if r is not None:
                out.append((pos, r))
    return out


def apply_at(w: Word, pos: int, rule: Rule) -> Word:
    return w[:pos] + rule.rhs + w[pos + len(rule.lhs):]


def _leftmost(w: Word, S: RewritingSystem, start: int = 0):
    for pos in range(start, len(w)):
        for L in S.lhs_lengths:  # longest first
            if pos + L <= len(w):
                r = S.rule_for(w[pos:pos + L])
                if r is not None:
                    return pos, r
    return None


def rewrite_step(w: Sequence[Letter], S: RewritingSystem, strategy: str = "leftmost", rng=None):
    """One rewrite: returns (new word, rule, position) or None if ``w`` is irreducible.

    ``leftmost`` takes the leftmost redex, longest lhs on ties; ``rightmost``
    the rightmost; ``random`` a uniformly chosen redex drawn from ``rng``.
    """
    w = tuple(w)
    if strategy == "leftmost":
        hit = _leftmost(w, S)
    else:
        found = redexes(w, S)
        if not found:
            return None
        if strategy == "rightmost":
            hit = max(found, key=lambda pr: (pr[0], len(pr[1].lhs)))
        elif strategy == "random":
            hit = (rng or random).choice(found)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
    if hit is None:
        return None
    pos, r = hit
    return apply_at(w, pos, r), r, pos


# -- normal forms -----------------------------------------------------------

DEFAULT_FUSE = 10**6


def normal_form(
    w: Sequence[Letter],
    S: RewritingSystem,
    monitor: bool | None = None,
    strategy: str = "leftmost",
    rng=None,
    fuse: int = DEFAULT_FUSE,
    trace: list | None = None,
) -> Word:
    """Rewrite until irreducible.

    With the monitor on (the default for R''), every step must strictly
    decrease the order vector or :class:`MonitorViolation` is raised.  Other
    stages are only guarded by a step-count fuse.
    """
    if monitor is None:
        monitor = S.stage == "R''"
    w = tuple(w)
    v = order_vector(w, S.roles, S.t_plus) if monitor else None
    steps = 0
    start = 0
    while True:
        if strategy == "leftmost":
            hit = _leftmost(w, S, start)
            if hit is None:
                return w
            pos, r = hit
            new = apply_at(w, pos, r)
            start = max(0, pos - S.lhs_lengths[0] + 1)
        else:
            step = rewrite_step(w, S, strategy, rng)
            if step is None:
                return w
            new, r, pos = step
        if trace is not None:
            trace.append((w, pos, r))
        if monitor:
            v_new = order_vector(new, S.roles, S.t_plus)
            if not v_new < v:
                raise MonitorViolation(
                    f"{render(w, S.roles)} -> {render(new, S.roles)} by {r.text(S.roles)}: V {tuple(v)} -> {tuple(v_new)}"
                )
            v = v_new
        w = new
        steps += 1
        if steps > fuse:
            raise FuseBlown(f"no normal form after {fuse} steps")


def word_equal(w1, w2, S: RewritingSystem, require_audit: bool = True) -> bool:
    if require_audit and not getattr(S, "audited", False):
        raise IncompleteSystem("system has not passed the confluence audit")
    return normal_form(w1, S) == normal_form(w2, S)


# -- termination bookkeeping --------------------------------------------------

def step_deltas(w: Word, pos: int, rule: Rule, S: RewritingSystem) -> dict:
    """Check one rewrite step against the class-wise decrease of the order vector.

    Returns a record with the class, both vectors and ``ok``.  For classes A
    and B also checks that the sink moves one block to the left.
    """
    roles, tp = S.roles, S.t_plus
    new = apply_at(w, pos, rule)
    v, v2 = order_vector(w, roles, tp), order_vector(new, roles, tp)
    d = decompose(w, roles)
    dn = decompose(new, roles)
    # index (1-based) of the first sink at or after pos
    sinks_before = sum(1 for a in w[:pos] if roles[a.gen] == "sink")
    p = sinks_before + 1
    k = d.k
    cls = rule.cls
    if rule.kind == "0":
        cls = "0-sink" if roles[rule.lhs[0].gen] == "sink" else "0-source"
    expected_ok = True
    if cls in ("D", "0-sink"):
        expected_ok = v2.v1 == v.v1 - 2
    elif cls == "C":
        expected_ok = v2.v1 == v.v1 and v2.v2 == v.v2 - 1
    elif cls in ("A", "B"):
        gain = 2 if cls == "A" else 1
        dec = 1 if cls == "A" else 1 << (k - p)
        expected_ok = (
            v2.v1 == v.v1 and v2.v2 == v.v2 and v2.v3 == v.v3 - dec
            and dn.n[p - 1] == d.n[p - 1] - 1 and dn.n[p] == d.n[p] + gain
        )
    elif cls == "0-source":
        # with no sink to the right (including k == 0) the block is S_{k+1}, which V3 ignores
        if p > k:
            expected_ok = v2.v3 == v.v3 and v2.v4 == v.v4 - 2
        else:
            expected_ok = v2.v3 == v.v3 - 2 * ((1 << (k - p + 1)) - 1)
        expected_ok = expected_ok and v2.v1 == v.v1 and v2.v2 == v.v2
    else:
        expected_ok = False
    return {"class": cls, "before": v, "after": v2, "decreases": v2 < v, "ok": expected_ok and v2 < v}


# -- ambiguities and the audit ------------------------------------------------

@dataclass(frozen=True)
class Ambiguity:
    variant: str  # "overlap" | "inclusion"
    rule1: Rule
    rule2: Rule
    u: Word
    v: Word
    w: Word

    @property
    def word(self) -> Word:
        if self.variant == "overlap":
            return self.u + self.v + self.w
        return self.rule2.lhs

    @property
    def critical_pair(self) -> tuple[Word, Word]:
        if self.variant == "overlap":
            return self.rule1.rhs + self.w, self.u + self.rule2.rhs
        return self.u + self.rule1.rhs + self.w, self.rule2.rhs


def enumerate_ambiguities(S: RewritingSystem) -> list[Ambiguity]:
    out = []
    rules = S.rules
    for r1 in rules:
        l1 = r1.lhs
        for r2 in rules:
            l2 = r2.lhs
            for o in range(1, min(len(l1), len(l2))):
                if l1[-o:] == l2[:o]:
                    out.append(Ambiguity("overlap", r1, r2, l1[:-o], l1[-o:], l2[o:]))
            if r1 is not r2 and len(l1) <= len(l2):
                for p in range(len(l2) - len(l1) + 1):
                    if l2[p:p + len(l1)] == l1:
                        out.append(Ambiguity("inclusion", r1, r2, l2[:p], l1, l2[p + len(l1):]))
    return out


def descendants(w: Word, S: RewritingSystem, cap: int = 5000) -> set:
    seen = {w}
    queue = deque([w])
    while queue and len(seen) < cap:
        cur = queue.popleft()
        for pos, r in redexes(cur, S):
            nxt = apply_at(cur, pos, r)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


@dataclass
class AuditRecord:
    ambiguity: Ambiguity
    nf1: Word
    nf2: Word
    resolved: bool

    def as_dict(self, roles=None) -> dict:
        a = self.ambiguity
        return {
            "variant": a.variant,
            "ruleA": a.rule1.as_dict(roles),
            "ruleB": a.rule2.as_dict(roles),
            "overlapWord": render(a.word, roles),
            "branch1NF": render(self.nf1, roles),
            "branch2NF": render(self.nf2, roles),
            "resolved": self.resolved,
        }


@dataclass
class AuditReport:
    stage: str
    records: list[AuditRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.resolved for r in self.records)

    @property
    def unresolved(self) -> list[AuditRecord]:
        return [r for r in self.records if not r.resolved]

    def table(self) -> dict:
        """Counts per (left kind, right kind), as (total, unresolved)."""
        tally = Counter()
        bad = Counter()
        for r in self.records:
            key = (r.ambiguity.rule1.kind, r.ambiguity.rule2.kind)
            tally[key] += 1
            bad[key] += not r.resolved
        keys = sorted(tally, key=lambda kk: (KIND_ORDER.index(kk[0]), KIND_ORDER.index(kk[1])))
        return {k: (tally[k], bad[k]) for k in keys}

    def to_json(self, roles=None) -> str:
        return json.dumps(
            {
                "stage": self.stage,
                "ok": self.ok,
                "ambiguities": len(self.records),
                "unresolved": len(self.unresolved),
                "table": [
                    {"left": a, "right": b, "count": n, "unresolved": u}
                    for (a, b), (n, u) in self.table().items()
                ],
                "records": [r.as_dict(roles) for r in self.records],
            },
            indent=1,
        )

    def to_text(self, roles=None) -> str:
        lines = [
            f"# audit of stage {self.stage}: {len(self.records)} ambiguities, "
            f"{len(self.unresolved)} unresolved -> {'PASS' if self.ok else 'FAIL'}"
        ]
        for (a, b), (n, u) in self.table().items():
            lines.append(f"  ({a}) x ({b}): {n}" + (f"  [{u} unresolved]" if u else ""))
        for r in self.unresolved:
            d = r.as_dict(roles)
            lines.append(
                f"  unresolved {d['variant']}: {d['overlapWord']} -> {d['branch1NF']} | {d['branch2NF']}"
                f"  ({d['ruleA']['lhs']} -> {d['ruleA']['rhs']} / {d['ruleB']['lhs']} -> {d['ruleB']['rhs']})"
            )
        return "\n".join(lines)


def audit_confluence(S: RewritingSystem, monitor: bool | None = None) -> AuditReport:
    """Normalize both sides of every critical pair.

    A pair resolves when the two leftmost normal forms agree, or failing that
    when the two branches have a common descendant (bounded search).
    """
    report = AuditReport(S.stage)
    for amb in enumerate_ambiguities(S):
        b1, b2 = amb.critical_pair
        nf1 = normal_form(b1, S, monitor=monitor)
        nf2 = normal_form(b2, S, monitor=monitor)
        ok = nf1 == nf2 or bool(descendants(b1, S) & descendants(b2, S))
        report.records.append(AuditRecord(amb, nf1, nf2, ok))
    return report
