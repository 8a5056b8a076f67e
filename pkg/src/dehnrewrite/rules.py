"""From the augmented system to a complete system for the knot group.

The Dehn-presentation system R' orients the three relations left after
killing x0 in each relator through x0, and keeps the four augmented rules of
every other relator.  R'' adds the derived rules of kinds (4) and (5),
rewrites right-hand sides through the kind-(1) rules, and drops the rules
whose left-hand side contains a kind-(1) left-hand side.
"""
from __future__ import annotations

import logging
from collections import Counter

from .derived_graph import RoleAssignment, RoleConflict, relator_rules
from .engine import normal_form, order_vector
from .presentation import Letter, Presentation, render
from .system import Rule, RewritingSystem, free_reduction_rules

log = logging.getLogger(__name__)


class ConstructionError(RuntimeError):
    pass


RENAMED = {"alpha": "alpha'", "beta": "beta'", "2": "2'"}


def phi_rules(relator, roles: RoleAssignment, killed: int = 0) -> list[Rule]:
    """Oriented kinds (1) t_l -> t_j' s_k, (2) s_k t_l' -> t_j, (3) t_l' t_j' -> s_k'."""
    _, j, k, l = relator.starting_with(killed).indices
    if roles.role[k] != "source" or roles.role[j] != "sink" or roles.role[l] != "sink":
        raise RoleConflict(f"relator {relator} through x{killed}: expected x{k} source, x{j}, x{l} sinks")
    tl, tj, sk = Letter(l, 1), Letter(j, 1), Letter(k, 1)
    c = relator.crossing
    return [
        Rule((tl,), (tj.inv(), sk), "1", None, c),
        Rule((sk, tl.inv()), (tj,), "2", None, c),
        Rule((tl.inv(), tj.inv()), (sk.inv(),), "3", None, c),
    ]


def build_R_prime(R: RewritingSystem, pres: Presentation, roles: RoleAssignment, keep_x0: bool = False) -> RewritingSystem:
    killed = pres.killed if pres.killed is not None else 0
    tp = R.t_plus
    rules = []
    for r in pres.relators:
        if killed in r.indices:
            new = phi_rules(r, roles, killed)
            # the augmented rules these descend from: s0' t_l -> t_j' s_k and s_k t_l' -> t_j s0'
            s0 = Letter(killed, 1)
            one, two = new[0], new[1]
            for lhs, rhs in (((s0.inv(),) + one.lhs, one.rhs), (two.lhs, two.rhs + (s0.inv(),))):
                got = R.rule_for(lhs)
                if got is None or got.rhs != rhs:
                    raise RoleConflict(
                        f"augmented system lacks {render(lhs, roles.role)} -> {render(rhs, roles.role)}"
                    )
            rules.extend(new)
        else:
            rules.extend(relator_rules(r, roles, tp))
    gens = [g for g in pres.generators if keep_x0 or g != killed]
    rules.extend(free_reduction_rules(gens, roles.role))
    return RewritingSystem(tuple(rules), dict(roles.role), tp, "R'", killed)


def _orient(a, b, S: RewritingSystem, kind: str, crossing=None) -> Rule:
    va, vb = order_vector(a, S.roles, S.t_plus), order_vector(b, S.roles, S.t_plus)
    if va == vb:
        raise ConstructionError(
            f"cannot orient {render(a, S.roles)} = {render(b, S.roles)}: equal order vectors {tuple(va)}"
        )
    if va < vb:
        a, b = b, a
    return Rule(a, b, kind, None, crossing)


def _add(S: RewritingSystem, new: list[Rule]) -> RewritingSystem:
    have = {(r.lhs, r.rhs) for r in S.rules}
    extra = []
    for r in new:
        if (r.lhs, r.rhs) not in have:
            have.add((r.lhs, r.rhs))
            extra.append(r)
    return S.with_rules(S.rules + tuple(extra))


def add_kind4(S: RewritingSystem) -> RewritingSystem:
    """For chained t_l' t_j' -> s_k' and t_j' t_l2' -> s_k2', add s_k' t_l2' -> t_l' s_k2'."""
    threes = [r for r in S.rules if r.kind == "3"]
    new = []
    for a in threes:
        for b in threes:
            if a.lhs[1] == b.lhs[0]:
                new.append(_orient(a.rhs + b.lhs[1:], a.lhs[:1] + b.rhs, S, "4"))
    return _add(S, new)


def add_kind5(S: RewritingSystem) -> RewritingSystem:
    """For s t_x' -> t_y s_z' (alpha or beta) and t_x' t_j' -> s_k', add s_z' t_j' -> t_y' s s_k'."""
    threes = {}
    for r in S.rules:
        if r.kind == "3":
            threes.setdefault(r.lhs[0], []).append(r)
    new = []
    for r in S.rules:
        if r.kind not in ("alpha", "beta"):
            continue
        s, tx = r.lhs
        ty, sz = r.rhs
        for three in threes.get(tx, ()):
            tj, sk = three.lhs[1], three.rhs[0]
            new.append(_orient((sz, tj), (ty.inv(), s, sk), S, "5", r.crossing))
    return _add(S, new)


def rewire(S: RewritingSystem, max_passes: int | None = None) -> tuple[RewritingSystem, int]:
    """Rewrite every positive t+ on a right-hand side through its kind-(1) rule and drop
    rules whose left-hand side contains such a letter.  Iterates to a fixpoint."""
    ones = {r.lhs[0]: r for r in S.rules if r.kind == "1"}
    limit = max_passes or len(S.rules) + 1
    passes = 0
    while True:
        changed = False
        rules = []
        for r in S.rules:
            if r.kind in ("1", "0"):
                rules.append(r)
                continue
            if any(a in ones for a in r.lhs):
                changed = True
                continue
            if any(a in ones for a in r.rhs):
                rhs = tuple(b for a in r.rhs for b in (ones[a].rhs if a in ones else (a,)))
                rules.append(r.with_(rhs=rhs, kind=RENAMED.get(r.kind, r.kind)))
                changed = True
            else:
                rules.append(r)
        S = S.with_rules(rules)
        if not changed:
            break
        passes += 1
        if passes > limit:
            raise ConstructionError(f"rewiring did not reach a fixpoint in {limit} passes")
    log.debug("rewiring fixpoint after %d pass(es)", passes)
    return S, passes


def add_kind5_and_rewire(S: RewritingSystem) -> RewritingSystem:
    S, _ = rewire(add_kind5(S))
    return S


def is_reduced(S: RewritingSystem, strict: bool = False) -> bool:
    return not reducedness_problems(S, strict)


def reducedness_problems(S: RewritingSystem, strict: bool = False) -> list[str]:
    """Right-hand sides must be irreducible and no lhs may contain another.

    Unless ``strict``, a free-reduction lhs such as t t' may contain a
    kind-(1) lhs t: those rules stay in the system as listed.
    """
    out = []
    lhss = [r.lhs for r in S.rules]
    for r in S.rules:
        for other in lhss:
            if other is r.lhs:
                continue
            n = len(other)
            if (strict or r.kind != "0") and any(r.lhs[p:p + n] == other for p in range(len(r.lhs) - n + 1)):
                out.append(f"lhs {render(r.lhs, S.roles)} contains {render(other, S.roles)}")
            if any(r.rhs[p:p + n] == other for p in range(len(r.rhs) - n + 1)):
                out.append(f"rhs of {r.text(S.roles)} contains {render(other, S.roles)}")
    return out


def reduce_system(S: RewritingSystem, monitor: bool = True) -> RewritingSystem:
    """Normalize every right-hand side, then drop rules whose lhs contains another lhs.

    Free-reduction rules are always kept.
    """
    if monitor:
        for r in S.rules:
            if not order_vector(r.rhs, S.roles, S.t_plus) < order_vector(r.lhs, S.roles, S.t_plus):
                raise ConstructionError(f"rule {r.text(S.roles)} does not decrease the order vector")
    while True:
        rules = []
        for r in S.rules:
            rhs = normal_form(r.rhs, S, monitor=monitor)
            if rhs != r.rhs:
                r = r.with_(rhs=rhs, kind=RENAMED.get(r.kind, r.kind))
            rules.append(r)
        kept = []
        by_lhs = {}
        for r in rules:
            if r.lhs in by_lhs:
                if by_lhs[r.lhs].rhs != r.rhs:
                    raise ConstructionError(
                        f"two rules for {render(r.lhs, S.roles)} with different normal forms"
                    )
                continue
            contains = r.kind != "0" and any(
                o != r.lhs and any(r.lhs[p:p + len(o)] == o for p in range(len(r.lhs) - len(o) + 1))
                for o in (q.lhs for q in rules)
            )
            if contains:
                continue
            by_lhs[r.lhs] = r
            kept.append(r)
        new = S.with_rules(kept, stage=S.stage)
        if new.rules == S.rules:
            return new
        S = new


def classify_rule(r: Rule, S: RewritingSystem) -> str:
    if r.kind == "0":
        return "free-reduction"

    def pat(w):
        return "".join("s" if S.roles[a.gen] == "source" else "t" for a in w)

    lhs, rhs = pat(r.lhs), pat(r.rhs)
    if lhs == "st" and rhs == "tss":
        return "A"
    if lhs == "st" and rhs == "ts":
        return "B"
    if lhs == "t" and rhs == "ts" and r.lhs[0].exp > 0 and r.lhs[0].gen in S.t_plus:
        return "C"
    if lhs == "tt" and rhs == "s":
        return "D"
    raise ConstructionError(f"rule {r.text(S.roles)} fits none of the classes A-D")


def classify(S: RewritingSystem) -> tuple[RewritingSystem, Counter]:
    """Attach a class to every rule; also checks that a t+ heading a class-C rule
    occurs in no other non-(0) rule."""
    rules = [r.with_(cls=classify_rule(r, S)) for r in S.rules]
    tally = Counter(r.cls for r in rules)
    for c in (r for r in rules if r.cls == "C"):
        t = c.lhs[0]
        for r in rules:
            if r is not c and r.kind != "0" and (t in r.lhs or t in r.rhs):
                raise ConstructionError(f"{render((t,), S.roles)} heads a class-C rule but occurs in {r.text(S.roles)}")
    return S.with_rules(rules), tally


def build_R_double_prime(Rp: RewritingSystem) -> RewritingSystem:
    S = add_kind4(Rp)
    S = add_kind5_and_rewire(S)
    S = reduce_system(S)
    S, _ = classify(S)
    return S.with_rules(S.rules, stage="R''")
