"""Compare presentations and rule sets up to relabeling of the generators."""
from __future__ import annotations

from itertools import permutations

from .presentation import Letter, cyclic_rotations, inverse


def relabel(w, perm: dict[int, int]):
    return tuple(Letter(perm[a.gen], a.exp) for a in w)


def cyclic_key(w) -> tuple:
    """Canonical representative of a word up to cyclic rotation and inversion."""
    return min(tuple(r) for v in (tuple(w), inverse(w)) for r in cyclic_rotations(v))


def relator_set(words, perm=None) -> list:
    return sorted(cyclic_key(relabel(w, perm) if perm else w) for w in words)


def rule_set(pairs, perm=None) -> set:
    if perm is None:
        return {(tuple(l), tuple(r)) for l, r in pairs}
    return {(relabel(l, perm), relabel(r, perm)) for l, r in pairs}


def find_relabeling(mine_gens, theirs_gens, same, fix=()):
    """Search bijections mine -> theirs (fixing the generators in ``fix``) until ``same(perm)``."""
    mine = sorted(g for g in mine_gens if g not in fix)
    theirs = sorted(g for g in theirs_gens if g not in fix)
    if len(mine) != len(theirs):
        return None
    for image in permutations(theirs):
        perm = dict(zip(mine, image))
        perm.update({g: g for g in fix})
        if same(perm):
            return perm
    return None


def match_relators(mine, theirs, fix=()):
    gens_m = {a.gen for w in mine for a in w}
    gens_t = {a.gen for w in theirs for a in w}
    target = relator_set(theirs)
    return find_relabeling(gens_m, gens_t, lambda p: relator_set(mine, p) == target, fix)


def match_rules(mine, theirs, fix=()):
    """``mine``/``theirs`` are iterables of (lhs, rhs) word pairs."""
    mine, theirs = list(mine), list(theirs)
    gens_m = {a.gen for l, r in mine for a in l + r}
    gens_t = {a.gen for l, r in theirs for a in l + r}
    target = rule_set(theirs)
    return find_relabeling(gens_m, gens_t, lambda p: rule_set(mine, p) == target, fix)
