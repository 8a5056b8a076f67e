"""Random words for property tests and experiments."""
from __future__ import annotations

import random

from .presentation import Letter, Word, cyclic_rotations, inverse, phi
from .system import RewritingSystem


def alphabet(S: RewritingSystem) -> list[Letter]:
    gens = sorted(g for g in S.roles if g != S.killed)
    return [Letter(g, e) for g in gens for e in (1, -1)]


def random_word(letters, rng: random.Random, max_len: int = 20, min_len: int = 0) -> Word:
    n = rng.randint(min_len, max_len)
    return tuple(rng.choice(letters) for _ in range(n))


def relator_images(relators, killed) -> list[Word]:
    """Every cyclic rotation of every relator and its inverse, with the killed generator deleted."""
    out = []
    for r in relators:
        for w in (r.word, inverse(r.word)):
            for rot in cyclic_rotations(w):
                out.append(phi(rot, killed) if killed is not None else tuple(rot))
    return out


def conjugate_product(relators, letters, rng: random.Random, max_len: int = 30, killed=0) -> Word:
    """A product of conjugates u r u' of relator images, at most ``max_len`` letters before free reduction."""
    images = relator_images(relators, killed)
    out: list = []
    while True:
        r = rng.choice(images)
        u = random_word(letters, rng, max_len=3)
        piece = u + r + inverse(u)
        if out and len(out) + len(piece) > max_len:
            break
        if len(piece) > max_len:
            continue
        out.extend(piece)
        if rng.random() < 0.3:
            break
    return tuple(out)

