"""Words over region generators, Dehn relators and their symmetrization."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .diagram import Diagram, corner_incidence, faces


class PresentationError(ValueError):
    pass


class Letter(NamedTuple):
    gen: int
    exp: int  # +1 or -1

    def inv(self) -> "Letter":
        return Letter(self.gen, -self.exp)


Word = tuple  # tuple[Letter, ...]


def x(gen: int) -> Letter:
    return Letter(gen, 1)


def xbar(gen: int) -> Letter:
    return Letter(gen, -1)


def inverse(w: Sequence[Letter]) -> Word:
    return tuple(a.inv() for a in reversed(w))


def free_reduce(w: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for a in w:
        if out and out[-1].gen == a.gen and out[-1].exp == -a.exp:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def cyclic_rotations(w: Sequence[Letter]) -> list[Word]:
    w = tuple(w)
    return [w[i:] + w[:i] for i in range(len(w))] or [()]


# -- text rendering ---------------------------------------------------------

def letter_name(a: Letter, roles: dict[int, str] | None = None) -> str:
    prefix = "x" if roles is None else ("s" if roles[a.gen] == "source" else "t")
    return f"{prefix}{a.gen}" + ("'" if a.exp < 0 else "")


def render(w: Sequence[Letter], roles: dict[int, str] | None = None) -> str:
    if not w:
        return "1"
    return " ".join(letter_name(a, roles) for a in w)


_TOKEN = re.compile(r"([xst])(\d+)('?)")


def parse_word(text: str, roles: dict[int, str] | None = None) -> Word:
    """Inverse of :func:`render`; ``1`` or an empty string is the empty word.

    ``s``/``t`` prefixes are checked against ``roles`` when given.
    """
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.replace(",", " ").split():
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise PresentationError(f"bad letter {tok!r}; expected e.g. x3, x3', s4, t1'")
        kind, gen, bar = m.group(1), int(m.group(2)), m.group(3)
        if kind != "x" and roles is not None:
            expected = "s" if roles.get(gen) == "source" else "t"
            if gen not in roles or kind != expected:
                raise PresentationError(f"{tok}: generator {gen} is not a {'source' if kind == 's' else 'sink'}")
        out.append(Letter(gen, -1 if bar else 1))
    return tuple(out)


# -- relators and presentations ---------------------------------------------

@dataclass(frozen=True)
class Relator:
    word: Word
    crossing: int | None = None

    def __post_init__(self):
        w = self.word
        if len(w) != 4 or [a.exp for a in w] != [1, -1, 1, -1]:
            raise PresentationError(f"relator {render(w)} is not of the form x_i x_j' x_k x_l'")
        if len({a.gen for a in w}) != 4:
            raise PresentationError(f"relator {render(w)} repeats a generator")

    @property
    def indices(self) -> tuple[int, int, int, int]:
        return tuple(a.gen for a in self.word)

    @classmethod
    def from_indices(cls, i, j, k, l, crossing=None) -> "Relator":
        return cls((x(i), xbar(j), x(k), xbar(l)), crossing)

    def forms(self) -> list["Relator"]:
        """The four spellings of shape (+,-,+,-): even rotations of the word and of its inverse."""
        out = []
        for w in (self.word, inverse(self.word)):
            for r in (w, w[2:] + w[:2]):
                out.append(Relator(r, self.crossing))
        return out

    def starting_with(self, gen: int) -> "Relator":
        for f in self.forms():
            if f.word[0].gen == gen:
                return f
        raise PresentationError(f"relator {render(self.word)} does not contain x{gen}")

    def __str__(self):
        return render(self.word)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[int, ...]
    relators: tuple[Relator, ...]
    killed: int | None = 0

    @property
    def augmented(self) -> bool:
        return self.killed is None

    def augment(self) -> "Presentation":
        return Presentation(self.generators, self.relators, None)


def dehn_presentation(d: Diagram, incidence: dict | None = None) -> Presentation:
    regions = faces(d)
    if incidence is None:
        incidence = corner_incidence(d, regions)
    relators = tuple(Relator.from_indices(*incidence[c], crossing=c) for c in sorted(incidence))
    return Presentation(tuple(r.id for r in regions), relators, killed=0)


@dataclass(frozen=True)
class RelationPair:
    lhs: Word
    rhs: Word

    def __str__(self):
        return f"{render(self.lhs)} = {render(self.rhs)}"

    def flipped(self) -> "RelationPair":
        return RelationPair(self.rhs, self.lhs)


def symmetrize(r: Relator) -> list[RelationPair]:
    """The four length-2 = length-2 equations generated by x_i x_j' x_k x_l'."""
    i, j, k, l = r.indices
    return [
        RelationPair((x(i), xbar(j)), (x(l), xbar(k))),
        RelationPair((xbar(j), x(k)), (xbar(i), x(l))),
        RelationPair((x(k), xbar(l)), (x(j), xbar(i))),
        RelationPair((xbar(l), x(i)), (xbar(k), x(j))),
    ]


def phi(w: Sequence[Letter], killed: int = 0) -> Word:
    """Delete every occurrence of the killed generator."""
    return tuple(a for a in w if a.gen != killed)


def phi_set(r: Relator, killed: int = 0) -> list[RelationPair]:
    """Relations (1) x_l = x_j' x_k, (2) x_j = x_k x_l', (3) x_l' x_j' = x_k' for a relator through x0."""
    count = sum(a.gen == killed for a in r.word)
    if count == 0:
        raise PresentationError(f"relator {r} does not contain x{killed}")
    if count > 1:
        raise PresentationError(f"relator {r} contains x{killed} more than once")
    _, j, k, l = r.starting_with(killed).indices
    return [
        RelationPair((x(l),), (xbar(j), x(k))),
        RelationPair((x(j),), (x(k), xbar(l))),
        RelationPair((xbar(l), xbar(j)), (xbar(k),)),
    ]
