import pytest
from hypothesis import given, strategies as st

from dehnrewrite.knots import builtin
from dehnrewrite.pipeline import build
from dehnrewrite.presentation import (
    Letter, PresentationError, Relator, cyclic_rotations, dehn_presentation, free_reduce, inverse,
    parse_word, phi, phi_set, render, symmetrize, x, xbar,
)

letters = st.builds(Letter, st.integers(0, 6), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=12).map(tuple)
relators = st.permutations(range(7)).map(lambda p: Relator.from_indices(*p[:4]))


def W(text):
    return parse_word(text)


def test_counts():
    for name, gens, rels in (("figure8", 6, 4), ("trefoil", 5, 3)):
        p = build(builtin(name)).presentation
        assert len(p.generators) == gens and len(p.relators) == rels and p.killed == 0
        assert p.augment().killed is None and p.augment().relators == p.relators


def test_trefoil_every_relator_meets_region_0():
    p = build(builtin("trefoil")).presentation
    assert all(0 in r.indices for r in p.relators)


def test_relator_shape_enforced():
    with pytest.raises(PresentationError):
        Relator(W("x1 x2 x3 x4'"))
    with pytest.raises(PresentationError):
        Relator(W("x1 x2' x1 x4'"))


def test_symmetrize_example():
    pairs = symmetrize(Relator(W("x1 x0' x2 x4'")))
    got = [(render(p.lhs), render(p.rhs)) for p in pairs]
    assert got == [
        ("x1 x0'", "x4 x2'"),
        ("x0' x2", "x1' x4"),
        ("x2 x4'", "x0 x1'"),
        ("x4' x1", "x2' x0"),
    ]


def test_symmetrize_fourth_figure8_relator():
    pairs = symmetrize(Relator(W("x2 x5' x1 x4'")))
    assert (W("x2 x5'"), W("x4 x1'")) in [(p.lhs, p.rhs) for p in pairs]


@given(relators)
def test_symmetrize_shape_and_rotation_invariance(r):
    pairs = symmetrize(r)
    assert all(len(p.lhs) == len(p.rhs) == 2 for p in pairs)
    assert len({(p.lhs, p.rhs) for p in pairs}) == 4
    rot = Relator(r.word[2:] + r.word[:2])
    as_set = lambda ps: {frozenset((p.lhs, p.rhs)) for p in ps}
    assert as_set(symmetrize(rot)) == as_set(pairs)


@given(relators)
def test_symmetrized_pairs_are_relator_consequences(r):
    # a = b means a b' is a cyclic rotation of the relator or of its inverse
    cyc = set(cyclic_rotations(r.word)) | set(cyclic_rotations(inverse(r.word)))
    for p in symmetrize(r):
        assert p.lhs + inverse(p.rhs) in cyc


def test_phi_examples():
    assert phi(W("x1 x0' x2 x4'")) == W("x1 x2 x4'")
    assert phi(W("x3 x2'")) == W("x3 x2'")
    assert phi(W("x0 x0'")) == ()


@given(words, words)
def test_phi_is_idempotent_endomorphism(u, v):
    assert phi(phi(u)) == phi(u)
    assert phi(u + v) == phi(u) + phi(v)


def test_phi_set_example():
    got = [(render(p.lhs), render(p.rhs)) for p in phi_set(Relator(W("x0 x1' x4 x2'")))]
    assert got == [("x2", "x1' x4"), ("x1", "x4 x2'"), ("x2' x1'", "x4'")]


def test_phi_set_needs_exactly_one_x0():
    with pytest.raises(PresentationError):
        phi_set(Relator(W("x1 x2' x3 x4'")))


@given(relators.filter(lambda r: 0 in r.indices))
def test_phi_set_independent_of_spelling(r):
    sets = {frozenset((p.lhs, p.rhs) for p in phi_set(f)) for f in r.forms()}
    assert len(sets) == 1


def _substitute(w, pos, rel):
    assert w[pos:pos + len(rel.lhs)] == rel.lhs
    return w[:pos] + rel.rhs + w[pos + len(rel.lhs):]


@given(st.permutations(range(1, 7)))
def test_dropped_relations_rederived(p):
    j, k, l = p[:3]
    one, two, three = phi_set(Relator.from_indices(0, j, k, l))
    # (d) x_k' x_j = x_l'
    assert free_reduce(_substitute((xbar(k), x(j)), 1, two)) == (xbar(l),)
    # (e) x_l x_k' = x_j'
    assert free_reduce(_substitute((x(l), xbar(k)), 0, one)) == (xbar(j),)
    # (f) x_j x_l = x_k, through (2), (1), (3) and free reduction
    w = _substitute((x(j), x(l)), 0, two)
    w = _substitute(w, 2, one)
    w = _substitute(w, 1, three)
    assert free_reduce(w) == (x(k),)
    # (3) back from (d): x_l' x_j' = (x_k' x_j) x_j'
    assert free_reduce((xbar(k), x(j)) + (xbar(j),)) == three.rhs


@given(words)
def test_render_parse_round_trip(w):
    assert parse_word(render(w)) == w


def test_parse_checks_roles():
    roles = {0: "source", 1: "sink"}
    assert parse_word("s0 t1'", roles) == (x(0), xbar(1))
    with pytest.raises(PresentationError):
        parse_word("t0", roles)
    with pytest.raises(PresentationError):
        parse_word("y3", roles)


@given(words)
def test_free_reduce(w):
    r = free_reduce(w)
    assert all(a != b.inv() for a, b in zip(r, r[1:]))
    assert free_reduce(w + inverse(w)) == ()


def test_dehn_presentation_generators_are_regions():
    d = builtin("6_1")
    p = dehn_presentation(d)
    assert p.generators == tuple(range(len(d.crossings) + 2))
    assert {r.crossing for r in p.relators} == set(range(len(d.crossings)))
