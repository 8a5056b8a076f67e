import random

import pytest
from hypothesis import given, settings, strategies as st

from dehnrewrite.engine import (
    FuseBlown, IncompleteSystem, MonitorViolation, OrderVector, decompose, descendants,
    enumerate_ambiguities, normal_form, order_vector, redexes, rewrite_step, step_deltas, v3_of, word_equal,
)
from dehnrewrite.presentation import Letter, inverse, parse_word
from dehnrewrite.system import Rule

from conftest import construction, fig8_word


def V(c, w):
    S = c.R_double_prime
    return order_vector(w, S.roles, S.t_plus)


def test_decompose_examples(fig8):
    roles = fig8.roles.role
    d = decompose(fig8_word("s4' t3'"), roles)
    assert d.n == [1, 0] and d.k == 1 and d.sinks == fig8_word("t3'")
    d = decompose(fig8_word("t2' s4 s5'"), roles)
    assert d.n == [0, 2] and d.k == 1
    d = decompose((), roles)
    assert d.k == 0 and d.blocks == ((),)


def test_decompose_unknown_letter(fig8):
    with pytest.raises(ValueError):
        decompose((Letter(99, 1),), fig8.roles.role)


@pytest.mark.parametrize("word,vec", [
    ("t2", (1, 1, 0, 1)),
    ("t1' s4", (1, 0, 0, 2)),
    ("s4' t3'", (1, 0, 1, 2)),
    ("t2' s5'", (1, 0, 0, 2)),
    ("t2' s4 s5'", (1, 0, 0, 3)),
])
def test_order_vector_values(fig8, word, vec):
    assert tuple(V(fig8, fig8_word(word))) == vec


def test_order_is_lexicographic(fig8):
    assert V(fig8, fig8_word("t2")) > V(fig8, fig8_word("t1' s4"))
    assert OrderVector(1, 1, 0, 1) > OrderVector(1, 0, 0, 2)


def test_v3_formula():
    # n = (n1, n2, n3) with k = 2: n1 (2^2 - 1) + n2 (2 - 1), n3 ignored
    assert v3_of([2, 5, 9], 2) == 2 * 3 + 5
    assert v3_of([4], 0) == 0


def test_rewrite_step_examples(fig8):
    S = fig8.R_double_prime
    new, rule, pos = rewrite_step(fig8_word("t2' t1'"), S)
    assert new == fig8_word("s4'") and pos == 0 and rule.kind == "3"
    assert rewrite_step(fig8_word("s4 s5"), S) is None
    new, rule, _ = rewrite_step(fig8_word("t2 t2'"), S)
    assert new == () and rule.kind == "0"


def test_normal_form_kind1_lhs_times_inverse_rhs(fig8):
    S = fig8.R_double_prime
    assert normal_form(fig8_word("t2") + inverse(fig8_word("t1' s4")), S) == ()


def test_figure8_R_prime_witness(fig8):
    Rp = fig8.R_prime
    w = fig8_word("t3' t2' t1'")
    forms = {normal_form(w, Rp, strategy=s) for s in ("leftmost", "rightmost")}
    assert forms == {fig8_word("s5' t1'"), fig8_word("t3' s4'")}


def test_trefoil_unique_sink(trefoil):
    S = trefoil.R_double_prime
    w = parse_word("x3' x2' x1'")
    sinks = {u for u in descendants(w, S) if not redexes(u, S)}
    assert sinks == {normal_form(w, S)}
    for s in ("rightmost", "random"):
        assert normal_form(w, S, strategy=s, rng=random.Random(1)) == normal_form(w, S)


def test_word_equal(fig8):
    S = fig8.R_double_prime
    w = fig8_word("s4 t1' s5")
    assert word_equal(w, w, S)
    assert word_equal(fig8_word("t2"), fig8_word("t1' s4"), S)
    assert not word_equal(fig8_word("s4"), fig8_word("s5"), S)


def test_word_equal_needs_audit(fig8):
    with pytest.raises(IncompleteSystem):
        word_equal((), (), fig8.R_prime)


def test_monitor_catches_bad_rule(fig8):
    S = fig8.R_double_prime
    a, b = fig8_word("s4"), fig8_word("t2")
    bad = S.with_rules([Rule(a, b, "4")])
    with pytest.raises(MonitorViolation):
        normal_form(a, bad, monitor=True)


def test_fuse(fig8):
    S = fig8.R_double_prime
    a, b = fig8_word("s4"), fig8_word("s5")
    loop = S.with_rules([Rule(a, b, "4"), Rule(b, a, "4")], stage="R'")
    with pytest.raises(FuseBlown):
        normal_form(a, loop, fuse=50)


def test_overlap_2prime_3(fig8):
    amb = enumerate_ambiguities(fig8.R_double_prime)
    target = fig8_word("s4 t2' t1'")
    assert any(a.variant == "overlap" and a.word == target and {a.rule1.kind, a.rule2.kind} == {"2'", "3"} for a in amb)


def test_no_overlaps_among_s_to_t_rules():
    quiet = {"2'", "4", "5", "alpha'", "beta", "beta'", "delta"}
    for name in ("figure8", "trefoil"):
        for a in enumerate_ambiguities(construction(name).R_double_prime):
            assert not (a.rule1.kind in quiet and a.rule2.kind in quiet)


def test_inclusions_only_between_1_and_0():
    for name in ("figure8", "trefoil"):
        kinds = {(a.rule1.kind, a.rule2.kind) for a in enumerate_ambiguities(construction(name, True).R_double_prime)
                 if a.variant == "inclusion"}
        assert kinds == {("1", "0")}


def test_trefoil_3_3_overlaps(trefoil):
    amb = [a for a in enumerate_ambiguities(trefoil.R_double_prime) if a.rule1.kind == a.rule2.kind == "3"]
    assert len(amb) == 3


def test_audits(fig8, trefoil):
    assert fig8.audit("Rpp").ok and trefoil.audit("Rpp").ok
    rep = fig8.audit("Rp")
    assert not rep.ok
    bad = {r.ambiguity.word: {r.nf1, r.nf2} for r in rep.unresolved}
    assert bad[fig8_word("t3' t2' t1'")] == {fig8_word("s5' t1'"), fig8_word("t3' s4'")}


def test_audit_json_keys(trefoil):
    import json
    data = json.loads(trefoil.audit("Rpp").to_json())
    assert data["ok"] and data["unresolved"] == 0
    assert set(data["records"][0]) >= {"ruleA", "ruleB", "overlapWord", "branch1NF", "branch2NF", "resolved"}


def _words(c):
    S = c.R_double_prime
    letters = [Letter(g, e) for g in sorted(S.roles) if g != 0 for e in (1, -1)]
    return st.lists(st.sampled_from(letters), max_size=20).map(tuple)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_normal_form_properties(data):
    c = construction(data.draw(st.sampled_from(["figure8", "trefoil"])))
    S = c.R_double_prime
    w = data.draw(_words(c))
    nf = normal_form(w, S)
    assert rewrite_step(nf, S) is None
    assert normal_form(nf, S) == nf
    assert decompose(w, S.roles).word() == w


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_every_step_matches_class_deltas(data):
    c = construction(data.draw(st.sampled_from(["figure8", "trefoil"])))
    S = c.R_double_prime
    w = data.draw(_words(c))
    trace = []
    normal_form(w, S, strategy="random", rng=random.Random(data.draw(st.integers(0, 99))), trace=trace)
    for u, pos, rule in trace:
        assert step_deltas(u, pos, rule, S)["ok"]
