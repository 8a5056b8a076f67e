"""Tables transcribed from the worked examples (figure-eight and trefoil).

Sources are written s<i>, sinks t<i>, inverses with a trailing apostrophe.
Two OCR artefacts in the source text were corrected by hand.
"""
from dehnrewrite.presentation import parse_word

FIG8_AUGMENTED_RELATORS = ["t1 s0' t2 s4'", "t2 s0' t3 s5'", "t1 s5' t3 s0'", "t2 s5' t1 s4'"]


def _zero_rules(sources, sinks):
    out = []
    for p, ids in (("s", sources), ("t", sinks)):
        for i in ids:
            out.append((f"{p}{i} {p}{i}'", "1"))
            out.append((f"{p}{i}' {p}{i}", "1"))
    return out


FIG8_R = [
    ("s0 t1'", "t2 s4'"), ("s0 t2'", "t3 s5'"), ("s0 t3'", "t1 s5'"), ("s4 t1'", "t2 s5'"),
    ("s0' t2", "t1' s4"), ("s0' t3", "t2' s5"), ("s0' t1", "t3' s5"), ("s4' t2", "t1' s5"),
    ("s4 t2'", "t1 s0'"), ("s5 t3'", "t2 s0'"), ("s5 t1'", "t3 s0'"), ("s5 t2'", "t1 s4'"),
    ("s4' t1", "t2' s0"), ("s5' t2", "t3' s0"), ("s5' t3", "t1' s0"), ("s5' t1", "t2' s4"),
] + _zero_rules((0, 4, 5), (1, 2, 3))

FIG8_R_PRIME = [
    ("t2", "t1' s4"), ("t3", "t2' s5"), ("t1", "t3' s5"), ("s4 t1'", "t2 s5'"),
    ("s4 t2'", "t1"), ("s5 t3'", "t2"), ("s5 t1'", "t3"), ("s4' t2", "t1' s5"),
    ("t2' t1'", "s4'"), ("t3' t2'", "s5'"), ("t1' t3'", "s5'"), ("s5 t2'", "t1 s4'"),
    ("s5' t1", "t2' s4"),
] + _zero_rules((0, 4, 5), (1, 2, 3))

FIG8_R_DOUBLE_PRIME = [
    ("t2", "t1' s4"), ("t3", "t2' s5"), ("t1", "t3' s5"), ("s4 t1'", "t1' s4 s5'"),
    ("s4 t2'", "t3' s5"), ("s5 t3'", "t1' s4"), ("s5 t1'", "t2' s5"), ("s4' t1'", "t1' s5 s4'"),
    ("t2' t1'", "s4'"), ("t3' t2'", "s5'"), ("t1' t3'", "s5'"), ("s5 t2'", "t3' s5 s4'"),
    ("s4' t3'", "t2' s5'"), ("s5' t2'", "t1' s5'"), ("s5' t1'", "t3' s4'"), ("s5' t3'", "t2' s4 s5'"),
] + _zero_rules((0, 4, 5), (1, 2, 3))

TREFOIL_R_DOUBLE_PRIME = [
    ("x1", "x4' x3"), ("x3 x1'", "x2' x3"), ("x1' x4'", "x3'"),
    ("x2", "x1' x3"), ("x3 x2'", "x4' x3"), ("x2' x1'", "x3'"),
    ("x4", "x2' x3"), ("x3 x4'", "x1' x3"), ("x4' x2'", "x3'"),
    ("x3' x2'", "x1' x3'"), ("x3' x1'", "x4' x3'"), ("x3' x4'", "x2' x3'"),
] + [(f"x{i} x{i}'", "1") for i in range(5)] + [(f"x{i}' x{i}", "1") for i in range(5)]


def words(table):
    return [(parse_word(l), parse_word(r)) for l, r in table]
