"""Rule and rewriting-system value types shared by the builders and the engine."""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .presentation import Letter, Word, render

KIND_ORDER = ["0", "1", "2", "2'", "3", "4", "5", "alpha", "alpha'", "beta", "beta'", "gamma", "delta"]
KINDS = frozenset(KIND_ORDER)
CLASSES = ("A", "B", "C", "D", "free-reduction")


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word
    kind: str
    cls: str | None = None
    crossing: int | None = None  # relator of origin, when there is one

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown rule kind {self.kind!r}")

    def with_(self, **kw) -> "Rule":
        return replace(self, **kw)

    def text(self, roles=None) -> str:
        return f"{render(self.lhs, roles)} -> {render(self.rhs, roles)}"

    def as_dict(self, roles=None) -> dict:
        return {"lhs": render(self.lhs, roles), "rhs": render(self.rhs, roles), "kind": self.kind, "class": self.cls}


@dataclass(frozen=True)
class RewritingSystem:
    rules: tuple[Rule, ...]
    roles: dict[int, str]  # generator -> "source" | "sink"
    t_plus: frozenset[int]  # sink generators whose region borders region 0
    stage: str  # "R", "R'" or "R''"
    killed: int | None = 0
    audited: bool = field(default=False, compare=False)
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for r in self.rules:
            index.setdefault(r.lhs, r)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "lhs_lengths", tuple(sorted({len(r.lhs) for r in self.rules}, reverse=True)))

    def rule_for(self, lhs: Word) -> Rule | None:
        return self._index.get(lhs)

    @property
    def group_rules(self) -> list[Rule]:
        return [r for r in self.rules if r.kind != "0"]

    def is_source(self, a: Letter) -> bool:
        return self.roles[a.gen] == "source"

    def with_rules(self, rules, stage=None) -> "RewritingSystem":
        return RewritingSystem(tuple(rules), self.roles, self.t_plus, stage or self.stage, self.killed)

    def mark_audited(self) -> "RewritingSystem":
        return RewritingSystem(self.rules, self.roles, self.t_plus, self.stage, self.killed, audited=True)

    def sorted_rules(self) -> list[Rule]:
        """Stable golden-file order: by kind, then by rendered lhs."""
        return sorted(self.rules, key=lambda r: (KIND_ORDER.index(r.kind), render(r.lhs), render(r.rhs)))

    def to_text(self, names: str = "st") -> str:
        roles = self.roles if names == "st" else None
        lines = [f"# stage {self.stage}: {len(self.group_rules)} group rules, {len(self.rules)} total"]
        for r in self.sorted_rules():
            tag = f"({r.kind})" + (f" [{r.cls}]" if r.cls else "")
            lines.append(f"{r.text(roles):<36} {tag}")
        return "\n".join(lines)

    def to_json(self, names: str = "st") -> str:
        roles = self.roles if names == "st" else None
        return json.dumps(
            {
                "stage": self.stage,
                "sources": sorted(g for g, v in self.roles.items() if v == "source"),
                "sinks": sorted(g for g, v in self.roles.items() if v == "sink"),
                "t_plus": sorted(self.t_plus),
                "rules": [r.as_dict(roles) for r in self.sorted_rules()],
            },
            indent=1,
        )


def free_reduction_rules(gens, roles) -> list[Rule]:
    out = []
    for g in sorted(gens):
        a = Letter(g, 1)
        out.append(Rule((a, a.inv()), (), "0", "free-reduction"))
        out.append(Rule((a.inv(), a), (), "0", "free-reduction"))
    return out
