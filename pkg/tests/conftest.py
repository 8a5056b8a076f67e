from functools import lru_cache

import pytest

from dehnrewrite.knots import builtin
from dehnrewrite.matching import match_relators
from dehnrewrite.pipeline import BuildConfig, build
from dehnrewrite.presentation import Letter, parse_word

from reference_tables import FIG8_AUGMENTED_RELATORS


@lru_cache(maxsize=None)
def construction(name, keep_x0=False):
    return build(builtin(name), BuildConfig(keep_x0=keep_x0))


@lru_cache(maxsize=None)
def fig8_relabeling():
    """Reference generator -> our generator, found by canonical-form search on the relators."""
    c = construction("figure8")
    mine = [r.word for r in c.presentation.relators]
    perm = match_relators(mine, [parse_word(w) for w in FIG8_AUGMENTED_RELATORS], fix=(0,))
    assert perm is not None
    return {theirs: ours for ours, theirs in perm.items()}


def fig8_word(text):
    """A word written in the reference figure-eight labels, translated to ours."""
    back = fig8_relabeling()
    return tuple(Letter(back[a.gen], a.exp) for a in parse_word(text))


@pytest.fixture(scope="session")
def fig8():
    return construction("figure8")


@pytest.fixture(scope="session")
def trefoil():
    return construction("trefoil")
