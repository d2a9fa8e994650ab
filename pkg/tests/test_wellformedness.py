import pytest
from hypothesis import given, settings

from jprosody.annotate import emit_proposed, parse_proposed
from jprosody.fixtures import load_fixture
from jprosody.lexicon import PWordLex
from jprosody.spmh import PClause, PPhrase, PWord, edges_by_word, minimal_phrases, project, with_deps, words
from jprosody.wellformedness import (
    ConstraintConfig,
    apply_all,
    enforce_culminativity_and_antilapse,
    phrase_status,
    rephrase_boost,
    satisfied,
)

from strategies import prosodic_trees


def word(accented, dep=None, name="ka"):
    return PWord(PWordLex.from_dotted(name, "ka.ki", 1 if accented else 0), dep)


def shape(ptree):
    """Bracket skeleton with A/U per word, e.g. '{[A][U]}'."""
    def ph(p):
        return "[" + "".join(ph(c) if isinstance(c, PPhrase) else ("A" if c.accented else "U") for c in p.children) + "]"
    return "{" + "".join(ph(p) for p in ptree.children) + "}"


def single(*accents):
    return PClause((PPhrase(tuple(word(a) for a in accents)),))


@pytest.mark.parametrize("accents, expected", [
    ((True, True), "{[A][A]}"),
    ((True, False), "{[A][U]}"),
    ((False, False), "{[UU]}"),
    ((False, True), "{[UA]}"),
    ((False, True, True, False, False), "{[UA][A][UU]}"),
])
def test_splitting(accents, expected):
    assert shape(enforce_culminativity_and_antilapse(single(*accents))) == expected


def test_split_inside_recursive_phrase():
    p = PClause((PPhrase((PPhrase((word(True), word(True))), PPhrase((word(False),)))),))
    assert shape(enforce_culminativity_and_antilapse(p)) == "{[[A][A][U]]}"


def test_mixed_phrase_words_are_wrapped():
    p = PClause((PPhrase((PPhrase((word(False),)), word(True), word(False))),))
    assert shape(enforce_culminativity_and_antilapse(p)) == "{[[U][A][U]]}"


def chain(n, accented=True):
    ws = [word(accented, 1) for _ in range(n - 1)] + [word(accented, 2)]
    return PClause((PPhrase(tuple(PPhrase((w,)) for w in ws)),))


def test_boost_four():
    assert shape(rephrase_boost(chain(4))) == "{[[[A][A]][[A][A]]]}"


@pytest.mark.parametrize("n", [2, 3])
def test_short_runs_untouched(n):
    assert rephrase_boost(chain(n)) == chain(n)


def test_odd_run_leaves_trailing_singleton():
    assert shape(rephrase_boost(chain(5))) == "{[[[A][A]][[A][A]][A]]}"


def test_unaccented_run_untouched():
    assert rephrase_boost(chain(4, accented=False)) == chain(4, accented=False)


def test_non_chain_not_boosted():
    ws = [word(True, 1), word(True, 3), word(True, 1), word(True, 1)]
    p = PClause((PPhrase(tuple(PPhrase((w,)) for w in ws)),))
    assert rephrase_boost(p) == p


def test_unknown_dependencies_not_boosted():
    p = parse_proposed("{[[\\ka][\\ka][\\ka][\\ka]].}")
    assert rephrase_boost(p) == p
    boosted = rephrase_boost(with_deps(p, [1, 1, 1, None]))
    assert shape(boosted) == "{[[[A][A]][[A][A]]]}"


def test_min_run_config():
    assert rephrase_boost(chain(3), ConstraintConfig(boost_min_run=3)) != chain(3)
    with pytest.raises(ValueError):
        ConstraintConfig(boost_min_run=1)


def test_boost_item_rephrased():
    tree, exp = load_fixture("boost4N")
    out = apply_all(project(tree))
    assert shape(out) == "{[U][[[A][A]][[A][A]][[U][U]]]}"
    assert edges_by_word(out)[1:] == exp["left_edges"]


def test_boost_item_flat_without_boost():
    tree, exp = load_fixture("boost4N")
    out = apply_all(project(tree), ConstraintConfig(enable_boost_rephrasing=False))
    assert shape(out) == "{[U][[A][A][A][A][[U][U]]]}"
    assert edges_by_word(out)[1:] == exp["left_edges_no_boost"]


def test_tree1_unchanged():
    tree, _ = load_fixture("tree1")
    p = project(tree)
    assert apply_all(p) == p


def test_all_unaccented_unchanged():
    p = PClause((PPhrase((word(False), word(False))), PPhrase((word(False),))))
    assert apply_all(p) == p


def test_status_report():
    st = phrase_status(single(True, True))
    assert [(s.pattern, s.culminative, s.right_edge) for s in st] == [("AA", False, False)]
    assert not satisfied(single(True, False)) and satisfied(single(False, True))


@settings(max_examples=300)
@given(prosodic_trees())
def test_laws(p):
    out = apply_all(p)
    for m, _ in minimal_phrases(out):
        ws = list(m.children)
        assert sum(w.accented for w in ws) <= 1
        assert all(not w.accented for w in ws[:-1])
    assert words(out) == words(p)
    assert apply_all(out) == out
    assert all(b >= a for a, b in zip(edges_by_word(p), edges_by_word(out)))
    s = emit_proposed(out).text
    assert s.count("[") == s.count("]")
