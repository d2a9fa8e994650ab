import pytest
from hypothesis import given, settings

from jprosody.annotate import emit_proposed
from jprosody.fixtures import load_fixture
from jprosody.lexicon import PWordLex
from jprosody.spmh import (
    PClause,
    PPhrase,
    PWord,
    edges_by_word,
    left_edge_counts,
    minimal_phrases,
    project,
    words,
)
from jprosody.tree import Node, SyntacticTree, parse_tree, yield_pwords

from strategies import syntactic_trees


def counts(ptree):
    return [j.left_edge_count for j in left_edge_counts(ptree)]


def test_tree1_projection():
    tree, _ = load_fixture("tree1")
    p = project(tree)
    assert counts(p) == [1, 2, 1]
    assert emit_proposed(p).text == (
        "{[[wa ga shi ya sa N no][ma me u ri ya ku ga]][[me mo ga ki o][mo ra i ma \\shi ta]].}")


def test_tree2_projection():
    tree, _ = load_fixture("tree2")
    p = project(tree)
    assert counts(p) == [2, 1, 1]
    # the one-word subject PP and the word's own minimal phrase are both kept
    assert emit_proposed(p).text.startswith("{[[wa ga shi ya sa N ga]][[ma")


def test_single_word():
    p = project(parse_tree("(IP (V ta|ta|0))"))
    assert emit_proposed(p).text == "{[ta].}"
    assert left_edge_counts(p) == []


def test_flat_two_phrases():
    a, b = (PWord(PWordLex.from_dotted(x, x)) for x in ("a", "i"))
    p = PClause((PPhrase((a,)), PPhrase((b,))))
    assert counts(p) == [1]


def test_cp_over_ip_is_one_clause():
    p = project(parse_tree("(CP (IP (PP (NP (N neko|ne.ko|0))) (VP (V naita|na.i.ta|0))))"))
    assert isinstance(p, PClause)
    # PP over NP maps; VP without an NP does not
    assert emit_proposed(p).text == "{[[ne ko]][na i ta].}"


def test_same_span_phrases_collapse():
    one = project(parse_tree("(IP (VP (NP (N a|a|0)) (V ta|ta|0)))"))
    two = project(parse_tree("(IP (VP (VP (NP (N a|a|0)) (V ta|ta|0))))"))
    assert one == two


def test_adverb_gets_own_phrase():
    tree, _ = load_fixture("boost4N")
    p = project(tree)
    assert p.children[0] == PPhrase((PWord(yield_pwords(tree)[0]),))


def test_projection_carries_distances():
    tree, exp = load_fixture("boost4N")
    assert [w.dep for w in words(project(tree))] == exp["dependency_distances"]


def test_edges_by_word_includes_start():
    tree, _ = load_fixture("boost4N")
    assert edges_by_word(project(tree)) == [1, 2, 1, 1, 1, 2, 1]


@settings(max_examples=200)
@given(syntactic_trees())
def test_yield_preserved(t):
    p = project(t)
    assert [w.lex for w in words(p)] == yield_pwords(t)


@settings(max_examples=200)
@given(syntactic_trees())
def test_every_word_in_a_minimal_phrase(t):
    p = project(t)
    mins = minimal_phrases(p)
    assert sum(len(m.children) for m, _ in mins) == len(yield_pwords(t))
    assert all(len(m.children) == 1 for m, _ in mins)


@settings(max_examples=200)
@given(syntactic_trees())
def test_brackets_balanced(t):
    s = emit_proposed(project(t)).text
    depth = 0
    for ch in s:
        depth += {"[": 1, "]": -1}.get(ch, 0)
        assert depth >= 0
    assert depth == 0 and s.count("{") == s.count("}") == 1


@settings(max_examples=200)
@given(syntactic_trees())
def test_extra_pp_layer_never_removes_edges(t):
    base = edges_by_word(project(t))
    wrapped = []
    for c in t.root.children:
        if isinstance(c, Node):
            wrapped.append(Node(c.category, (Node(c.category.__class__("PP"), (Node(c.category.__class__("NP"), c.children),)),)))
        else:
            wrapped.append(c)
    bigger = edges_by_word(project(SyntacticTree(Node(t.root.category, tuple(wrapped)))))
    assert all(b >= a for a, b in zip(base, bigger))
