import glob
import os

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lengthlab.corpus import EXPECT_KEYS, build_group, elaborate, load_corpus, parse_corpus
from lengthlab.errors import CorpusSyntaxError

HERE = os.path.dirname(__file__)
ROOT = os.path.dirname(HERE)
CORPUS_FILES = sorted(glob.glob(os.path.join(ROOT, "corpus", "*.lab")))


def test_simple_entry():
    [e] = parse_corpus("group S5 = symmetric(5)")
    assert e.name == "S5" and str(e.construction) == "symmetric(5)"
    assert e.action is None and e.expected == {} and e.tags == []


def test_full_entry():
    text = 'group P = psl2(GF(32, "x^5+x^2+1")) with automorphism frobenius(1) expect lambda=1, components=[60, 60] tags simple field  # trailing'
    [e] = parse_corpus(text)
    assert e.construction.args[0].args == [32, "x^5+x^2+1"]
    assert e.action.name == "frobenius" and e.action.args == [1]
    assert e.expected == {"lambda": 1, "components": [60, 60]}
    assert e.tags == ["simple", "field"]


def test_wreath_golden_entry():
    [e] = parse_corpus("group W = wreath(alternating(5), cyclic(2)) expect lambda=1")
    assert e.expected == {"lambda": 1}
    G, act = elaborate(e)
    assert G.order() == 7200 and act is None


def test_comments_and_blank_lines():
    assert parse_corpus("\n# nothing\n   \n") == []


@pytest.mark.parametrize("text, line, column, fragment", [
    ("group Bad = wreath(alternating(5))", 1, 13, "wreath takes 2"),
    ("group X = sporadic(11)", 1, 11, "unknown constructor"),
    ("group X = symmetric(5", 1, 22, "expected ',' or ')'"),
    ("group X = symmetric(5) with automorphism twist()", 1, 42, "unknown automorphism"),
    ("group X = symmetric(5) expect size=120", 1, 31, "unknown expectation key"),
    ("group X = cyclic(3) with automorphism frobenius()", 1, 39, "frobenius needs a field group"),
    ("group X = cyclic(\"3\")", 1, 11, "integer"),
    ("grup X = cyclic(3)", 1, 1, "expected 'group'"),
    ("group X = cyclic(3) $", 1, 21, "unexpected character"),
    ("group A = cyclic(3)\ngroup A = cyclic(4)", 2, 1, "duplicate"),
])
def test_located_errors(text, line, column, fragment):
    with pytest.raises(CorpusSyntaxError) as info:
        parse_corpus(text, "t.lab")
    err = info.value
    assert (err.line, err.column) == (line, column)
    assert fragment in str(err)
    assert str(err).startswith(f"t.lab:{line}:{column}:")


@pytest.mark.parametrize("name, line, column", [("arity.lab", 1, 13), ("unknown.lab", 3, 13), ("syntax.lab", 2, 40)])
def test_malformed_fixtures(name, line, column):
    with pytest.raises(CorpusSyntaxError) as info:
        load_corpus(os.path.join(HERE, "fixtures", name))
    assert (info.value.line, info.value.column) == (line, column)


@pytest.mark.parametrize("path", CORPUS_FILES, ids=os.path.basename)
def test_shipped_corpus_parses(path):
    entries = load_corpus(path)
    assert entries
    for e in entries:
        assert set(e.expected) <= EXPECT_KEYS


def test_corpus_has_enough_soluble_groups():
    entries = [e for p in CORPUS_FILES for e in load_corpus(p)]
    soluble = [e for e in entries if e.expected.get("lambda") == 0]
    assert len(soluble) >= 8


@given(st.sampled_from(["cyclic", "symmetric", "alternating"]), st.integers(3, 7))
def test_constructor_round_trip(name, n):
    [e] = parse_corpus(f"group G = {name}({n})")
    assert str(e.construction) == f"{name}({n})"
    assert build_group(e.construction).degree == n


def test_perm_group_constructor():
    [e] = parse_corpus('group V = perm_group("(0 1)(2 3)", "(0 2)(1 3)")')
    assert build_group(e.construction).order() == 4


def test_expected_coprime_flag():
    [e] = parse_corpus('group C = cyclic(5) with automorphism perm("(1 4)(2 3)") expect coprime=1')
    assert e.expect_coprime is True
    G, act = elaborate(e)
    assert act.coprime and act.a_order == 2
