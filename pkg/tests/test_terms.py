import itertools
import math

import pytest
from hypothesis import given, strategies as st

from varietylab.terms import (
    Arrow,
    Identity,
    Mode,
    ParseError,
    Var,
    Word,
    ZERO,
    contains_square,
    content,
    length,
    los,
    normalize_is,
    parse_identity,
    parse_term,
    parse_word,
    render_term,
    render_word,
    substitute,
    substitute_term,
    term_letters,
)

ALPHABET = "xyzO"

words = st.text(alphabet=ALPHABET, min_size=1, max_size=8).map(Word)


def all_words(max_len, alphabet=ALPHABET):
    for k in range(1, max_len + 1):
        for combo in itertools.product(alphabet, repeat=k):
            yield Word("".join(combo))


def test_parse_word_basic():
    assert parse_word("xyz") == Word("xyz")
    assert parse_word("zOxyzOO") == Word("zOxyzOO")
    assert parse_word(" x y\tz ") == Word("xyz")


def test_parse_word_rejects():
    with pytest.raises(ParseError) as exc:
        parse_word("")
    assert exc.value.offset == 0
    with pytest.raises(ParseError) as exc:
        parse_word("xy#z")
    assert exc.value.offset == 2
    with pytest.raises(ParseError):
        parse_word("   ")


def test_word_constructor_rejects_bad_symbols():
    with pytest.raises(ValueError):
        Word("")
    with pytest.raises(ValueError):
        Word("xA")


def test_content():
    assert content(Word("xyx")) == {"x", "y"}
    assert content(Word("OO")) == frozenset()
    assert content(Word("zOxyzOO")) == {"x", "y", "z"}


def test_los():
    assert los(Word("xyx")) == Word("yx")
    assert los(Word("zOxyzOO")) == Word("xyz")
    assert los(Word("OO")) is None
    assert los(Word("x")) == Word("x")


def test_los_invariants_exhaustive():
    for w in all_words(5):
        lw = los(w)
        if lw is None:
            assert content(w) == frozenset()
        else:
            assert "O" not in lw.symbols
            assert len(set(lw.symbols)) == len(lw.symbols)
            assert content(lw) == content(w)


def test_length():
    assert length(Word("xy")) == 2
    assert length(Word("xO")) == math.inf
    assert length(Word("xyz")) == 3
    assert length(Word("O")) == math.inf
    assert math.inf >= 3  # the infinite length passes every finite threshold


def test_contains_square():
    assert contains_square(Word("xyxy"))
    assert not contains_square(Word("xyz"))
    assert contains_square(Word("axxb"))
    assert contains_square(Word("xOxO"))
    assert not contains_square(Word("xO"))
    assert not contains_square(Word("x"))


def test_substitute():
    s = {"x": Word("ab"), "y": Word("O")}
    assert substitute(Word("xyO"), s) == Word("abOO")
    assert substitute(Word("xx"), {"x": Word("O")}) == Word("OO")
    assert substitute(Word("xyz"), {}) == Word("xyz")


@given(words, words, st.dictionaries(st.sampled_from("xyz"), words, max_size=3))
def test_substitute_distributes_over_concat(u, v, s):
    assert substitute(u + v, s) == substitute(u, s) + substitute(v, s)


def test_normalize_is():
    assert normalize_is(Word("xyx")) == Word("yxO")
    assert normalize_is(Word("xy")) == Word("xy")
    assert normalize_is(Word("OO")) == Word("O")
    assert normalize_is(Word("O")) == Word("O")
    assert normalize_is(Word("xO")) == Word("xO")
    assert normalize_is(Word("xxyz")) == Word("xyzO")


def test_normalize_is_idempotent_exhaustive():
    for w in all_words(6):
        assert normalize_is(normalize_is(w)) == normalize_is(w)


@given(words)
def test_word_round_trip(w):
    assert parse_word(render_word(w)) == w


def test_parse_term_basic():
    assert parse_term("0'") == Arrow(ZERO, ZERO)
    assert parse_term("((x>y)>z)") == Arrow(Arrow(Var("x"), Var("y")), Var("z"))
    assert parse_term("x''") == Arrow(Arrow(Var("x"), ZERO), ZERO)
    assert parse_term(" ( x > 0 ) ' ") == Arrow(Arrow(Var("x"), ZERO), ZERO)


def test_parse_term_rejects():
    with pytest.raises(ParseError) as exc:
        parse_term("(x>y")
    assert exc.value.offset == 0
    with pytest.raises(ParseError):
        parse_term("")
    with pytest.raises(ParseError):
        parse_term("(x y)")
    with pytest.raises(ParseError):
        parse_term("(x>y))")
    with pytest.raises(ParseError):
        parse_term("1")


terms_strategy = st.recursive(
    st.sampled_from([ZERO, Var("x"), Var("y"), Var("z")]),
    lambda sub: st.tuples(sub, sub).map(lambda lr: Arrow(*lr)),
    max_leaves=12,
)


@given(terms_strategy)
def test_term_round_trip(t):
    assert parse_term(render_term(t)) == t


def test_render_term_uses_prime_sugar():
    assert render_term(Arrow(Var("x"), ZERO)) == "x'"
    assert render_term(Arrow(Arrow(Var("x"), Var("y")), ZERO)) == "(x>y)'"
    assert render_term(Arrow(ZERO, Arrow(ZERO, ZERO))) == "(0>0')"


def test_term_letters_and_substitution():
    t = parse_term("((x>y)>x')")
    assert term_letters(t) == {"x", "y"}
    s = substitute_term(t, {"x": ZERO})
    assert s == parse_term("((0>y)>0')")
    assert substitute_term(ZERO, {"x": Var("y")}) == ZERO


def test_parse_identity():
    ident = parse_identity("xyz = zOxyzOO")
    assert ident.lhs == Word("xyz") and ident.rhs == Word("zOxyzOO")
    assert ident.mode is Mode.IS
    iz = parse_identity("0'' = 0", Mode.IZ)
    assert iz.lhs == Arrow(Arrow(ZERO, ZERO), ZERO) and iz.rhs == ZERO


def test_parse_identity_rejects():
    with pytest.raises(ParseError):
        parse_identity("xyz")
    with pytest.raises(ParseError):
        parse_identity("x = y = z")
    with pytest.raises(ParseError) as exc:
        parse_identity("x = ?")
    assert exc.value.offset == 4
    with pytest.raises(ValueError):
        Identity(Word("x"), parse_term("0"), Mode.IS)
