from hypothesis import given, strategies as st

from coda.encoding import is_lang_atom, lang_source, word
from coda.engine import evaluate
from coda.lang import eval_lang_atom, parse, render
from coda.prelude import prelude
from coda.terms import COLON, Coda


def ev(src):
    return render(evaluate(parse(src), prelude()).result)


def test_words_and_whitespace():
    assert parse("a b") == (word("a"), word("b"))
    assert parse("  a\t b \n") == (word("a"), word("b"))
    assert parse("") == ()


def test_colon_binds_right_and_lowest():
    d = parse("a:b:c")
    assert d == (Coda((word("a"),), (Coda((word("b"),), (word("c"),)),)),)
    d = parse("a:b c")
    assert d == (Coda((word("a"),), (word("b"), word("c"))),)


def test_groups_and_literal_colon():
    assert parse("(:)") == (COLON,)
    assert parse("()") == ()
    assert parse("(a:b) c") == (Coda((word("a"),), (word("b"),)), word("c"))


def test_equality_sugar():
    assert parse("(x=y)") == (Coda((word("="), word("x")), (word("y"),)),)
    # a leading = with nothing before it is just a word
    assert parse("=") == (word("="),)


def test_lang_atoms_carry_source():
    d = parse("{first 2 : B}")
    assert len(d) == 1 and is_lang_atom(d[0])
    assert lang_source(d[0]) == "first 2 : B"
    # braces are opaque to the outer grammar
    assert parse("{a:b} c") == (parse("{a:b}")[0], word("c"))


def test_unbalanced_input_heals():
    assert parse("(a b") == parse("(a b)")
    assert parse("{a b") == parse("{a b}")
    assert parse(")x") == (word(")x"),)


def test_render_roundtrip_examples():
    for src in ("a b", "(a:b)", "{x : B}", "(:)", "((:):)"):
        assert render(parse(src)) == src or parse(render(parse(src))) == parse(src)


def test_template_substitution():
    a, b = (word("x"),), (word("y"), word("z"))
    assert eval_lang_atom("A B", a, b) == a + b
    assert eval_lang_atom("B B", (), b) == b + b
    assert eval_lang_atom("first 2 : B", (), b) == (
        Coda((word("first"), word("2")), b),
    )


def test_constant_template_for_unbound_head():
    # {a} names nothing, so it ignores its components entirely
    assert ev("{a} : (:)") == "a"
    assert ev("ap {a} : x y") == "a a"


def test_bound_head_template_applies():
    # {pass} expands to the pass transformation on the original components
    assert ev("{pass} x : y") == "y"
    assert ev("{pass} : x y") == "x y"
    assert ev("ap {pass} : x y") == "x y"


@given(st.text(max_size=60))
def test_parser_is_total(src):
    d = parse(src)
    # rendering and reparsing is stable
    assert parse(render(d)) is not None


@given(st.recursive(
    st.just(()),
    lambda inner: st.lists(st.builds(Coda, inner, inner), max_size=3).map(tuple),
    max_leaves=10,
))
def test_structural_render_roundtrip(d):
    assert parse(render(d)) == d
