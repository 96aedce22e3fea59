from coda.encoding import word
from coda.engine import (
    Budget,
    TriBool,
    add_definition,
    classify_atom,
    equal,
    evaluate,
    step,
)
from coda.lang import parse, render
from coda.prelude import prelude
from coda.terms import COLON, Coda


def ev(src, ctx=None, budget=Budget()):
    return render(evaluate(parse(src), ctx or prelude()).result)


def test_structural_atoms_are_fixed():
    assert ev("(:)") == "(:)"
    assert ev("(: a b)") == "(:a b)"


def test_basic_builtins():
    assert ev("pass : a b") == "a b"
    assert ev("null : a b") == "()"
    assert ev("const x : a") == "x"
    assert ev("left x : a") == "x"
    assert ev("right x : a") == "a"


def test_nested_evaluation():
    assert ev("pass : (pass : a) b") == "a b"
    assert ev("(pass pass : a) : b") == "(a:b)"


def test_undefined_heads_are_inert():
    assert ev("zzz : a") == "(zzz:a)"
    # components still normalize by congruence
    assert ev("zzz (pass:x) : (null:y)") == "(zzz x:)"


def test_equality_peeling():
    assert ev("(a=a)") == "()"
    assert ev("(a=b)") == "(= a:b)"
    assert ev("(a b=a c)") == "(= a b:a c)"


def test_tri_equal():
    ctx = prelude()
    assert equal(parse("a"), parse("a"), ctx) is TriBool.ALWAYS
    assert equal(parse("a"), parse("b"), ctx) is TriBool.NEVER
    # undefined-headed codas are permanent atoms, so this is decided
    assert equal(parse("a"), parse("(zzz:)"), ctx) is TriBool.NEVER
    # a budget-exhausted comparison stays open
    assert equal(parse("a"), parse("while {B B} : x"), ctx,
                 Budget(max_steps=20)) is TriBool.UNDECIDED
    assert equal(parse("x a"), parse("x b"), ctx) is TriBool.NEVER
    assert equal(parse("a"), parse(""), ctx) is TriBool.NEVER
    assert equal(parse(""), parse(""), ctx) is TriBool.ALWAYS


def test_budget_exhaustion_is_reported():
    out = evaluate(parse("while {B B} : x"), prelude(), Budget(max_steps=10))
    assert not out.normalized


def test_no_runtime_errors_on_junk():
    # deeply nested nonsense evaluates without raising
    src = "((((((:a):b):c):d):e):f)"
    out = evaluate(parse(src), prelude())
    assert out.normalized


def test_step_is_one_pass():
    d = parse("(pass : (pass : a))")
    once = step(d, prelude())
    assert render(once) == "(pass:a)"
    assert render(step(once, prelude())) == "a"


def test_add_definition_and_monotonicity():
    ctx = prelude()
    ctx2 = add_definition(ctx, "twice", parse("ap {B B}"))
    assert ev("twice : x", ctx2) == "x x"
    # rebinding is a no-op
    ctx3 = add_definition(ctx2, "twice", parse("null"))
    assert ev("twice : a b", ctx3) == ev("twice : a b", ctx2)
    # old results are unchanged by the new definition
    for src in ("pass : a b", "(a=b)", "bool : x"):
        assert ev(src, ctx) == ev(src, ctx2)


def test_def_builtin_defines_within_evaluation():
    assert ev("(def first2 : {first 2 : B}) (first2 : a b c d)") == "a b"


def test_classify_atom():
    ctx = prelude()
    assert classify_atom(COLON, ctx) == "invariant_atom"
    assert classify_atom(parse("(pass:a)")[0], ctx) == "reducible"
    assert classify_atom(parse("(zzz:a)")[0], ctx) == "invariant_atom"
    assert classify_atom(Coda((word("b"),), (word("x"),)), ctx) == "invariant_atom"
    assert classify_atom(parse("(b:(pass:x))")[0], ctx) == "defined_fixed_point"


def test_determinism():
    src = "sort : (pass:b) (null:c) a"
    assert ev(src) == ev(src)
