import io

import pytest

from coda.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "pass : a b")
    assert code == 0 and out == "a b\n"


def test_eval_language_atom(capsys):
    code, out, _ = run(capsys, "eval", "{B B} : 1 2 3")
    assert code == 0 and out == "1 2 3 1 2 3\n"


def test_eval_empty(capsys):
    code, out, _ = run(capsys, "eval", "")
    assert code == 0 and out == "()\n"


def test_eval_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("null : x"))
    code, out, _ = run(capsys, "eval", "-")
    assert code == 0 and out == "()\n"


def test_eval_budget_note(capsys):
    code, out, err = run(capsys, "eval", "while {B B} : x", "--budget", "10")
    assert code == 0
    assert "budget exhausted" in err


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("CODA_BUDGET", "10")
    code, out, err = run(capsys, "eval", "while {B B} : x")
    assert code == 0 and "budget exhausted" in err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--width", "2", "--depth", "2")
    assert code == 0 and out == "91\n"


def test_count_enumerate_cross_check(capsys):
    code, out, err = run(capsys, "count", "--width", "2", "--depth", "2",
                         "--enumerate")
    assert code == 0 and out == "91\n"
    assert "cross-check: 91" in err


def test_count_enumerate_cap(capsys):
    code, _, err = run(capsys, "count", "--width", "3", "--depth", "3",
                       "--enumerate", "--cap", "10")
    assert code == 2 and "CapExceeded" in err


def test_count_tsv(capsys):
    code, out, _ = run(capsys, "count", "--width", "1", "--depth", "1",
                       "--format", "tsv")
    assert code == 0 and out == "1\t1\t2\n"


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--words", "pass", "bool",
                       "--max-len", "1")
    assert code == 0
    assert "pass" in out and "bool" in out


def test_search_cap(capsys):
    code, _, err = run(capsys, "search", "--words", "a", "b", "c",
                       "--max-len", "5", "--cap", "10")
    assert code == 2 and "CapExceeded" in err


def test_space_analyze(capsys):
    code, out, _ = run(capsys, "space", "analyze", "bool")
    assert code == 0
    assert "endomorphisms: 4" in out
    assert "field" in out


def test_space_analyze_overflow(capsys):
    code, _, err = run(capsys, "space", "analyze", "pass", "--cap", "3")
    assert code == 2 and "CarrierOverflow" in err


def test_demo(capsys):
    code, out, _ = run(capsys, "demo", "bool")
    assert code == 0
    assert "9/9 assertions passed" in out


def test_demo_unknown_name():
    with pytest.raises(SystemExit):
        main(["demo", "no-such-demo"])


def test_prelude_file(capsys, tmp_path):
    f = tmp_path / "defs.coda"
    f.write_text("# session helpers\ndef dup : ap {B B}\n")
    code, out, _ = run(capsys, "eval", "dup : x y", "--prelude", str(f))
    assert code == 0 and out == "x x y y\n"
