import json

from monoidlab.catalog import parse_identity
from monoidlab.cli import main, run_suite
from monoidlab.words import parse_word


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_holds(capsys):
    code, out, _ = run(capsys, "check", "--monoid", "sw:xy", "--identity", "xysxty = yxsxty")
    assert code == 0 and out.startswith("holds")


def test_check_fails_with_witness(capsys):
    code, out, _ = run(capsys, "check", "--monoid", "sw:xy", "--identity", "xy = yx")
    assert code == 1 and "witness" in out


def test_decide(capsys):
    assert run(capsys, "decide", "--theory", "C:3", "--identity", "xyx = xxxy")[:2] == (1, "false\n")
    assert run(capsys, "decide", "--theory", "SL", "--identity", "xy = yxx")[0] == 0


def test_parse_error_position(capsys):
    code, _, err = run(capsys, "decide", "--theory", "SL", "--identity", "x#y = y")
    assert code == 3
    lines = err.splitlines()
    assert "position 1" in lines[0] and lines[-1].index("^") == lines[-2].index("#")


def test_usage_errors(capsys):
    assert run(capsys)[0] == 3
    assert run(capsys, "nope")[0] == 3
    assert run(capsys, "decide", "--theory", "Q:9", "--identity", "x = x")[0] == 3
    assert run(capsys, "perm")[0] == 3


def test_derive_prints_numbered_steps(capsys):
    code, out, _ = run(capsys, "derive", "--basis", "xx=xxx", "--goal", "xx = xxxxx", "--max-len", "5")
    assert code == 0
    steps = out.splitlines()[1:]
    assert [s.split(".")[0].strip() for s in steps] == ["1", "2", "3"]
    assert "forward" in steps[0]


def test_derive_refuted(capsys):
    code, out, _ = run(capsys, "derive", "--basis", "D:2", "--goal", "xyx = xxy",
                       "--max-len", "8", "--model", "sw:xtx")
    assert code == 1 and out.startswith("refuted")


def test_isoterm(capsys):
    assert run(capsys, "isoterm", "--monoid", "sw:xtx", "--word", "xyx")[0] == 0
    assert run(capsys, "isoterm", "--monoid", "sw:xy", "--word", "xx")[0] == 1


def test_perm_pair_both_orders(capsys):
    code, out, _ = run(capsys, "perm", "--theories", "A:2,SL", "--pair", "x | xy", "--order", "both")
    lines = out.splitlines()
    assert "found" in lines[0] and "exhausted" in lines[1] and code == 1


def test_perm_case_json(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, text, _ = run(capsys, "perm", "--case", "nonperm-i", "--param", "n=2",
                        "--max-len", "10", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert set(data) >= {"case", "params", "links", "reverse_search", "verdict", "schema_version"}
    assert data["reverse_search"]["bound"] == 10


def test_printed_words_reparse(capsys):
    _, out, _ = run(capsys, "perm", "--case", "nonperm-vi")
    for line in out.splitlines()[1:]:
        left, rest = line.strip().split(" ~[", 1)
        right = rest.split("] ", 1)[1].rsplit(":", 1)[0]
        assert parse_word(left) and parse_word(right)
    _, out, _ = run(capsys, "check", "--monoid", "sw:xy", "--identity", "sigma1")
    printed = out.split("satisfies ", 1)[1].strip()
    assert parse_identity(printed) == parse_identity("xysxty = yxsxty")


def test_lattice(capsys):
    assert run(capsys, "lattice", "--figure", "ApvC2")[0] == 0
    code, out, _ = run(capsys, "lattice", "--figure", "M3")
    assert code == 1 and "M3" in out


def test_sw_and_word(capsys, tmp_path):
    out = tmp_path / "m.json"
    code, text, _ = run(capsys, "sw", "xtx", "--elements", "--out", str(out))
    assert code == 0 and "7 elements" in text
    assert json.loads(out.read_text())["size"] == 7
    code, text, _ = run(capsys, "word", "xysxty")
    assert code == 0 and "xy | x | y" in text


def test_empty_suite():
    rep = run_suite("quick", tasks=[])
    assert rep.verdict == "pass" and rep.cases == [] and rep.checks == []


def test_suite_threads_do_not_change_results():
    tasks = [("check", "lattice-figures", {}), ("case", "nonperm-i", {}), ("case", "lifting-sanity", {})]
    one = run_suite("quick", 1, tasks)
    two = run_suite("quick", 2, tasks)
    strip = lambda rep: [{k: v for k, v in r.items() if k != "seconds"} for r in rep.checks + rep.cases]
    assert strip(one) == strip(two)


def test_exit_codes_are_a_function_of_verdicts():
    from monoidlab.cli import EXIT, USAGE
    assert len(set(EXIT.values()) | {USAGE}) == len(EXIT) + 1
