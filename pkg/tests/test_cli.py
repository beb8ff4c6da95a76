import io
import json
import re
import subprocess
import sys

import pytest

from braidcentral.cli import run, verify_report
from braidcentral.core import format_word, parse_word

WORD_RE = re.compile(r"^B\d+:")


def call(*argv, stdin=""):
    out = io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def reports(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def braid_strings(obj):
    if isinstance(obj, str):
        if WORD_RE.match(obj):
            yield obj
    elif isinstance(obj, dict):
        for v in obj.values():
            yield from braid_strings(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from braid_strings(v)


CASES = [
    ("nf", ["B4: 1 -2 3 2"]),
    ("bkl-nf", ["B4: 1 -2 3 2"]),
    ("equal", ["B3: 1 2 1", "B3: 2 1 2"]),
    ("equal", ["B3: 1 2", "B3: 2 1"]),
    ("conj", ["B3: 1 -2", "B3: 2 -1"]),
    ("conj", ["B3: 1 2", "B3: 1 1"]),
    ("sss", ["B4: 1 -2 3"]),
    ("classify", ["B5: 3 4 2 3 1 2 2 3 4 1 2 3"]),
    ("classify", ["B3: 2 1"]),
    ("classify", ["B3: 1 -2"]),
    ("reduce", ["B5: 3 4 2 3 1 2 2 3 4 1 2 3"]),
    ("reduce", ["B3: 1 -2"]),
    ("regular-form", ["B6: 1 3 3 5 5 5"]),
    ("centralizer", ["B4: 1 3 3"]),
    ("bound", ["7"]),
]


@pytest.mark.parametrize("verb,args", CASES)
def test_reports_verify(verb, args):
    code, text = call(verb, "--json", *args)
    assert code == 0
    (rep,) = reports(text)
    assert rep["schema"] == 1 and rep["status"] == "ok"
    assert verify_report(rep)


@pytest.mark.parametrize("verb,args", CASES)
def test_determinism_and_round_trip(verb, args):
    _, a = call(verb, "--json", *args)
    _, b = call(verb, "--json", *args)
    assert a == b
    for s in braid_strings(reports(a)[0]):
        assert format_word(parse_word(s)) == s


def test_documented_examples():
    _, text = call("centralizer", "--json", "B4: 1 3 3")
    res = reports(text)[0]["result"]
    assert res["count"] == 3 and res["bound"] == 3
    assert sorted(g["tag"] for g in res["generators"]) == ["interior(1)", "interior(2)", "section"]
    _, text = call("classify", "--json", "B5: 3 4 2 3 1 2 2 3 4 1 2 3")
    res = reports(text)[0]["result"]
    assert res["class"] == "reducible" and res["curves"] == [[1, 3], [4, 5]]
    _, text = call("equal", "--json", "B3: 1 2 1", "B3: 2 1 2")
    assert reports(text)[0]["result"]["equal"] is True


def test_batch_from_stdin():
    code, text = call("nf", "--json", stdin="B3: 1 2\n\nB4: 3 -3\n")
    assert code == 0
    reps = reports(text)
    assert [r["input"] for r in reps] == [["B3: 1 2"], ["B4: 3 -3"]]


def test_batch_pairs_from_stdin():
    code, text = call("equal", "--json", stdin="B3: 1 2 1\nB3: 2 1 2\nB3: 1\nB3: 2\n")
    assert code == 0
    assert [r["result"]["equal"] for r in reports(text)] == [True, False]


@pytest.mark.parametrize("argv", [
    ("nf", "B3: 1 x"),
    ("equal", "B3: 1", "B4: 1"),
    ("equal", "B3: 1"),
    ("frobnicate", "B3: 1"),
])
def test_input_errors(argv):
    code, text = call(*argv, "--json")
    assert code == 1


def test_parse_error_reports_position():
    _, text = call("nf", "--json", "B3: 1 x")
    rep = reports(text)[0]
    assert rep["status"] == "input-error" and "column 6" in rep["error"]


def test_budget_exit_code():
    code, text = call("sss", "--json", "--sss-cap", "1", "B6: 1 -2 3 -4 5")
    assert code == 2
    assert reports(text)[0]["status"] == "budget"


def test_partial_centralizer_report():
    code, text = call("centralizer", "--json", "--root-cap", "50", "B3: 1 -2 1 -2")
    rep = reports(text)[0]
    assert code == 2 and rep["status"] == "budget"
    assert rep["result"]["generators"] and not rep["result"]["complete"]


def test_human_output():
    code, text = call("classify", "B4: 1 3 3")
    assert code == 0
    assert "class: reducible" in text and "schema: 1" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "braidcentral.cli", "bound", "--json", "6"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"] == {"bound": 6, "n": 6}
