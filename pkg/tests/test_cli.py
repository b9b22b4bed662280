import io
import shlex
import sys
from pathlib import Path

import pytest

from qsuperplane.algebras import build
from qsuperplane.cli import run
from qsuperplane.parsing import parse_element

GOLDEN = Path(__file__).parent / "golden"
sys.path.insert(0, str(GOLDEN))
from regenerate import cases, golden_path, render  # noqa: E402

CASES = cases()


def invoke(line: str):
    out, err = io.StringIO(), io.StringIO()
    code = run(shlex.split(line), out, err)
    return code, out.getvalue(), err.getvalue()


def test_corpus_size_and_coverage():
    assert len(CASES) >= 30
    commands = {shlex.split(c)[0] for c in CASES}
    assert commands == {
        "normalize", "coproduct", "counit", "antipode", "sdet", "inverse", "power", "pair", "d", "act", "verify", "faults",
    }
    assert any("--inject-fault" in c for c in CASES)


@pytest.mark.parametrize("i,line", list(enumerate(CASES, 1)), ids=[f"{i:03d}" for i in range(1, len(CASES) + 1)])
def test_golden(i, line, monkeypatch):
    monkeypatch.chdir(GOLDEN)
    assert render(line) == golden_path(i).read_text()


def test_exit_codes():
    assert invoke("verify rtt")[0] == 0
    assert invoke("verify hopf:kq11 --inject-fault kq11-antipode")[0] == 1
    assert invoke("normalize 'x theta'")[0] == 2
    assert invoke("verify nope")[0] == 2
    assert invoke("power")[0] == 2


def test_failing_checks_are_named():
    code, out, _ = invoke("verify all --inject-fault kq11-theta-x")
    assert code == 1
    assert "FAIL kq11 A: entry (11,12)" in out
    assert out.rstrip().endswith("(failing suites: rtt, matrix, coaction, duality)")


def test_json_is_deterministic():
    a = invoke("verify duality --format json")
    b = invoke("verify duality --format json")
    assert a == b and a[0] == 0
    assert "elapsed" not in a[1]
    assert "elapsed_ms" in invoke("verify ybe --format json --timing")[1]


@pytest.mark.parametrize(
    "line,algebra",
    [
        ("normalize '(x + theta)^3 - x^-2'", "kq11"),
        ("antipode 'a + beta*gamma'", "glq11"),
        ("normalize 'phi*Q^-3 + i*phi^2'", "uqk11"),
        ("antipode 'Dtheta*gt^3'", "kqf11-q2"),
    ],
)
def test_output_round_trips(line, algebra):
    code, out, _ = invoke(f"{line} --algebra {algebra}")
    assert code == 0
    pres = build(algebra).pres
    e = parse_element(out, pres)
    assert str(e) == out.strip()


def test_set_specialization():
    assert invoke("power --n 2 --set q=-1")[1] == "[x^2, 0; 0, x^2]\n"
    code, _, err = invoke("power --n 2 --set q=3")
    assert code == 2 and "symbolically" in err
    assert invoke("verify rtt --set q=4")[0] == 2
