"""Rewrite the golden outputs from the current CLI.  Run from any directory."""

import io
import shlex
from pathlib import Path

from qsuperplane.cli import run

HERE = Path(__file__).resolve().parent


def render(line: str) -> str:
    out, err = io.StringIO(), io.StringIO()
    code = run(shlex.split(line), out, err)
    return f"$ qsuperplane {line}\nexit {code}\n--- stdout\n{out.getvalue()}--- stderr\n{err.getvalue()}"


def cases() -> list[str]:
    return [ln for ln in (HERE / "cases.txt").read_text().splitlines() if ln.strip()]


def golden_path(i: int) -> Path:
    return HERE / f"{i:03d}.txt"


if __name__ == "__main__":
    import os

    os.chdir(HERE)
    for i, line in enumerate(cases(), 1):
        golden_path(i).write_text(render(line))
