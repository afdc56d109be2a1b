"""Byte-for-byte comparison of CLI output against stored transcripts.

Each case is a pair ``NN-name.cmd.json`` (argv and expected exit code)
and ``NN-name.out`` (expected stdout).  Regenerate a transcript only
after checking the new values by hand.
"""

import io
import json
import re
from pathlib import Path

import pytest

from j3.cli import run_command

GOLDEN = Path(__file__).parent / "golden"
CASES = sorted(p.name[: -len(".cmd.json")] for p in GOLDEN.glob("*.cmd.json"))


def load(stem):
    spec = json.loads((GOLDEN / f"{stem}.cmd.json").read_text())
    expected = (GOLDEN / f"{stem}.out").read_text()
    return spec["argv"], spec["exit"], expected


def run(argv):
    out = io.StringIO()
    code = run_command(argv, out=out)
    return code, out.getvalue()


def test_twenty_cases():
    assert len(CASES) == 20


@pytest.mark.parametrize("stem", CASES)
def test_golden(stem):
    argv, code, expected = load(stem)
    assert run(argv) == (code, expected)


@pytest.mark.parametrize("stem", CASES)
def test_oracle_agrees_on_golden_inputs(stem):
    argv, code, _ = load(stem)
    if code != 0:
        return
    argv = [a for a in argv if a != "--json"] + (["--oracle"] if "--oracle" not in argv else [])
    _, out = run(argv)
    m = re.search(r"oracle_delta = (\S+)", out)
    assert m and float(m.group(1)) <= 1e-9
