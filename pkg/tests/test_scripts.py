import json
import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def _run(name, *args):
    return subprocess.run(
        [sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True, timeout=120
    )


def test_xtau_script_json():
    proc = _run("xtau_experiment.py", "--max-n", "3", "--json")
    assert proc.returncode == 0
    rows = json.loads(proc.stdout)
    assert [(r["nodes"], r["crossings"]) for r in rows] == [(5, 18), (7, 64), (9, 150)]


def test_garside_script():
    proc = _run("garside_experiment.py", "--max-n", "4")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[2].split() == ["3", "11", "11", "3", "6", "1", "True"]


@pytest.mark.parametrize("extra", [(), ("--bv-hat",)])
def test_bounds_sweep_writes_records(tmp_path, extra):
    out = tmp_path / "b.jsonl"
    proc = _run("bounds_sweep.py", "--samples", "20", "--max-length", "8", "--out", str(out), *extra)
    assert proc.returncode == 0
    records = [json.loads(line) for line in out.read_text().splitlines()]
    assert len(records) == 20
    assert all(r["crossings_within_pair_bound"] and r["upper_within_constant"] for r in records)
