"""Acceptance criteria AC1-AC10, one printed PASS/FAIL line each.

Run directly (``python3 tests/test_acceptance.py``) for just the summary lines.
"""

import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from pseudoalg.verify import CRITERIA, FULL_SUITE_BUDGET

ROOT = Path(__file__).resolve().parent.parent


def _report(result, capsys):
    with capsys.disabled():
        print("\n" + result.line())
        for f in result.failures[:10]:
            print(f"    failure: {f}")
        for note in result.flags:
            print(f"    note: {note}")


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"AC{n}" for n in range(1, len(CRITERIA) + 1)])
def test_criterion(criterion, capsys):
    result = criterion("full")
    _report(result, capsys)
    assert not result.failures, result.failures[:10]
    assert result.elapsed < result.budget, f"{result.elapsed:.2f}s exceeds the {result.budget:g}s budget"


def run_full_suite_cli():
    env = dict(os.environ, PYTHONPATH=str(ROOT / "src"))
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pseudoalg.cli", "verify-classification", "--suite", "full"],
        capture_output=True,
        text=True,
        env=env,
        cwd=ROOT,
    )
    return proc, time.perf_counter() - start


def test_AC10_full_suite_from_the_command_line(capsys):
    proc, elapsed = run_full_suite_cli()
    ok = proc.returncode == 0 and elapsed < FULL_SUITE_BUDGET
    with capsys.disabled():
        status = "PASS" if ok else "FAIL"
        print(f"\nAC10 {status}  verify-classification --suite full exits {proc.returncode}  [{elapsed:.1f}s < {FULL_SUITE_BUDGET:g}s]")
    assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
    assert elapsed < FULL_SUITE_BUDGET


if __name__ == "__main__":
    failed = 0
    for criterion in CRITERIA:
        result = criterion("full")
        print(result.line())
        failed += not result.passed
    proc, elapsed = run_full_suite_cli()
    ok = proc.returncode == 0 and elapsed < FULL_SUITE_BUDGET
    print(f"AC10 {'PASS' if ok else 'FAIL'}  verify-classification --suite full exits {proc.returncode}  [{elapsed:.1f}s < {FULL_SUITE_BUDGET:g}s]")
    sys.exit(1 if failed or not ok else 0)
