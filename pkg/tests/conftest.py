import csv
from contextlib import contextmanager
from pathlib import Path

import pytest

from conceptcx import CategoryStructure, enumerate_classes

GOLDEN = Path(__file__).parent / "golden"

# SHJ category A sets, read off the type table (category A column per type)
SHJ = {
    "I": ["000", "001", "010", "011"],
    "II": ["000", "001", "110", "111"],
    "III": ["000", "001", "010", "101"],
    "IV": ["000", "001", "010", "100"],
    "V": ["000", "001", "010", "111"],
    "VI": ["000", "011", "101", "110"],
}

_ACCEPTANCE: dict[int, tuple[str, str, str]] = {}


def read_golden(name):
    with open(GOLDEN / name, newline="") as fh:
        lines = [line for line in fh if not line.startswith("#")]
    return list(csv.DictReader(lines, delimiter="\t"))


@pytest.fixture
def shj():
    return {k: CategoryStructure.from_bitstrings(v) for k, v in SHJ.items()}


def all_enumerated(max_dims=4):
    out = []
    for d in range(1, max_dims + 1):
        for p in range(1, (1 << d) // 2 + 1):
            out.extend(enumerate_classes(d, p))
    return out


@pytest.fixture
def criterion():
    @contextmanager
    def record(number, title):
        try:
            yield
        except BaseException as exc:
            _ACCEPTANCE[number] = ("FAIL", title, str(exc).splitlines()[0] if str(exc) else "")
            print(f"criterion {number}: FAIL  {title}")
            raise
        _ACCEPTANCE[number] = ("PASS", title, "")
        print(f"criterion {number}: PASS  {title}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, note = _ACCEPTANCE[number]
        line = f"criterion {number}: {status}  {title}"
        if note:
            line += f"  [{note[:120]}]"
        terminalreporter.write_line(line)
