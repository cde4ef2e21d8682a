import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE: dict[int, str] = {}


def record(number: int, name: str, ok: bool, detail: str = "") -> None:
    _ACCEPTANCE[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {name}" + (f" ({detail})" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[n])
