import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from starfree import catalog  # noqa: E402

_acceptance_lines: list[str] = []


@pytest.fixture
def record():
    """Record an acceptance verdict; the line is echoed in the run summary."""

    def _record(tag: str, ok: bool, detail: str) -> None:
        _acceptance_lines.append(f"{tag} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return _record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def core_groups():
    return [G for n in sorted(catalog.supported_orders()) for G in catalog.all_groups_of_order(n)]


def nonabelian_core_groups():
    return [G for G in core_groups() if not G.is_abelian]


@pytest.fixture(scope="session")
def all_core():
    return core_groups()


@pytest.fixture(scope="session")
def nonabelian_core():
    return nonabelian_core_groups()
