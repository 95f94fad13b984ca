import numpy as np
import pytest

from sporadic_sics import build_hesse_sic, build_hoggar_sic, build_qubit_sic, build_qutrit_mubs


@pytest.fixture(scope="session")
def qubit_plus():
    return build_qubit_sic("plus")


@pytest.fixture(scope="session")
def qubit_minus():
    return build_qubit_sic("minus")


@pytest.fixture(scope="session")
def hesse():
    return build_hesse_sic()


@pytest.fixture(scope="session")
def hoggar():
    return build_hoggar_sic()


@pytest.fixture(scope="session")
def mubs(hesse):
    return build_qutrit_mubs(hesse)


@pytest.fixture(scope="session")
def sics(qubit_plus, hesse, hoggar):
    return {2: qubit_plus, 3: hesse, 8: hoggar}


@pytest.fixture
def rng():
    return np.random.default_rng(20181016)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Record one acceptance line and assert it."""

    def _record(number: int, name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {name}  {detail}".rstrip())
        assert ok, f"criterion {number} ({name}) failed: {detail}"

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
