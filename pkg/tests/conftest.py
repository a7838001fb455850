import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from leibts.fixtures import CORPUS, VALID  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE: dict[int, tuple[bool, str, float]] = {}


def record(n: int, passed: bool, detail: str, seconds: float) -> None:
    ACCEPTANCE[n] = (passed, detail, seconds)


@pytest.fixture(params=VALID)
def valid_name(request):
    return request.param


@pytest.fixture
def valid_system(valid_name):
    return CORPUS[valid_name]()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        passed, detail, seconds = ACCEPTANCE[n]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {n:2d} {status}  {seconds:5.2f}s  {detail}")
