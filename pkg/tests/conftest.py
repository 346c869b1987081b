import time
from contextlib import contextmanager

import pytest
from hypothesis import settings

from innerisotope import _pykernels

try:
    from innerisotope import _ckernels
except ImportError:
    _ckernels = None

settings.register_profile("repo", deadline=None, max_examples=50)
settings.load_profile("repo")

_LINES: list[str] = []


class _Outcome:
    detail = ""


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion, shown in the terminal summary."""

    @contextmanager
    def record(number: int, title: str):
        out = _Outcome()
        t0 = time.perf_counter()
        try:
            yield out
        except BaseException as exc:
            _LINES.append(f"FAIL  criterion {number:2d}  {title}  ({type(exc).__name__}: {exc})")
            raise
        dt = time.perf_counter() - t0
        extra = f"  {out.detail}" if out.detail else ""
        _LINES.append(f"PASS  criterion {number:2d}  {title}  [{dt:.2f}s]{extra}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)


BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param
