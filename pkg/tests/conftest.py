import pytest

from mcfwords import kernels

_ACCEPTANCE = []


@pytest.fixture
def acceptance_log():
    def log(criterion, passed, detail):
        _ACCEPTANCE.append((criterion, passed, detail))
    return log


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    before = kernels.BACKEND
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(before)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {criterion}: {detail}")
