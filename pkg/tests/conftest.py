import pytest

# criterion number -> (title, [(ok, detail), ...])
_ACCEPTANCE: dict[int, tuple[str, list]] = {}


@pytest.fixture
def criterion():
    """record(number, title, ok, detail) adds one sub-check to an acceptance criterion."""
    def record(number: int, title: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.setdefault(number, (title, []))[1].append((bool(ok), detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, results = _ACCEPTANCE[number]
        ok = all(r for r, _ in results)
        failed = [d for r, d in results if not r]
        line = f"{'PASS' if ok else 'FAIL'}  {number:>2}. {title}  [{len(results) - len(failed)}/{len(results)} checks]"
        if failed:
            line += "  failing: " + "; ".join(failed)
        terminalreporter.write_line(line)
