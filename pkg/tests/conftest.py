import pytest

import roman_urdu as ru


@pytest.fixture(scope="session")
def fixture_lex():
    return ru.fixture_lexicon()


@pytest.fixture(scope="session")
def corpus_lex():
    return ru.corpus_lexicon()


@pytest.fixture(scope="session")
def rules():
    return ru.default_rules()


@pytest.fixture(scope="session")
def engine():
    return ru.default_engine()


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when == "teardown":
        return
    number, title = marker.args
    failed = call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception)
    prev = _criteria.get(number, (title, True))
    _criteria[number] = (title, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
