import pytest

from evencycle.generators import bipartite_corpus, named_graphs, random_corpus

CORPUS_SEED = 2024


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(100, CORPUS_SEED)


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(30, 7, n_range=(5, 25), max_m=60)


@pytest.fixture(scope="session")
def named():
    return named_graphs()


@pytest.fixture(scope="session")
def bip_corpus():
    return bipartite_corpus(60, 11)


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Collects one verdict line per acceptance criterion for the summary."""
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
