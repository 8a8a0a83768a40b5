import pytest
from hypothesis import strategies as st

from partfreq.partitions import Partition

_ACCEPTANCE: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    label = marker.args[0]
    failed = call.excinfo is not None
    if failed or _ACCEPTANCE.get(label) != "FAIL":
        _ACCEPTANCE[label] = "FAIL" if failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{_ACCEPTANCE[label]}  {label}")


@pytest.fixture(scope="session")
def mod5_table():
    # o-counts for orbit sizes 1, 2, 3, 6 at n = 5k + 4, modulus 5
    return {
        4: (5, 0, 0, 0),
        9: (20, 5, 0, 0),
        14: (75, 30, 0, 0),
        19: (220, 135, 0, 0),
        24: (605, 485, 0, 0),
        29: (1480, 1535, 5, 0),
        34: (3470, 4375, 20, 5),
        39: (7620, 11580, 75, 30),
    }


partitions_st = st.lists(st.integers(1, 40), max_size=14).map(Partition.sorted)
moduli_st = st.sampled_from([2, 3, 4, 5, 7, 11])
