import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from recsquares import Poly, RecurrenceSpec

SUITE_SEED = 20021
SUITE_SIZE = 200


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.randint(1, 3))


def random_spec(rng: random.Random, max_order: int = 6) -> RecurrenceSpec:
    order = rng.randint(1, max_order)
    return RecurrenceSpec.of(
        [random_rational(rng) for _ in range(order)],
        [random_rational(rng) for _ in range(order)],
    )


def suite_specs(n: int = SUITE_SIZE, seed: int = SUITE_SEED) -> list[RecurrenceSpec]:
    rng = random.Random(seed)
    return [random_spec(rng) for _ in range(n)]


@pytest.fixture(scope="session")
def suite():
    return suite_specs()


rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


def polys(max_degree: int = 8):
    return st.lists(rationals, max_size=max_degree + 1).map(Poly)


def specs(max_order: int = 6):
    return st.integers(1, max_order).flatmap(
        lambda l: st.builds(
            RecurrenceSpec.of,
            st.lists(rationals, min_size=l, max_size=l),
            st.lists(rationals, min_size=l, max_size=l),
        )
    )


# -- acceptance criterion summary ----------------------------------------

_criteria: dict[int, list[bool]] = {}
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        n, title = marker.args
        _titles[n] = title
        _criteria.setdefault(n, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        results = _criteria[n]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {n}: {status}  {_titles[n]}  ({sum(results)}/{len(results)} tests)"
        )
