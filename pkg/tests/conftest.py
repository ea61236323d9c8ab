import os

import pytest
from hypothesis import HealthCheck, settings

from plcrf.channel import db_to_linear
from plcrf.system import System, system_e2e

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def baseline_system(branches=1, relays=2, gbar0_db=10.0, rho_db=20.0) -> System:
    """Default link (12 dB shadowing, 3x2 MIMO with m = 3) with pinned average SNRs."""
    return System(gbar0=db_to_linear(gbar0_db), rho=db_to_linear(rho_db)).with_(
        **{"plc.branches": branches, "plc.relays": relays}
    )


@pytest.fixture(scope="session")
def e2e_l1m2():
    return system_e2e(baseline_system())


@pytest.fixture(scope="session")
def e2e_l2m1():
    return system_e2e(baseline_system(branches=2, relays=1))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def accept():
    """Record one acceptance line; the line is printed in the terminal summary."""

    def record(criterion: str, ok: bool, detail: str) -> bool:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
