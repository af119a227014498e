import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# First ten ordinates of zeta zeros, from mpmath.zetazero at 40 digits.
ZERO_ORDINATES = (
    14.134725141734695, 21.022039638771556, 25.01085758014569, 30.424876125859512,
    32.93506158773919, 37.586178158825675, 40.9187190121475, 43.327073280915,
    48.00515088116716, 49.7738324776723,
)

# one summary line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
