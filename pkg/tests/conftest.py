import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from centerfocus.center_conditions import SystemSpec
from centerfocus.trig_algebra import PolyTrig, TrigPoly

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def trig_polys(draw, max_degree: int = 4) -> TrigPoly:
    deg = draw(st.integers(0, max_degree))
    harm = {j: (draw(rationals), draw(rationals)) for j in range(1, deg + 1)}
    return TrigPoly(harm, draw(rationals))


@st.composite
def poly_trigs(draw, max_power: int = 2, max_degree: int = 3) -> PolyTrig:
    top = draw(st.integers(0, max_power))
    return PolyTrig({m: draw(trig_polys(max_degree)) for m in range(top + 1)})


@pytest.fixture
def focus_example() -> SystemSpec:
    return SystemSpec.from_coeffs(2, 1, 0, {(2, 0): 1, (0, 2): -1})


@pytest.fixture
def center_example() -> SystemSpec:
    return SystemSpec.from_coeffs(2, 1, 0, {(1, 1): 1})


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
