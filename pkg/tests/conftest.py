import os
import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from treelength.graph import Multigraph
from treelength.search import initial_layout

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def multigraphs(draw, min_n=3, max_n=9, max_mult=3, simple=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    top = 1 if simple else max_mult
    mults = draw(st.lists(st.integers(0, top), min_size=len(pairs), max_size=len(pairs)))
    return Multigraph(n, {p: k for p, k in zip(pairs, mults) if k})


@st.composite
def graphs_with_layouts(draw, min_n=3, max_n=9, simple=False):
    g = draw(multigraphs(min_n=min_n, max_n=max_n, simple=simple))
    seed = draw(st.integers(0, 2**32 - 1))
    return g, initial_layout(g, random.Random(seed))


# one line per acceptance criterion, printed at the end of the session
ACCEPTANCE: dict[str, str] = {}


def record(criterion: str, passed: bool, detail: str) -> None:
    ACCEPTANCE[criterion] = f"{criterion}: {'PASS' if passed else 'FAIL'}  {detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[1])):
        terminalreporter.write_line(ACCEPTANCE[key])
