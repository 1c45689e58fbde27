"""Named small instances used across tests, demos and the shipped JSON files.

Each builder returns a fresh object.  The shipped JSON documents under
data/fixtures are generated from these tables (tools/gen_fixture_files.py)
and the test suite asserts the two stay in sync.
"""

from importlib import resources

from .core import FiniteSolution
from .qcycle import QCycleSet


def singleton():
    return FiniteSolution(((0,),), ((0,),))


def projection(n=2):
    """Trivial solution: every translation is the identity."""
    identity = tuple(range(n))
    rows = tuple(identity for _ in range(n))
    return FiniteSolution(rows, rows)


def left_only3():
    """Three elements, identity left translations, collapsing right action:
    left non-degenerate but not right non-degenerate, and its forward
    relation is incompatible with the right action."""
    sigma = ((0, 1, 2), (0, 1, 2), (0, 1, 2))
    tau = ((1, 2, 2), (1, 2, 2), (2, 2, 2))
    return FiniteSolution(sigma, tau)


def lyubashenko(f, g):
    """Constant translation families sigma_x = f and tau_y = g; a solution
    exactly when f and g commute."""
    f, g = tuple(f), tuple(g)
    n = len(f)
    return FiniteSolution(tuple(f for _ in range(n)), tuple(g for _ in range(n)))


def lyubashenko3():
    """Both families equal to the 3-cycle 0 -> 1 -> 2 -> 0."""
    return lyubashenko((1, 2, 0), (1, 2, 0))


def derived2():
    """Identity left translations with a constant transposition on the right."""
    return lyubashenko((0, 1), (1, 0))


def z3group():
    """Left translations of the cyclic group of order 3 with collapsing right
    action: left non-degenerate, never permutational at any level."""
    sigma = tuple(tuple((x + y) % 3 for y in range(3)) for x in range(3))
    tau = ((0, 0, 0), (0, 0, 0), (0, 0, 0))
    return FiniteSolution(sigma, tau)


def qcycle_constant(n=3, e=0):
    """dot is projection on the second argument, colon is constant e; a valid
    q-cycle set that is not regular for n above 1."""
    dot = tuple(tuple(range(n)) for _ in range(n))
    colon = tuple(tuple(e for _ in range(n)) for _ in range(n))
    return QCycleSet(dot, colon)


FIXTURE_FILES = (
    "singleton.json",
    "projection2.json",
    "left_only3.json",
    "lyubashenko3.json",
    "derived2.json",
    "z3group.json",
    "qcycle_constant.json",
)


def fixture_path(name):
    """Filesystem path of a shipped JSON fixture document."""
    path = resources.files("yangbaxter").joinpath("data", "fixtures", name)
    if not path.is_file():
        raise FileNotFoundError(f"no shipped fixture named {name!r}")
    return path
