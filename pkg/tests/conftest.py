import pytest

from kpflows import build_graph, complete_type_a


@pytest.fixture
def g3():
    """Negative triangle on three vertices."""
    return build_graph(3, "A", [(1, 2, "-", 1), (1, 3, "-", 1), (2, 3, "-", 1)])


@pytest.fixture
def k4():
    """Complete type A graph on four vertices."""
    return complete_type_a(4)


@pytest.fixture
def gc():
    """Type C graph: loop at 1, star from 1, triangle on {2,3,4}."""
    return build_graph(
        4,
        "C",
        [
            (1, 1, "+", 1),
            (1, 2, "-", 1),
            (1, 3, "-", 1),
            (1, 4, "-", 1),
            (2, 3, "-", 1),
            (2, 4, "-", 1),
            (3, 4, "-", 1),
        ],
    )


@pytest.fixture
def gc_mixed(gc):
    """gc plus a positive copy of each star edge (mixed-sign hypothesis)."""
    extra = [(1, 2, "+", 1), (1, 3, "+", 1), (1, 4, "+", 1)]
    return build_graph(4, "C", [(i, j, s, m) for i, j, s, m in gc.edges] + extra)


@pytest.fixture
def mixed_no_loop():
    """Mixed-sign hypothesis graph without the loop; the smallest witness of
    the boundary failure of the mixed identity."""
    return build_graph(
        4,
        "C",
        [
            (1, 2, "-", 1),
            (1, 3, "-", 1),
            (1, 4, "-", 1),
            (1, 2, "+", 1),
            (1, 3, "+", 1),
            (1, 4, "+", 1),
            (2, 3, "-", 1),
            (2, 4, "-", 1),
            (3, 4, "-", 1),
        ],
    )
