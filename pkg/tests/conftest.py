import pytest
from higherchar.complexes import Complex, closure
from higherchar.generators import (
    cross_polytope,
    cycle,
    path3,
    random_whitney,
    simplex_complex,
    star_complex,
)


@pytest.fixture
def k2():
    return simplex_complex(2)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def octa():
    return cross_polytope(2)


@pytest.fixture
def p3():
    return path3()


@pytest.fixture
def tetra():
    return closure([{1, 2, 3, 4}])


@pytest.fixture
def small_corpus():
    """A mixed bag used by cross-checking tests: named plus seeded random."""
    return [
        Complex.empty(),
        simplex_complex(1),
        simplex_complex(2),
        path3(),
        cycle(4),
        cycle(5),
        cross_polytope(2),
        closure([{1, 2, 3, 4}]),
        star_complex(5),
        random_whitney(6, 8, seed=11),
        random_whitney(7, 12, seed=23),
    ]
