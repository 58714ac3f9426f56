from fractions import Fraction

import pytest

from littleweyl.lie import build_from_cartan, cartan_matrix_of_type
from littleweyl.linalg import Subspace


@pytest.fixture(scope="session")
def a1():
    return build_from_cartan(cartan_matrix_of_type("A1"))


@pytest.fixture(scope="session")
def a2():
    return build_from_cartan(cartan_matrix_of_type("A2"))


@pytest.fixture(scope="session")
def b2():
    return build_from_cartan(cartan_matrix_of_type("B2"))


@pytest.fixture(scope="session")
def a1xa1():
    return build_from_cartan(cartan_matrix_of_type("A1xA1"))


def span(dim, *rows):
    return Subspace.from_spanning(dim, [tuple(Fraction(x) for x in r) for r in rows])


@pytest.fixture(scope="session")
def sl2_subalgebras(a1):
    """Named 1-dim subalgebras of sl2 in (h, e, f) coordinates."""
    return {
        "nbar": span(3, (0, 0, 1)),
        "so2": span(3, (0, 1, -1)),
        "so11": span(3, (0, 1, 1)),
        "a": span(3, (1, 0, 0)),
        "n": span(3, (0, 1, 0)),
    }


@pytest.fixture(scope="session")
def twisted_diagonal(a1xa1):
    # basis h1, h2, e1, e2, f1, f2; rows are (e,-f), (h,-h), (f,-e)
    return span(6, (0, 0, 1, 0, 0, -1), (1, -1, 0, 0, 0, 0), (0, 0, 0, 1, -1, 0))


@pytest.fixture(scope="session")
def so3_subalgebra(a2):
    rows = []
    for p in range(3):
        row = [0] * 8
        row[a2.e_index(p)] = 1
        row[a2.f_index(p)] = -1
        rows.append(tuple(row))
    return span(8, *rows)


@pytest.fixture(scope="session")
def a2_nbar(a2):
    return Subspace.from_coordinates(8, [a2.f_index(p) for p in range(3)])
