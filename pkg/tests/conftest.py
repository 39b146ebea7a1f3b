import json

import pytest

from curvemix.core.errors import CurvemixError
from curvemix.core.margins import instance_to_dict, make_instance, regular_instance
from curvemix.core.matrix import BinaryMatrix
from curvemix.statespace.enumeration import enumerate_states, iter_marginals

# rows of the 3 x 7 trade example
EXAMPLE_ROWS = ("0110101", "1001101", "0100011")


@pytest.fixture
def perm3():
    """3 x 3 permutation matrices: six states, switch graph K_{3,3}."""
    return make_instance([1, 1, 1], [1, 1, 1])


@pytest.fixture
def perm3_space(perm3):
    return enumerate_states(perm3)


@pytest.fixture
def derangement4():
    """4 x 4 permutation matrices with an empty diagonal: the nine derangements."""
    return regular_instance(4, 1)


@pytest.fixture
def regular4_2():
    return regular_instance(4, 2)


@pytest.fixture
def regular4_2_space(regular4_2):
    return enumerate_states(regular4_2)


@pytest.fixture
def example37():
    rows = [[int(b) for b in row] for row in EXAMPLE_ROWS]
    r = [sum(row) for row in rows]
    c = [sum(col) for col in zip(*rows)]
    spec = make_instance(r, c)
    return BinaryMatrix.from_rows(rows, spec)


@pytest.fixture
def degenerate4():
    """c = 1^4, r = (2, 2, 0, 0): the k-Curveball chain attains rel_c / k."""
    return enumerate_states(make_instance([2, 2, 0, 0], [1, 1, 1, 1]))


@pytest.fixture
def write_instance(tmp_path):
    def write(spec, name="instance.json"):
        path = tmp_path / name
        path.write_text(json.dumps(instance_to_dict(spec)))
        return str(path)
    return write


def _sweep(max_size=4):
    for m in range(2, max_size + 1):
        for n in range(2, max_size + 1):
            for diagonal in (False, True) if m == n else (False,):
                for r, c in iter_marginals(m, n):
                    try:
                        yield enumerate_states(make_instance(r, c, diagonal_forbidden=diagonal))
                    except CurvemixError:
                        continue


@pytest.fixture(scope="session")
def sweep_spaces():
    """Every feasible instance with 2 <= m, n <= 4 and non-increasing margins; square ones also with an empty diagonal."""
    return list(_sweep())
