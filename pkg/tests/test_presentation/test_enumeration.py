from itertools import product

import pytest

from app.core.classes.enumeration import enumerate_vectors, max_log_order
from app.core.classes.errors import NotPrimeError
from app.core.classes.presentation import validate_params
from app.core.Interfaces.params_interface import ParamVector


def naive_vectors(p: int, top: int) -> list[ParamVector]:
    """Filter of a box that is wider than the parameter space."""
    found = []
    for m, n1, n2 in product(range(1, top + 1), repeat=3):
        if m + n1 + n2 > top:
            continue
        units = range(1, 2 * p ** (m - 1) + 1)
        box = product(range(m + 1), repeat=4)
        for (o1, o2, o1p, o2p), u1, u2 in product(box, units, units):
            vector = ParamVector(p, m, n1, n2, o1, o2, o1p, o2p, u1, u2)
            if validate_params(vector).valid:
                found.append(vector)
    return sorted(found)


def test_max_log_order() -> None:
    assert max_log_order(3, 27) == 3
    assert max_log_order(3, 80) == 3
    assert max_log_order(5, 4) == 0


def test_order_27() -> None:
    vectors = list(enumerate_vectors(3, 27))
    assert vectors == [
        ParamVector(3, 1, 1, 1, 0, 0, 0, 0, 1, 1),
        ParamVector(3, 1, 1, 1, 0, 0, 1, 1, 1, 1),
    ]


@pytest.mark.parametrize("p, bound", [(3, 3**5), (5, 5**4)])
def test_matches_naive_filter(p: int, bound: int) -> None:
    expected = naive_vectors(p, max_log_order(p, bound))
    assert list(enumerate_vectors(p, bound)) == expected


def test_lexicographic_order_and_validity() -> None:
    vectors = list(enumerate_vectors(3, 3**7))
    assert vectors == sorted(vectors)
    assert len(set(vectors)) == len(vectors)
    assert all(validate_params(vector).valid for vector in vectors)
    assert all(3**vector.log_order <= 3**7 for vector in vectors)


def test_contains_the_open_case() -> None:
    vectors = set(enumerate_vectors(3, 3**7))
    for u1 in (1, 2):
        assert ParamVector(3, 2, 3, 2, 0, 1, 1, 1, u1, 1) in vectors


def test_non_prime() -> None:
    with pytest.raises(NotPrimeError):
        list(enumerate_vectors(9, 3**5))
