import numpy as np
import pytest

from app.core.classes.enumeration import enumerate_vectors
from app.core.classes.errors import CapExceededError
from app.core.classes.group_algebra import (
    aug_ideal_power,
    augmentation_ranks,
    dimension_subgroup,
    make_algebra,
    rref_mod,
)
from app.core.classes.presentation import make_group
from app.core.classes.subgroups import jennings, jennings_series, whole_group
from app.core.Interfaces.params_interface import ParamVector

HEISENBERG = make_group(ParamVector(3, 1, 1, 1, 0, 0, 0, 0, 1, 1))


def test_rref_mod() -> None:
    basis = rref_mod(np.array([[1, 2], [2, 1]]), 3)
    assert basis.rank == 1
    assert basis.pivots == [0]
    assert basis.rows.tolist() == [[1, 2]]


def test_rref_mod_full_rank() -> None:
    basis = rref_mod(np.array([[0, 2, 1], [1, 1, 0], [0, 0, 4]]), 5)
    assert basis.pivots == [0, 1, 2]
    assert basis.rows.tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_rref_mod_zero_matrix() -> None:
    basis = rref_mod(np.zeros((3, 4), dtype=np.int64), 3)
    assert basis.rank == 0
    assert basis.rows.shape == (0, 4)


def test_heisenberg_augmentation_ranks() -> None:
    actx = make_algebra(HEISENBERG)
    assert actx.dim == 27
    assert augmentation_ranks(actx) == [26, 24, 20, 16, 11, 7, 3, 1, 0]


def test_power_index_must_be_positive() -> None:
    with pytest.raises(ValueError):
        aug_ideal_power(make_algebra(HEISENBERG), 0)


def test_algebra_cap() -> None:
    with pytest.raises(CapExceededError):
        make_algebra(HEISENBERG, cap=9)


def test_dimension_subgroups_heisenberg() -> None:
    actx = make_algebra(HEISENBERG)
    assert len(dimension_subgroup(actx, 1)) == 27
    assert len(dimension_subgroup(actx, 2)) == 3
    assert len(dimension_subgroup(actx, 3)) == 1


def test_dimension_subgroups_are_jennings_subgroups() -> None:
    for vector in enumerate_vectors(3, 3**4):
        ctx = make_group(vector)
        actx = make_algebra(ctx)
        series = jennings_series(whole_group(ctx))
        for n in range(1, len(series) + 2):
            assert dimension_subgroup(actx, n) == jennings(ctx, n), vector.key()


def test_frattini_index_is_p_squared() -> None:
    for vector in enumerate_vectors(3, 3**4):
        actx = make_algebra(make_group(vector))
        index = len(dimension_subgroup(actx, 1)) // len(dimension_subgroup(actx, 2))
        assert index == 9, vector.key()
