from collections import defaultdict
from dataclasses import replace

import pytest

from app.core.classes import centralizer_presentation as centralizer_module
from app.core.classes.centralizer_presentation import (
    centralizer_presentation,
    verify_centralizer_presentation,
)
from app.core.classes.enumeration import enumerate_vectors
from app.core.classes.errors import VerificationError
from app.core.classes.presentation import make_group, make_raw_group
from app.core.Interfaces.params_interface import ParamVector

CAP = 3**9


def test_verifies_on_every_group_up_to_729() -> None:
    for vector in enumerate_vectors(3, 3**6):
        ctx = make_group(vector)
        presentation = centralizer_presentation(ctx)
        assert verify_centralizer_presentation(ctx, presentation) == [], vector.key()


def test_relators_do_not_depend_on_units() -> None:
    relators = defaultdict(set)
    for vector in enumerate_vectors(3, 3**6):
        presentation = centralizer_presentation(make_group(vector))
        relators[vector.prefix()].add(presentation.relators())
    assert all(len(found) == 1 for found in relators.values())


def test_o1_zero_case() -> None:
    presentation = centralizer_presentation(
        make_group(ParamVector(3, 2, 3, 2, 0, 1, 1, 1, 1, 1)), cap=3**7
    )
    assert presentation.case == "o1=0"
    assert presentation.order_log == 6
    assert presentation.relators() == (3, 3, 3, 1, 3, 2)


@pytest.mark.parametrize(
    "vector, case",
    [
        (ParamVector(3, 3, 4, 2, 2, 1, 1, 2, 1, 1), "s=0"),
        (ParamVector(3, 3, 4, 2, 2, 1, 1, 2, 2, 1), "s=0"),
        (ParamVector(3, 3, 4, 2, 2, 1, 0, 2, 1, 1), "s<0"),
    ],
)
def test_both_o_positive(vector: ParamVector, case: str) -> None:
    ctx = make_group(vector)
    presentation = centralizer_presentation(ctx, verify=True, cap=CAP)
    assert presentation.case.startswith(case)
    assert presentation.s_shift == (0 if case == "s=0" else -1)


def test_flipped_relator_fails_verification() -> None:
    ctx = make_group(ParamVector(3, 1, 1, 1, 0, 0, 0, 0, 1, 1))
    presentation = centralizer_presentation(ctx)
    broken = replace(presentation, commutator=presentation.commutator + 1)
    assert "[y,x]" in verify_centralizer_presentation(ctx, broken)


def test_raw_groups_are_rejected() -> None:
    with pytest.raises(ValueError):
        centralizer_presentation(make_raw_group(3, 1, 1, 1, 1, 1, 0, 0))


def test_verify_flag_raises_on_failure(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(
        centralizer_module,
        "verify_centralizer_presentation",
        lambda *args: ["order mismatch"],
    )
    ctx = make_group(ParamVector(3, 1, 1, 1, 0, 0, 0, 0, 1, 1))
    with pytest.raises(VerificationError):
        centralizer_module.centralizer_presentation(ctx, verify=True)
