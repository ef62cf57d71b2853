import json
from collections import defaultdict

import pytest

import app.core.classes.basis_search as basis_search_module
from app.core.classes.basis_search import (
    big_O,
    big_O_closed,
    extract_basis,
    extract_inv,
    extract_inv_pruned,
    o_pair_attained,
)
from app.core.classes.enumeration import enumerate_vectors
from app.core.classes.errors import CapExceededError, InvalidParamsError, QuotientError
from app.core.classes.invariants import (
    fingerprint,
    fingerprint_json,
    first_difference,
    invariant_report,
    quotient_chain,
    quotient_params,
    type_invariants,
    type_invariants_def,
)
from app.core.classes.presentation import comm, el_comm, make_group
from app.core.classes.subgroups import socle_quotient
from app.core.Interfaces.group_interface import Element, GroupCtx
from app.core.Interfaces.params_interface import ParamPrefix, ParamVector

CAP = 3**7

OPEN_CASE = ParamVector(3, 2, 3, 2, 0, 1, 1, 1, 1, 1)
HEISENBERG = ParamVector(3, 1, 1, 1, 0, 0, 0, 0, 1, 1)
EXPONENT_NINE = ParamVector(3, 1, 1, 1, 0, 0, 1, 1, 1, 1)


@pytest.fixture(scope="module")
def vectors_729() -> list[ParamVector]:
    return list(enumerate_vectors(3, 3**6))


def test_round_trip_small() -> None:
    for vector in enumerate_vectors(3, 3**4):
        ctx = make_group(vector)
        assert extract_inv(ctx) == extract_inv_pruned(ctx) == vector


@pytest.mark.slow
def test_round_trip(vectors_729: list[ParamVector]) -> None:
    for vector in vectors_729:
        ctx = make_group(vector)
        assert extract_inv(ctx) == vector
        assert extract_inv_pruned(ctx) == vector


def test_round_trip_p5() -> None:
    vectors = list(enumerate_vectors(5, 5**4))
    assert vectors
    for vector in vectors:
        assert extract_inv(make_group(vector)) == vector


def test_round_trip_open_case() -> None:
    for u1 in (1, 2):
        vector = ParamVector(3, 2, 3, 2, 0, 1, 1, 1, u1, 1)
        assert extract_inv(make_group(vector), CAP) == vector


def test_extracted_basis_generates_the_commutator() -> None:
    ctx = make_group(OPEN_CASE)
    basis = extract_basis(ctx, CAP)
    assert basis.o_pair == (0, 1)
    assert basis.oprime_pair == (1, 1)
    assert el_comm(ctx, basis.b2, basis.b1).z % 3 != 0


def test_basis_search_cap() -> None:
    with pytest.raises(CapExceededError):
        extract_inv(make_group(OPEN_CASE))


def test_o_pair_conditions() -> None:
    assert o_pair_attained((0, 3), 2, 2)
    assert o_pair_attained((1, 0), 2, 1)
    assert not o_pair_attained((1, 0), 2, 2)
    assert not o_pair_attained((1, 1), 3, 2)


def test_big_O() -> None:
    assert big_O_closed(OPEN_CASE) == (1, 3, -81, -27)
    assert big_O(make_group(OPEN_CASE), CAP) == (1, 3, -81, -27)


@pytest.mark.slow
def test_big_O_closed_form(vectors_729: list[ParamVector]) -> None:
    for vector in vectors_729:
        assert big_O(make_group(vector)) == big_O_closed(vector)


def test_type_invariants() -> None:
    assert type_invariants(OPEN_CASE) == [4, 2, 1]
    assert type_invariants_def(make_group(OPEN_CASE), CAP) == [4, 2, 1]
    assert type_invariants(HEISENBERG) == [1, 1, 1]
    assert type_invariants(EXPONENT_NINE) == [2, 1]


@pytest.mark.slow
def test_type_invariants_closed_form(vectors_729: list[ParamVector]) -> None:
    for vector in vectors_729:
        closed = type_invariants(vector)
        assert sum(closed) == vector.log_order
        assert type_invariants_def(make_group(vector)) == closed


def test_quotient_params() -> None:
    assert quotient_params(OPEN_CASE) == ParamPrefix(3, 1, 3, 2, 0, 0, 0, 0)
    with pytest.raises(QuotientError):
        quotient_params(HEISENBERG)
    with pytest.raises(InvalidParamsError):
        quotient_params(ParamVector(3, 2, 3, 2, 0, 1, 1, 1, 3, 1))


@pytest.mark.slow
def test_quotient_params_against_extraction() -> None:
    for vector in enumerate_vectors(3, 3**7):
        if vector.m < 2:
            continue
        quotient = socle_quotient(make_group(vector))
        assert extract_inv(quotient).prefix() == quotient_params(vector)


def test_quotient_chain() -> None:
    chain = quotient_chain(OPEN_CASE)
    assert chain == [OPEN_CASE.prefix(), ParamPrefix(3, 1, 3, 2, 0, 0, 0, 0)]
    assert quotient_chain(HEISENBERG) == [HEISENBERG.prefix()]


def test_open_case_report() -> None:
    report = invariant_report(make_group(OPEN_CASE), CAP, CAP)
    assert report.order == 3**7
    assert report.abelianization == [27, 9]
    assert report.exponent == 81
    assert report.nilpotency_class == 3
    assert report.type_invariants == [4, 2, 1]
    assert report.big_o == [1, 3, -81, -27]
    assert not report.metacyclic


def test_heisenberg_report() -> None:
    report = invariant_report(make_group(HEISENBERG))
    assert report.nilpotency_class == 2
    assert report.exponent == 3
    assert report.center_meet_commutator == 3
    assert report.jennings_group == [9, 3]


def test_fingerprint_depth() -> None:
    assert fingerprint(make_group(HEISENBERG)).depth == 1
    assert fingerprint(make_group(OPEN_CASE), CAP, CAP).depth == 2


def test_fingerprint_json_is_canonical() -> None:
    text = fingerprint_json(fingerprint(make_group(HEISENBERG)))
    payload = json.loads(text)
    assert payload["report"]["order"] == 27
    assert payload["quotient"] is None
    assert " " not in text


def test_fingerprints_ignore_units() -> None:
    left = fingerprint(make_group(ParamVector(3, 2, 2, 2, 0, 1, 1, 1, 1, 1)))
    right = fingerprint(make_group(ParamVector(3, 2, 2, 2, 0, 1, 1, 1, 2, 1)))
    assert fingerprint_json(left) == fingerprint_json(right)
    assert first_difference(left, right) is None


def test_first_difference() -> None:
    left = fingerprint(make_group(HEISENBERG))
    right = fingerprint(make_group(EXPONENT_NINE))
    assert first_difference(left, right) == "level[0].exponent"
    deeper = fingerprint(make_group(ParamVector(3, 2, 2, 2, 0, 1, 1, 1, 1, 1)))
    assert first_difference(left, deeper) == "level[0].order"


def test_report_respects_basis_cap() -> None:
    ctx = make_group(OPEN_CASE)
    with pytest.raises(CapExceededError):
        invariant_report(ctx, CAP)
    with pytest.raises(CapExceededError):
        fingerprint(ctx, CAP, 3**6)


@pytest.mark.slow
def test_fingerprint_coincidence_and_separation(
    vectors_729: list[ParamVector],
) -> None:
    by_prefix: dict[ParamPrefix, set[str]] = defaultdict(set)
    for vector in vectors_729:
        text = fingerprint_json(fingerprint(make_group(vector)))
        by_prefix[vector.prefix()].add(text)
    for texts in by_prefix.values():
        assert len(texts) == 1
    by_shape: dict[tuple[int, ...], dict[str, ParamPrefix]] = defaultdict(dict)
    for prefix, texts in by_prefix.items():
        (text,) = texts
        shape = (prefix.p, prefix.m, prefix.n1, prefix.n2)
        assert text not in by_shape[shape], (prefix, by_shape[shape].get(text))
        by_shape[shape][text] = prefix


def test_pruned_search_stops_early(monkeypatch: pytest.MonkeyPatch) -> None:
    calls: list[int] = []

    def counting_comm(ctx: GroupCtx, g: Element, h: Element) -> Element:
        calls.append(1)
        return comm(ctx, g, h)

    monkeypatch.setattr(basis_search_module, "comm", counting_comm)
    ctx = make_group(HEISENBERG)
    assert extract_inv(ctx) == HEISENBERG
    full = len(calls)
    calls.clear()
    assert extract_inv_pruned(ctx) == HEISENBERG
    assert 0 < len(calls) < full
