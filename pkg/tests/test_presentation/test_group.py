import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.core.classes.errors import (
    CapExceededError,
    ContextMismatchError,
    PresentationError,
)
from app.core.classes.presentation import (
    el_comm,
    el_conj,
    el_inv,
    el_mul,
    el_order,
    el_pow,
    enumerate_elements,
    make_group,
    make_raw_group,
    normalize,
    o_of,
    r_of,
)
from app.core.Interfaces.arith_interface import Residue
from app.core.Interfaces.group_interface import IDENTITY, Element, GroupCtx
from app.core.Interfaces.params_interface import ParamVector

OPEN_CASE = make_group(ParamVector(3, 2, 3, 2, 0, 1, 1, 1, 1, 1))
HEISENBERG = make_group(ParamVector(3, 1, 1, 1, 0, 0, 0, 0, 1, 1))
BOTH_POSITIVE = make_group(ParamVector(3, 3, 4, 2, 2, 1, 1, 2, 1, 1))


def elements(ctx: GroupCtx) -> st.SearchStrategy[Element]:
    return st.builds(
        Element,
        st.integers(0, ctx.q1 - 1),
        st.integers(0, ctx.q2 - 1),
        st.integers(0, ctx.pm - 1),
    )


def test_context_fields() -> None:
    ctx = OPEN_CASE
    assert (ctx.r1, ctx.r2, ctx.w1, ctx.w2) == (1, 4, 3, 3)
    assert ctx.order == 3**7
    assert ctx.canonical
    assert not make_raw_group(3, 1, 1, 1, 1, 1, 0, 0).canonical


def test_commutator_of_generators() -> None:
    assert el_mul(HEISENBERG, HEISENBERG.b2, HEISENBERG.b1) == Element(1, 1, 1)
    assert el_comm(OPEN_CASE, OPEN_CASE.b2, OPEN_CASE.b1) == OPEN_CASE.a


def test_conjugation_of_a() -> None:
    ctx = OPEN_CASE
    assert el_conj(ctx, ctx.a, ctx.b2) == Element(0, 0, 4)
    assert el_conj(ctx, ctx.a, ctx.b1) == ctx.a


def test_power_relations() -> None:
    for ctx in (OPEN_CASE, BOTH_POSITIVE):
        assert el_pow(ctx, ctx.b1, ctx.q1) == Element(0, 0, ctx.w1)
        assert el_pow(ctx, ctx.b2, ctx.q2) == Element(0, 0, ctx.w2)
        assert el_pow(ctx, ctx.a, ctx.pm) == IDENTITY


def test_normalize_carries() -> None:
    ctx = OPEN_CASE
    assert normalize(ctx, ctx.q1, 0, 0) == Element(0, 0, ctx.w1)
    assert normalize(ctx, -1, 0, 0) == el_inv(ctx, ctx.b1)
    assert normalize(ctx, 2, 3, 4) == Element(2, 3, 4)


def test_orders() -> None:
    assert el_order(OPEN_CASE, OPEN_CASE.b1) == 81
    assert el_order(OPEN_CASE, OPEN_CASE.a) == 9
    assert el_order(HEISENBERG, IDENTITY) == 1
    assert all(
        el_order(HEISENBERG, g) == 3
        for g in enumerate_elements(HEISENBERG)
        if g != IDENTITY
    )


def test_r_and_o() -> None:
    ctx = OPEN_CASE
    assert r_of(ctx, ctx.b2) == Residue(4, 9)
    assert o_of(ctx, ctx.b2) == 1
    assert o_of(ctx, ctx.b1) == 0


def test_negative_powers() -> None:
    ctx = BOTH_POSITIVE
    g = Element(5, 2, 7)
    assert el_mul(ctx, el_pow(ctx, g, -3), el_pow(ctx, g, 3)) == IDENTITY


def test_elements_out_of_range() -> None:
    with pytest.raises(ContextMismatchError):
        el_mul(HEISENBERG, Element(3, 0, 0), HEISENBERG.b1)
    with pytest.raises(ContextMismatchError):
        el_inv(OPEN_CASE, Element(0, 0, -1))


def test_enumeration_respects_cap() -> None:
    assert len(list(enumerate_elements(HEISENBERG))) == 27
    assert next(iter(enumerate_elements(HEISENBERG))) == IDENTITY
    with pytest.raises(CapExceededError):
        list(enumerate_elements(OPEN_CASE, cap=729))


def test_raw_presentation_checks() -> None:
    with pytest.raises(PresentationError):
        make_raw_group(3, 2, 2, 2, 2, 1, 0, 0)
    with pytest.raises(PresentationError):
        make_raw_group(3, 2, 1, 1, 4, 1, 0, 0)
    raw = make_raw_group(3, 1, 1, 1, 1, 1, 1, 1)
    assert raw.order == 27


@settings(max_examples=300)
@given(st.data())
def test_group_axioms(data: st.DataObject) -> None:
    for ctx in (HEISENBERG, OPEN_CASE, BOTH_POSITIVE):
        g, h, k = (data.draw(elements(ctx)) for _ in range(3))
        assert el_mul(ctx, el_mul(ctx, g, h), k) == el_mul(ctx, g, el_mul(ctx, h, k))
        assert el_mul(ctx, g, el_inv(ctx, g)) == IDENTITY
        assert el_mul(ctx, el_inv(ctx, g), g) == IDENTITY
        assert el_mul(ctx, g, IDENTITY) == g


@settings(max_examples=100)
@given(st.data())
def test_commutators_lie_in_a(data: st.DataObject) -> None:
    ctx = BOTH_POSITIVE
    g, h = data.draw(elements(ctx)), data.draw(elements(ctx))
    c = el_comm(ctx, g, h)
    assert (c.x, c.y) == (0, 0)
    inverses = el_mul(ctx, el_inv(ctx, g), el_inv(ctx, h))
    assert el_mul(ctx, inverses, el_mul(ctx, g, h)) == c
