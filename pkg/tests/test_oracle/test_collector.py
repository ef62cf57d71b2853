import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import app.core.classes.collector as collector_module
from app.core.classes.collector import (
    Strategy,
    collect,
    evaluate,
    exponent_bound,
    random_word,
    word_of,
)
from app.core.classes.enumeration import enumerate_vectors
from app.core.classes.errors import CapExceededError
from app.core.classes.presentation import enumerate_elements, make_group, mul
from app.core.classes.subgroups import socle_quotient
from app.core.Interfaces.group_interface import IDENTITY, Element
from app.core.Interfaces.params_interface import ParamVector
from app.core.Interfaces.word_interface import Generator, Letter

B1, B2, A = Generator.B1, Generator.B2, Generator.A

HEISENBERG = make_group(ParamVector(3, 1, 1, 1, 0, 0, 0, 0, 1, 1))
EXPONENT_NINE = make_group(ParamVector(3, 1, 1, 1, 0, 0, 1, 1, 1, 1))
OPEN_CASE = make_group(ParamVector(3, 2, 3, 2, 0, 1, 1, 1, 1, 1))
BOTH_POSITIVE = make_group(ParamVector(3, 3, 4, 2, 2, 1, 1, 2, 1, 1))

STRATEGIES: tuple[Strategy, ...] = ("stack", "left", "right")


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_single_rewrites(strategy: Strategy) -> None:
    assert collect(HEISENBERG, [Letter(B2, 1), Letter(B1, 1)], strategy) == Element(
        1, 1, 1
    )
    ctx = OPEN_CASE
    assert collect(ctx, [Letter(A, 1), Letter(B1, 1)], strategy) == Element(
        1, 0, ctx.r1
    )
    assert collect(ctx, [Letter(A, 1), Letter(B2, 1)], strategy) == Element(
        0, 1, ctx.r2
    )


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_power_reductions(strategy: Strategy) -> None:
    ctx = BOTH_POSITIVE
    assert collect(ctx, [Letter(B1, ctx.q1)], strategy) == Element(0, 0, ctx.w1)
    assert collect(ctx, [Letter(A, ctx.pm + 2)], strategy) == Element(0, 0, 2)
    assert collect(ctx, [Letter(B1, -1), Letter(B1, 1)], strategy) == IDENTITY
    assert collect(ctx, [Letter(B2, 1), Letter(B2, -1)], strategy) == IDENTITY
    assert collect(ctx, [], strategy) == IDENTITY


def test_word_cap() -> None:
    word = [Letter(A, 1)] * 65
    with pytest.raises(CapExceededError):
        collect(HEISENBERG, word)
    assert collect(HEISENBERG, word, word_cap=65) == Element(0, 0, 65 % 3)


def test_unknown_strategy() -> None:
    with pytest.raises(ValueError):
        collect(HEISENBERG, [], "middle")  # type: ignore[arg-type]


def test_all_pairs_of_small_groups() -> None:
    for vector in enumerate_vectors(3, 3**4):
        ctx = make_group(vector)
        elements = list(enumerate_elements(ctx))
        for g in elements:
            for h in elements:
                word = word_of(ctx, g) + word_of(ctx, h)
                assert collect(ctx, word) == mul(ctx, g, h)


def test_seeded_pairs_of_larger_groups() -> None:
    rng = random.Random(0)
    for ctx in (OPEN_CASE, BOTH_POSITIVE):
        for _ in range(300):
            g = Element(
                rng.randrange(ctx.q1), rng.randrange(ctx.q2), rng.randrange(ctx.pm)
            )
            h = Element(
                rng.randrange(ctx.q1), rng.randrange(ctx.q2), rng.randrange(ctx.pm)
            )
            assert collect(ctx, word_of(ctx, g) + word_of(ctx, h)) == mul(ctx, g, h)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**32), st.integers(1, 8))
def test_random_words_agree_with_folding(seed: int, length: int) -> None:
    rng = random.Random(seed)
    for ctx in (HEISENBERG, EXPONENT_NINE):
        word = random_word(rng, length, 2)
        expected = evaluate(ctx, word)
        for strategy in STRATEGIES:
            assert collect(ctx, word, strategy) == expected
    word = random_word(rng, length, 2)
    assert collect(OPEN_CASE, word) == evaluate(OPEN_CASE, word)


def test_exponent_bound() -> None:
    assert exponent_bound(HEISENBERG) == 3
    assert exponent_bound(EXPONENT_NINE) == 9
    assert exponent_bound(OPEN_CASE) == 81
    quotient = socle_quotient(OPEN_CASE)
    assert exponent_bound(quotient) % 27 == 0


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_exponents_beyond_the_group_exponent(strategy: Strategy) -> None:
    assert collect(HEISENBERG, [Letter(A, 3)], strategy) == IDENTITY
    assert collect(HEISENBERG, [Letter(B1, -3)], strategy) == IDENTITY
    with pytest.raises(CapExceededError):
        collect(HEISENBERG, [Letter(A, 4)], strategy)
    with pytest.raises(CapExceededError):
        collect(HEISENBERG, [Letter(B1, -4)], strategy)
    with pytest.raises(CapExceededError):
        collect(OPEN_CASE, [Letter(B2, 10**9)], strategy)


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_runaway_collection(
    monkeypatch: pytest.MonkeyPatch, strategy: Strategy
) -> None:
    monkeypatch.setattr(collector_module, "STEP_LIMIT", 2)
    with pytest.raises(CapExceededError):
        collect(HEISENBERG, [Letter(B2, 2), Letter(B1, 2)], strategy)
