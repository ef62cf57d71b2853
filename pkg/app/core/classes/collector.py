"""
Collection of words in b1, b2, a by rewriting with the defining relations.

collect never goes through the closed multiplication law in presentation, so
it is an independent check of it; evaluate is that law folded over a word.
"""

import logging
from random import Random
from typing import Literal

from app.core.classes.errors import CapExceededError
from app.core.classes.presentation import check_element, mul, power
from app.core.classes.subgroups import exponent_closed
from app.core.Interfaces.group_interface import IDENTITY, Element, GroupCtx
from app.core.Interfaces.word_interface import Generator, Letter, Word

logger = logging.getLogger(__name__)

DEFAULT_WORD_CAP = 64
# Rewriting steps after which a collection is treated as runaway.
STEP_LIMIT = 10**6

# "stack" collects from the left against an already collected prefix; "left"
# and "right" rewrite the leftmost or rightmost out-of-order pair of syllables.
Strategy = Literal["stack", "left", "right"]

B1, B2, A = Generator.B1, Generator.B2, Generator.A


def word_of(ctx: GroupCtx, g: Element) -> Word:
    check_element(ctx, g)
    return [Letter(B1, g.x), Letter(B2, g.y), Letter(A, g.z)]


def evaluate(ctx: GroupCtx, word: Word) -> Element:
    """Value of a word through the closed multiplication law."""
    bases = {B1: ctx.b1, B2: ctx.b2, A: ctx.a}
    result = IDENTITY
    for gen, exp in word:
        result = mul(ctx, result, power(ctx, bases[gen], exp))
    return result


def exponent_bound(ctx: GroupCtx) -> int:
    """The group exponent, or a multiple of it for raw presentations."""
    if ctx.canonical:
        return int(ctx.p ** exponent_closed(ctx))
    return max(ctx.q1, ctx.q2) * ctx.pm


def _check_steps(steps: int) -> None:
    if steps > STEP_LIMIT:
        raise CapExceededError(f"collection still running after {STEP_LIMIT} steps")


def _expand(ctx: GroupCtx, word: Word) -> list[list[int]]:
    # Syllables are [rank, exponent] with exponent >= 0.
    syllables: list[list[int]] = []
    for gen, exp in word:
        if exp >= 0:
            syllables.append([gen.rank, exp])
            continue
        for _ in range(-exp):
            if gen is B1:
                syllables += [[0, ctx.q1 - 1], [2, -ctx.w1 % ctx.pm]]
            elif gen is B2:
                syllables += [[1, ctx.q2 - 1], [2, -ctx.w2 % ctx.pm]]
            else:
                syllables.append([2, ctx.pm - 1])
    return syllables


def _tidy(ctx: GroupCtx, syllables: list[list[int]]) -> list[list[int]]:
    changed = True
    while changed:
        changed = False
        out: list[list[int]] = []
        for rank, exp in syllables:
            if rank == 2:
                exp %= ctx.pm
            if exp == 0:
                changed = True
                continue
            if out and out[-1][0] == rank:
                out[-1][1] += exp
                changed = True
                continue
            out.append([rank, exp])
        syllables = []
        for rank, exp in out:
            limit = (ctx.q1, ctx.q2)[rank] if rank < 2 else None
            if limit is not None and exp >= limit:
                # b_i^(p^n_i) = a^w_i
                w = ctx.w1 if rank == 0 else ctx.w2
                syllables += [[rank, exp - limit], [2, w]]
                changed = True
            else:
                syllables.append([rank, exp])
    return syllables


def _rewrite(ctx: GroupCtx, syllables: list[list[int]], i: int) -> None:
    (left, e), (right, f) = syllables[i], syllables[i + 1]
    if left == 1 and right == 0:
        # b2 b1 = b1 b2 a
        syllables[i : i + 2] = [[1, e - 1], [0, 1], [1, 1], [2, 1], [0, f - 1]]
    else:
        # a^e b_i = b_i a^(e r_i)
        r = ctx.r1 if right == 0 else ctx.r2
        syllables[i : i + 2] = [[right, 1], [2, e * r % ctx.pm], [right, f - 1]]


def _collect_stack(ctx: GroupCtx, syllables: list[list[int]]) -> tuple[Element, int]:
    x = y = z = 0
    pm = ctx.pm
    todo = syllables[::-1]
    steps = 0
    while todo:
        rank, exp = todo.pop()
        if exp == 0:
            continue
        steps += 1
        _check_steps(steps)
        if rank == 2:
            z = (z + exp) % pm
            continue
        if exp > 1:
            todo.append([rank, exp - 1])
        if rank == 1:
            # a^z b2 = b2 a^(z r2)
            z = z * ctx.r2 % pm
            y += 1
            if y == ctx.q2:
                y, z = 0, (z + ctx.w2) % pm
            continue
        # b2^y a^z b1 = b1 (b2 a)^y a^(z r1)
        todo.append([2, z * ctx.r1 % pm])
        todo.extend([[2, 1], [1, 1]] * y)
        x, y, z = x + 1, 0, 0
        if x == ctx.q1:
            x, z = 0, ctx.w1
    return Element(x, y, z), steps


def _collect_sweep(
    ctx: GroupCtx, syllables: list[list[int]], strategy: Strategy
) -> tuple[Element, int]:
    steps = 0
    while True:
        syllables = _tidy(ctx, syllables)
        positions = range(len(syllables) - 1)
        if strategy == "right":
            positions = range(len(syllables) - 2, -1, -1)
        i = next(
            (j for j in positions if syllables[j][0] > syllables[j + 1][0]), None
        )
        if i is None:
            break
        _rewrite(ctx, syllables, i)
        steps += 1
        _check_steps(steps)
    exps = [0, 0, 0]
    for rank, exp in syllables:
        exps[rank] = exp
    return Element(*exps), steps


def collect(
    ctx: GroupCtx,
    word: Word,
    strategy: Strategy = "stack",
    word_cap: int = DEFAULT_WORD_CAP,
) -> Element:
    """Normal form of a word, found by applying single relator steps."""
    if len(word) > word_cap:
        raise CapExceededError(f"word of length {len(word)} exceeds cap {word_cap}")
    bound = exponent_bound(ctx)
    if any(abs(exp) > bound for _, exp in word):
        raise CapExceededError(f"exponent beyond the group exponent {bound}")
    syllables = _expand(ctx, word)
    if strategy == "stack":
        result, steps = _collect_stack(ctx, syllables)
    elif strategy in ("left", "right"):
        result, steps = _collect_sweep(ctx, syllables, strategy)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    logger.debug("collected %d letters in %d steps", len(word), steps)
    return result


def random_word(rng: Random, length: int, max_exp: int) -> Word:
    """Word of the given length with exponents in [-max_exp, max_exp]."""
    gens = list(Generator)
    return [
        Letter(rng.choice(gens), rng.randint(-max_exp, max_exp))
        for _ in range(length)
    ]
