import logging
import random
from typing import Callable, Iterable

from app.core.classes.arith import double_sum, geom_sum
from app.core.classes.presentation import (
    DEFAULT_GROUP_CAP,
    check_cap,
    comm,
    enumerate_elements,
    mul,
    normalize,
    power,
    r_of,
)
from app.core.Interfaces.group_interface import Element, GroupCtx
from app.core.Interfaces.oracle_interface import ClosedFormReport, IdentityCheck

logger = logging.getLogger(__name__)

# Groups up to this order are checked on every element.
EXHAUSTIVE_LIMIT = 3**6

DEFAULT_SAMPLES = 10_000


def _a(ctx: GroupCtx, k: int) -> Element:
    return Element(0, 0, k % ctx.pm)


def _exp_law(ctx: GroupCtx, g: Element, e: int) -> tuple[Element, Element]:
    x, y, z = g
    n = ctx.p**e
    pm = ctx.pm
    pow1, pow2, sum1, sum2 = ctx.tables
    r1x, r2y = pow1[x], pow2[y]
    exponent = (
        sum1[x] * sum2[y] * double_sum(r1x, r2y, n, pm).value
        + z * geom_sum(r1x * r2y, n, pm).value
    )
    return power(ctx, g, n), normalize(ctx, x * n, y * n, exponent)


def _comm_a(ctx: GroupCtx, g: Element, e: int) -> tuple[Element, Element]:
    r = r_of(ctx, g).value
    return comm(ctx, _a(ctx, e), g), _a(ctx, e * (r - 1))


def _comm_b1(ctx: GroupCtx, g: Element) -> tuple[Element, Element]:
    _, _, _, sum2 = ctx.tables
    return comm(ctx, g, ctx.b1), _a(ctx, sum2[g.y] + g.z * (ctx.r1 - 1))


def _comm_b2(ctx: GroupCtx, g: Element) -> tuple[Element, Element]:
    _, pow2, sum1, _ = ctx.tables
    expected = -sum1[g.x] * pow2[g.y] + g.z * (ctx.r2 - 1)
    return comm(ctx, g, ctx.b2), _a(ctx, expected)


def _conj_power(
    ctx: GroupCtx, h: Element, k: int, n: int
) -> tuple[Element, Element]:
    # a^k is conjugated by h into (a^k)^r
    r = r_of(ctx, h).value
    lhs = power(ctx, mul(ctx, h, _a(ctx, k)), n)
    rhs = mul(ctx, power(ctx, h, n), _a(ctx, k * geom_sum(r, n, ctx.pm).value))
    return lhs, rhs


def _double_conj(
    ctx: GroupCtx, g: Element, h: Element, n: int
) -> tuple[Element, Element]:
    c = comm(ctx, h, g)
    r, s = r_of(ctx, g).value, r_of(ctx, h).value
    lhs = power(ctx, mul(ctx, g, h), n)
    rhs = mul(ctx, power(ctx, g, n), power(ctx, h, n))
    rhs = mul(ctx, rhs, power(ctx, c, double_sum(r, s, n, ctx.pm).value))
    return lhs, rhs


def _run(
    name: str,
    cases: Iterable[tuple],
    law: Callable[..., tuple[Element, Element]],
) -> IdentityCheck:
    check = IdentityCheck(name)
    for case in cases:
        lhs, rhs = law(*case)
        check.checked += 1
        if lhs != rhs:
            check.counterexample = f"{case[1:]}: {tuple(lhs)} != {tuple(rhs)}"
            logger.info("%s fails at %s", name, check.counterexample)
            break
    return check


def verify_closed_forms(
    ctx: GroupCtx,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    cap: int = DEFAULT_GROUP_CAP,
) -> ClosedFormReport:
    """
    Compares the closed power and commutator formulas with the
    multiplication law, on every element of small groups and on a seeded
    sample otherwise.
    """
    check_cap(ctx, cap)
    exhaustive = ctx.order <= EXHAUSTIVE_LIMIT
    rng = random.Random(seed)

    def element() -> Element:
        return Element(
            rng.randrange(ctx.q1), rng.randrange(ctx.q2), rng.randrange(ctx.pm)
        )

    if exhaustive:
        elements = list(enumerate_elements(ctx, cap))
    else:
        elements = [element() for _ in range(samples)]
    pairs = [(element(), element()) for _ in range(min(samples, len(elements)))]
    top = ctx.m + ctx.n1 + 1

    report = ClosedFormReport(exhaustive=exhaustive)
    report.checks = [
        _run(
            "power",
            ((ctx, g, e) for g in elements for e in range(top)),
            _exp_law,
        ),
        _run(
            "commutator with a",
            ((ctx, g, rng.randrange(ctx.pm)) for g in elements),
            _comm_a,
        ),
        _run("commutator with b1", ((ctx, g) for g in elements), _comm_b1),
        _run("commutator with b2", ((ctx, g) for g in elements), _comm_b2),
        _run(
            "power of h a^k",
            ((ctx, h, g.z, rng.randrange(ctx.pm * ctx.q1)) for h, g in pairs),
            _conj_power,
        ),
        _run(
            "power of a product",
            ((ctx, g, h, rng.randrange(ctx.pm * ctx.q1)) for g, h in pairs),
            _double_conj,
        ),
    ]
    return report
