import logging
import math
from collections import deque
from functools import lru_cache
from typing import Iterable

from app.core.classes.arith import vp_capped
from app.core.classes.errors import (
    NonAbelianQuotientError,
    NotNormalError,
    QuotientError,
)
from app.core.classes.presentation import (
    DEFAULT_GROUP_CAP,
    comm,
    conj,
    mul,
    order_log,
    power,
    check_cap,
    derive_params,
    enumerate_elements,
    make_raw_group,
    normalize,
)
from app.core.Interfaces.group_interface import IDENTITY, Element, GroupCtx
from app.core.Interfaces.params_interface import ParamVector
from app.core.Interfaces.subgroup_interface import SubgroupSet

logger = logging.getLogger(__name__)


def _closure(ctx: GroupCtx, gens: list[Element]) -> frozenset[Element]:
    seen = {IDENTITY}
    queue = deque([IDENTITY])
    while queue:
        current = queue.popleft()
        for g in gens:
            product = mul(ctx, current, g)
            if product not in seen:
                seen.add(product)
                queue.append(product)
    return frozenset(seen)


def gen_subgroup(
    ctx: GroupCtx, gens: Iterable[Element], cap: int = DEFAULT_GROUP_CAP
) -> SubgroupSet:
    check_cap(ctx, cap)
    kept: list[Element] = []
    elements: frozenset[Element] = frozenset({IDENTITY})
    for g in gens:
        if g not in elements:
            kept.append(g)
            elements = _closure(ctx, kept)
    return SubgroupSet(ctx, elements, tuple(kept))


def subgroup_from_set(ctx: GroupCtx, elements: Iterable[Element]) -> SubgroupSet:
    """Wraps a set known to be a subgroup, attaching a small generating set."""
    members = frozenset(elements)
    generated = gen_subgroup(ctx, sorted(members), cap=ctx.order)
    if generated.elements != members:
        raise ValueError("element set is not closed under multiplication")
    return generated


def whole_group(ctx: GroupCtx, cap: int = DEFAULT_GROUP_CAP) -> SubgroupSet:
    return SubgroupSet(
        ctx, frozenset(enumerate_elements(ctx, cap)), (ctx.b1, ctx.b2)
    )


def trivial_subgroup(ctx: GroupCtx) -> SubgroupSet:
    return SubgroupSet(ctx, frozenset({IDENTITY}))


def commutator_subgroup_gen(ctx: GroupCtx) -> SubgroupSet:
    return gen_subgroup(ctx, [ctx.a], cap=ctx.order)


@lru_cache(maxsize=16)
def order_logs(ctx: GroupCtx, cap: int = DEFAULT_GROUP_CAP) -> dict[Element, int]:
    """log_p |g| for every element g."""
    return {g: order_log(ctx, g) for g in enumerate_elements(ctx, cap)}


def exponent_log(S: SubgroupSet) -> int:
    logs = order_logs(S.ctx, S.ctx.order)
    return max(logs[g] for g in S.elements)


def _generators(S: SubgroupSet) -> tuple[Element, ...]:
    if S.generators or len(S) == 1:
        return S.generators
    return tuple(sorted(S.elements))


def is_normal(S: SubgroupSet, N: SubgroupSet) -> bool:
    ctx = S.ctx
    return N.issubset(S) and all(
        conj(ctx, n, s) in N for n in _generators(N) for s in _generators(S)
    )


def normal_closure(S: SubgroupSet, gens: Iterable[Element]) -> SubgroupSet:
    ctx = S.ctx
    H = gen_subgroup(ctx, gens, cap=ctx.order)
    while True:
        conjugates = (conj(ctx, h, s) for h in H.generators for s in _generators(S))
        missing = [c for c in conjugates if c not in H]
        if not missing:
            return H
        H = gen_subgroup(ctx, list(H.generators) + missing, cap=ctx.order)


def commutator_subgroup(S: SubgroupSet, A: SubgroupSet, B: SubgroupSet) -> SubgroupSet:
    """[A, B] for A, B normal in S."""
    ctx = S.ctx
    return normal_closure(
        S, [comm(ctx, x, y) for x in A.generators for y in B.generators]
    )


def derived_subgroup(S: SubgroupSet) -> SubgroupSet:
    return commutator_subgroup(S, S, S)


@lru_cache(maxsize=64)
def lower_central_series(S: SubgroupSet) -> tuple[SubgroupSet, ...]:
    """gamma_1(S) = S, gamma_2(S), ... ending with the trivial subgroup."""
    series = [S]
    while len(series[-1]) > 1:
        following = commutator_subgroup(S, series[-1], S)
        if following.elements == series[-1].elements:
            raise ValueError("lower central series does not reach 1")
        series.append(following)
    return tuple(series)


def lower_central(ctx: GroupCtx, i: int, cap: int = DEFAULT_GROUP_CAP) -> SubgroupSet:
    if i < 1:
        raise ValueError(f"lower central index must be >= 1, got {i}")
    series = lower_central_series(whole_group(ctx, cap))
    return series[i - 1] if i <= len(series) else series[-1]


def nilpotency_class(S: SubgroupSet) -> int:
    return len(lower_central_series(S)) - 1


def lower_central_closed(ctx: GroupCtx, i: int) -> list[Element]:
    origin = _canonical(ctx)
    if i == 1:
        return [ctx.b1, ctx.b2]
    t = ctx.m - max(origin.o1, origin.o2)
    return [normalize(ctx, 0, 0, ctx.p ** min((i - 2) * t, ctx.m))]


def nilpotency_class_closed(ctx: GroupCtx) -> int:
    origin = _canonical(ctx)
    t = ctx.m - max(origin.o1, origin.o2)
    return 1 + math.ceil(ctx.m / t)


def _canonical(ctx: GroupCtx) -> ParamVector:
    if ctx.origin is None:
        raise ValueError("closed forms need a canonical group")
    return ctx.origin


def center_bf(ctx: GroupCtx, cap: int = DEFAULT_GROUP_CAP) -> SubgroupSet:
    b1, b2 = ctx.b1, ctx.b2
    members = [
        g
        for g in enumerate_elements(ctx, cap)
        if mul(ctx, g, b1) == mul(ctx, b1, g) and mul(ctx, g, b2) == mul(ctx, b2, g)
    ]
    return subgroup_from_set(ctx, members)


def center_closed(ctx: GroupCtx) -> list[Element]:
    origin = _canonical(ctx)
    p, m = ctx.p, ctx.m
    first = normalize(ctx, p**m, 0, 0)
    second = normalize(ctx, 0, p**m, 0)
    if origin.o1 == 0:
        third = normalize(ctx, p ** (m - origin.o2), 0, 1)
    else:
        delta1 = derive_params(origin).delta1
        third = normalize(
            ctx, -delta1 * p ** (m - origin.o2), delta1 * p ** (m - origin.o1), 1
        )
    return [first, second, third]


def center_meet_commutator_closed(ctx: GroupCtx) -> list[Element]:
    origin = _canonical(ctx)
    return [normalize(ctx, 0, 0, ctx.p ** max(origin.o1, origin.o2))]


def centralizer_comm_bf(ctx: GroupCtx, cap: int = DEFAULT_GROUP_CAP) -> SubgroupSet:
    a = ctx.a
    members = [g for g in enumerate_elements(ctx, cap) if comm(ctx, a, g) == IDENTITY]
    return subgroup_from_set(ctx, members)


def centralizer_comm_closed(ctx: GroupCtx) -> list[Element]:
    origin = _canonical(ctx)
    p = ctx.p
    if origin.o1 == 0:
        return [ctx.a, ctx.b1, normalize(ctx, 0, p**origin.o2, 0)]
    return [
        ctx.a,
        normalize(ctx, p**origin.o1, 0, 0),
        normalize(ctx, p ** (origin.o1 - origin.o2), -1, 0),
    ]


def exponent_closed(ctx: GroupCtx) -> int:
    origin = _canonical(ctx)
    return max(origin.n1 + origin.o1p, origin.n2 + origin.o2p)


def centralizer_exponent_closed(ctx: GroupCtx) -> int | None:
    """log_p exp(C_G(G')) when o1 = 0 or o2 = 0, else None."""
    origin = _canonical(ctx)
    if origin.o1 == 0:
        return origin.n1 + origin.o1p
    if origin.o2 == 0:
        return max(origin.n1 + origin.o1p - origin.o1, origin.n2 + origin.o2p)
    return None


def _power_set(S: SubgroupSet, n: int) -> dict[Element, Element]:
    ctx = S.ctx
    q = ctx.p**n
    return {g: power(ctx, g, q) for g in S.elements}


def omega_set(S: SubgroupSet, n: int) -> frozenset[Element]:
    logs = order_logs(S.ctx, S.ctx.order)
    return frozenset(g for g in S.elements if logs[g] <= n)


def mho_set(S: SubgroupSet, n: int) -> frozenset[Element]:
    return frozenset(_power_set(S, n).values())


def omega(S: SubgroupSet, n: int) -> SubgroupSet:
    return gen_subgroup(S.ctx, sorted(omega_set(S, n)), cap=S.ctx.order)


@lru_cache(maxsize=256)
def mho(S: SubgroupSet, n: int) -> SubgroupSet:
    return gen_subgroup(S.ctx, sorted(mho_set(S, n)), cap=S.ctx.order)


def omega_rel_set(S: SubgroupSet, N: SubgroupSet, n: int) -> frozenset[Element]:
    return frozenset(g for g, image in _power_set(S, n).items() if image in N)


def omega_rel(
    ctx: GroupCtx, N: SubgroupSet, n: int, cap: int = DEFAULT_GROUP_CAP
) -> SubgroupSet:
    G = whole_group(ctx, cap)
    if not is_normal(G, N):
        raise NotNormalError("omega_rel needs a normal subgroup")
    return gen_subgroup(ctx, sorted(omega_rel_set(G, N, n)), cap=cap)


def product_subgroup(ctx: GroupCtx, parts: Iterable[SubgroupSet]) -> SubgroupSet:
    """Product of normal subgroups."""
    gens = [g for part in parts for g in part.generators]
    return gen_subgroup(ctx, gens, cap=ctx.order)


@lru_cache(maxsize=64)
def jennings_series(S: SubgroupSet) -> tuple[SubgroupSet, ...]:
    """D_1(S), D_2(S), ... ending with the trivial subgroup."""
    ctx = S.ctx
    p = ctx.p
    gammas = lower_central_series(S)[:-1]
    series = [S]
    n = 1
    while len(series[-1]) > 1:
        n += 1
        parts = []
        for i, gamma in enumerate(gammas, start=1):
            j = 0
            while i * p**j < n:
                j += 1
            parts.append(mho(gamma, j))
        series.append(product_subgroup(ctx, parts))
    return tuple(series)


def jennings(ctx: GroupCtx, n: int, cap: int = DEFAULT_GROUP_CAP) -> SubgroupSet:
    if n < 1:
        raise ValueError(f"Jennings index must be >= 1, got {n}")
    series = jennings_series(whole_group(ctx, cap))
    return series[n - 1] if n <= len(series) else series[-1]


def jennings_orders(S: SubgroupSet) -> list[int]:
    """|D_n(S)/D_(n+1)(S)| for n = 1, 2, ... while D_n(S) is non-trivial."""
    series = jennings_series(S)
    return [
        len(series[k]) // len(series[k + 1]) for k in range(len(series) - 1)
    ]


def socle_quotient(ctx: GroupCtx) -> GroupCtx:
    """G / <a^(p^(m-1))> as a raw presentation with m - 1."""
    if ctx.m < 2:
        raise QuotientError("the socle quotient needs m >= 2")
    return make_raw_group(
        ctx.p, ctx.m - 1, ctx.n1, ctx.n2, ctx.r1, ctx.r2, ctx.w1, ctx.w2
    )


def quotient_map(quotient: GroupCtx, g: Element) -> Element:
    return Element(g.x, g.y, g.z % quotient.pm)


def abelian_invariants(S: SubgroupSet, N: SubgroupSet) -> list[int]:
    ctx = S.ctx
    if not is_normal(S, N):
        raise NotNormalError("abelian_invariants needs N normal in S")
    gens = _generators(S)
    if any(comm(ctx, x, y) not in N for x in gens for y in gens):
        raise NonAbelianQuotientError("S/N is not abelian")

    p = ctx.p
    index = len(S) // len(N)
    powers = {g: g for g in S.elements}
    omega_logs = [0]
    while p ** omega_logs[-1] < index:
        powers = {g: power(ctx, h, p) for g, h in powers.items()}
        count = sum(1 for h in powers.values() if h in N) // len(N)
        omega_logs.append(vp_capped(count, p, ctx.log_order))
    # omega_logs[k] = log_p |Omega_k(S/N)|, so its differences count
    # the cyclic factors of order at least p^k.
    at_least = [omega_logs[k] - omega_logs[k - 1] for k in range(1, len(omega_logs))]
    invariants: list[int] = []
    for k in range(len(at_least), 0, -1):
        exactly = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        invariants.extend([p**k] * exactly)
    return invariants
