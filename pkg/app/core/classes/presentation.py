import logging
from typing import Iterator

from sympy import isprime

from app.core.classes.arith import geom_sum, geom_sum_invert, vp_capped
from app.core.classes.errors import (
    CapExceededError,
    ContextMismatchError,
    InvalidParamsError,
    PresentationError,
)
from app.core.Interfaces.arith_interface import Residue
from app.core.Interfaces.group_interface import IDENTITY, Element, GroupCtx
from app.core.Interfaces.params_interface import (
    DerivedParams,
    ParamPrefix,
    ParamVector,
    ValidityReport,
)

logger = logging.getLogger(__name__)

DEFAULT_GROUP_CAP = 3**8


def a1_exponent(v: ParamPrefix | ParamVector) -> int:
    return min(v.o1p, v.o2 + min(v.n1 - v.n2 + v.o1p - v.o2p, 0))


def a2_exponent(v: ParamPrefix | ParamVector) -> int:
    if v.o1 == 0:
        return 0
    if v.o2 == 0:
        return min(v.o1, v.o2p, v.o2p - v.o1p + max(0, v.o1 + v.n2 - v.n1))
    return min(v.o1 - v.o2, v.o2p - v.o1p)


def _within(u: int, low: int, p: int, a: int, factor: int = 1) -> bool:
    return a >= 0 and low <= u <= factor * p**a


def validate_params(vector: ParamVector) -> ValidityReport:
    p, m, n1, n2, o1, o2, o1p, o2p, u1, u2 = vector.as_tuple()
    if p < 3 or not isprime(p):
        return ValidityReport(vector, False, ["1"])

    violated: list[str] = []
    if not (m >= 1 and n1 >= n2 >= 1):
        violated.append("1")
    if not (
        0 <= o1 < m
        and 0 <= o2 < m
        and 0 <= o1p <= m - o1
        and 0 <= o2p <= m - o2
        and u1 % p != 0
        and u2 % p != 0
    ):
        violated.append("2")

    shape = {
        "4a": o1 == 0 and o1p <= o2p <= o1p + o2 + n1 - n2,
        "4b": o2 == 0 < o1
        and n2 < n1
        and o1p + min(0, n1 - n2 - o1) <= o2p <= o1p + n1 - n2,
        "4c": 0 < o2 < o1 < o2 + n1 - n2 and o1p <= o2p <= o1p + n1 - n2,
    }
    if not any(shape.values()):
        violated.extend(shape)

    if not (o2 + o1p <= m <= n1):
        violated.append("5")
    bounds = {
        "5a": o1 + o2p <= m <= n2,
        "5b": 2 * m - o1 - o2p == n2 < m and (u2 - 1) % p ** max(m - n2, 0) == 0,
    }
    if not any(bounds.values()):
        violated.extend(bounds)

    a1 = a1_exponent(vector)
    a2 = a2_exponent(vector)
    if not _within(u1, 1, p, a1):
        violated.append("7")
    units = {
        "8a": _within(u2, 1, p, a2),
        "8b": o1 * o2 != 0
        and n1 - n2 + o1p - o2p == 0 < a1
        and a2 >= 0
        and 1 + p**a2 <= u2 <= 2 * p**a2
        and u1 % p == 1,
    }
    if not any(units.values()):
        violated.extend(units)

    return ValidityReport(vector, not violated, violated)


def erres(p: int, m: int, o1: int, o2: int) -> tuple[int, int]:
    """(r1, r2) in [0, p^m) attached to (o1, o2)."""
    pm = p**m
    r1 = (1 + p ** (m - o1)) % pm
    if o2 > o1:
        r2 = (1 + p ** (m - o2)) % pm
    else:
        r2 = pow(r1, p ** (o1 - o2), pm)
    return r1, r2


def _require_valid(vector: ParamVector) -> None:
    report = validate_params(vector)
    if not report.valid:
        raise InvalidParamsError(
            f"{vector.key()} violates {', '.join(report.violated)}"
        )


def derive_params(vector: ParamVector) -> DerivedParams:
    _require_valid(vector)
    p, m = vector.p, vector.m
    pm = p**m
    r1, r2 = erres(p, m, vector.o1, vector.o2)
    if vector.o1 == 0:
        delta1 = delta2 = 1
    else:
        step1 = p ** (m - vector.o1)
        y1 = geom_sum_invert(r2, Residue(1 - r1, pm))
        delta1 = y1 // step1 or p**vector.o1
        rhs = (r2 - 1) * pow(pow(r2, delta1 * step1, pm), -1, pm)
        step2 = p ** (m - vector.o2)
        y2 = geom_sum_invert(r1, Residue(rhs, pm))
        delta2 = y2 // step2 or p**vector.o2
    return DerivedParams(
        r1=r1,
        r2=r2,
        a1=a1_exponent(vector),
        a2=a2_exponent(vector),
        t=m - max(vector.o1, vector.o2),
        delta1=delta1,
        delta2=delta2,
        order=p**vector.log_order,
        s_shift=vector.n1
        + vector.o1p
        - vector.n2
        - vector.o2p
        - vector.o1
        + vector.o2,
    )


def is_metacyclic(vector: ParamVector | ParamPrefix) -> bool:
    return max(vector.o1p, vector.o2p) == vector.m


def make_group(vector: ParamVector) -> GroupCtx:
    _require_valid(vector)
    p, m = vector.p, vector.m
    pm = p**m
    r1, r2 = erres(p, m, vector.o1, vector.o2)
    w1 = vector.u1 * p ** (m - vector.o1p) % pm
    w2 = vector.u2 * p ** (m - vector.o2p) % pm
    return GroupCtx(p, m, vector.n1, vector.n2, r1, r2, w1, w2, origin=vector)


def make_raw_group(
    p: int, m: int, n1: int, n2: int, r1: int, r2: int, w1: int, w2: int
) -> GroupCtx:
    if m < 1 or n1 < 1 or n2 < 1 or not isprime(p):
        raise PresentationError(f"bad shape p={p} m={m} n1={n1} n2={n2}")
    pm = p**m
    r1, r2, w1, w2 = r1 % pm, r2 % pm, w1 % pm, w2 % pm
    q1, q2 = p**n1, p**n2
    checks = {
        "r1 = 1 mod p": r1 % p == 1,
        "r2 = 1 mod p": r2 % p == 1,
        "r1^(p^n1) = 1": pow(r1, q1, pm) == 1,
        "r2^(p^n2) = 1": pow(r2, q2, pm) == 1,
        "w1 (r1 - 1) = 0": w1 * (r1 - 1) % pm == 0,
        "w2 (r2 - 1) = 0": w2 * (r2 - 1) % pm == 0,
        "b1^(p^n1) commutes with b2": (w1 * (r2 - 1) + geom_sum(r1, q1, pm).value)
        % pm
        == 0,
        "b2^(p^n2) commutes with b1": (w2 * (r1 - 1) - geom_sum(r2, q2, pm).value)
        % pm
        == 0,
    }
    failed = [name for name, holds in checks.items() if not holds]
    if failed:
        raise PresentationError("; ".join(failed))
    return GroupCtx(p, m, n1, n2, r1, r2, w1, w2)


def check_element(ctx: GroupCtx, g: Element) -> Element:
    if not (0 <= g[0] < ctx.q1 and 0 <= g[1] < ctx.q2 and 0 <= g[2] < ctx.pm):
        raise ContextMismatchError(f"{tuple(g)} is not a normal form of this group")
    return g


def normalize(ctx: GroupCtx, x: int, y: int, z: int) -> Element:
    """Normal form of b1^x b2^y a^z for arbitrary integers x, y, z."""
    pm = ctx.pm
    carry1, x = divmod(x, ctx.q1)
    carry2, y = divmod(y, ctx.q2)
    # b1^(q1 k) = a^(k w1) and the a-power then passes b2^y.
    z = (carry1 * ctx.w1 * ctx.tables[1][y] + carry2 * ctx.w2 + z) % pm
    return Element(x, y, z)


def mul(ctx: GroupCtx, g: Element, h: Element) -> Element:
    """Product of two normal forms, without range checks."""
    x, y, z = g
    u, v, w = h
    pow1, pow2, sum1, sum2 = ctx.tables
    pm = ctx.pm
    big_z = ((sum1[u] * sum2[y] + z * pow1[u]) * pow2[v] + w) % pm
    big_x = x + u
    big_y = y + v
    if big_y >= ctx.q2:
        big_y -= ctx.q2
        big_z += ctx.w2
    if big_x >= ctx.q1:
        big_x -= ctx.q1
        big_z += ctx.w1 * pow2[big_y]
    return Element(big_x, big_y, big_z % pm)


def el_mul(ctx: GroupCtx, g: Element, h: Element) -> Element:
    return mul(ctx, check_element(ctx, g), check_element(ctx, h))


def inv(ctx: GroupCtx, g: Element) -> Element:
    head = Element(-g.x % ctx.q1, -g.y % ctx.q2, 0)
    # g * b1^-x b2^-y lies in <a>
    k = mul(ctx, g, head)
    return mul(ctx, head, Element(0, 0, -k.z % ctx.pm))


def el_inv(ctx: GroupCtx, g: Element) -> Element:
    return inv(ctx, check_element(ctx, g))


def power(ctx: GroupCtx, g: Element, k: int) -> Element:
    if k < 0:
        g, k = inv(ctx, g), -k
    result = IDENTITY
    base = g
    while k:
        if k & 1:
            result = mul(ctx, result, base)
        k >>= 1
        if k:
            base = mul(ctx, base, base)
    return result


def el_pow(ctx: GroupCtx, g: Element, k: int) -> Element:
    return power(ctx, check_element(ctx, g), k)


def order_log(ctx: GroupCtx, g: Element) -> int:
    k = 0
    while g != IDENTITY:
        g = power(ctx, g, ctx.p)
        k += 1
    return k


def el_order(ctx: GroupCtx, g: Element) -> int:
    return int(ctx.p ** order_log(ctx, check_element(ctx, g)))


def conj(ctx: GroupCtx, g: Element, h: Element) -> Element:
    return mul(ctx, mul(ctx, inv(ctx, h), g), h)


def el_conj(ctx: GroupCtx, g: Element, h: Element) -> Element:
    """h^-1 g h."""
    return conj(ctx, check_element(ctx, g), check_element(ctx, h))


def comm(ctx: GroupCtx, g: Element, h: Element) -> Element:
    return mul(ctx, mul(ctx, inv(ctx, g), inv(ctx, h)), mul(ctx, g, h))


def el_comm(ctx: GroupCtx, g: Element, h: Element) -> Element:
    """[g, h] = g^-1 h^-1 g h."""
    return comm(ctx, check_element(ctx, g), check_element(ctx, h))


def r_of(ctx: GroupCtx, g: Element) -> Residue:
    pow1, pow2, _, _ = ctx.tables
    g = check_element(ctx, g)
    return Residue(pow1[g.x] * pow2[g.y], ctx.pm)


def o_of(ctx: GroupCtx, g: Element) -> int:
    return ctx.m - vp_capped(r_of(ctx, g).value - 1, ctx.p, ctx.m)


def check_cap(ctx: GroupCtx, cap: int, what: str = "group") -> None:
    if ctx.order > cap:
        raise CapExceededError(f"{what} order {ctx.order} exceeds cap {cap}")


def enumerate_elements(
    ctx: GroupCtx, cap: int = DEFAULT_GROUP_CAP
) -> Iterator[Element]:
    check_cap(ctx, cap)
    for x in range(ctx.q1):
        for y in range(ctx.q2):
            for z in range(ctx.pm):
                yield Element(x, y, z)
