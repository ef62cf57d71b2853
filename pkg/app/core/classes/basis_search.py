import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from app.core.classes.arith import vp_capped
from app.core.classes.errors import BasisSearchError
from app.core.classes.presentation import check_cap, comm, erres, power
from app.core.classes.subgroups import order_logs
from app.core.Interfaces.group_interface import Element, GroupCtx
from app.core.Interfaces.invariants_interface import BasisPair
from app.core.Interfaces.params_interface import ParamVector

logger = logging.getLogger(__name__)

DEFAULT_BASIS_CAP = 3**6

Image = tuple[int, int]


@dataclass
class _Search:
    """Per-image data shared by the basis searches of one group."""

    ctx: GroupCtx
    logs: dict[Element, int]
    slot1: list[Image]
    slot2: list[Image]

    def image_o(self, image: Image) -> int:
        return self.ctx.m - vp_capped(self.image_r(image) - 1, self.ctx.p, self.ctx.m)

    def image_r(self, image: Image) -> int:
        pow1, pow2, _, _ = self.ctx.tables
        return pow1[image[0]] * pow2[image[1]] % self.ctx.pm

    def lifts(self, image: Image) -> list[Element]:
        return [Element(image[0], image[1], z) for z in range(self.ctx.pm)]

    def max_log(self, image: Image) -> int:
        return max(self.logs[g] for g in self.lifts(image))

    def basis_images(self) -> Iterator[tuple[Image, Image]]:
        p = self.ctx.p
        for i1 in self.slot1:
            for i2 in self.slot2:
                if (i1[0] * i2[1] - i2[0] * i1[1]) % p:
                    yield i1, i2


def _prepare(ctx: GroupCtx, cap: int) -> _Search:
    check_cap(ctx, cap, "basis search")
    p = ctx.p

    def image_log(x: int, y: int) -> int:
        return max(
            ctx.n1 - vp_capped(x, p, ctx.n1), ctx.n2 - vp_capped(y, p, ctx.n2)
        )

    images = [(x, y) for x in range(ctx.q1) for y in range(ctx.q2)]
    return _Search(
        ctx,
        order_logs(ctx, ctx.order),
        [i for i in images if image_log(*i) == ctx.n1],
        [i for i in images if image_log(*i) == ctx.n2],
    )


def u_of(ctx: GroupCtx, b: Element, n: int, commutator: int) -> tuple[int, int]:
    """(o', u) read off from b^(p^n) = commutator^(u p^(m - o'))."""
    p, m, pm = ctx.p, ctx.m, ctx.pm
    ratio = power(ctx, b, p**n).z * pow(commutator, -1, pm) % pm
    oprime = m - vp_capped(ratio, p, m)
    u = (ratio // p ** (m - oprime)) % p**oprime
    return oprime, u or p**oprime


def _min_u(
    search: _Search,
    candidates: Iterable[tuple[Image, Image]],
    oprime: tuple[int, int],
    o_pair: tuple[int, int],
    stop_at_units: bool = False,
) -> BasisPair:
    """
    The basis with the least (u2, u1); with stop_at_units the scan ends at the
    first basis with u1 = u2 = 1, which no other basis can beat.
    """
    ctx = search.ctx
    best: BasisPair | None = None
    for i1, i2 in candidates:
        first = [g for g in search.lifts(i1) if search.logs[g] - ctx.n1 == oprime[0]]
        second = [g for g in search.lifts(i2) if search.logs[g] - ctx.n2 == oprime[1]]
        for b1 in first:
            for b2 in second:
                c = comm(ctx, b2, b1).z
                _, u1 = u_of(ctx, b1, ctx.n1, c)
                _, u2 = u_of(ctx, b2, ctx.n2, c)
                if best is None or (u2, u1) < (best.u_pair[1], best.u_pair[0]):
                    best = BasisPair(b1, b2, o_pair, oprime, (u1, u2))
                    if stop_at_units and best.u_pair == (1, 1):
                        return best
    if best is None:
        raise BasisSearchError("no basis attains the extracted o'")
    return best


def _restricted(
    search: _Search, o_pair: tuple[int, int]
) -> list[tuple[Image, Image]]:
    ctx = search.ctx
    r1, r2 = erres(ctx.p, ctx.m, *o_pair)
    return [
        (i1, i2)
        for i1, i2 in search.basis_images()
        if search.image_r(i1) == r1 and search.image_r(i2) == r2
    ]


def extract_basis(ctx: GroupCtx, cap: int = DEFAULT_BASIS_CAP) -> BasisPair:
    search = _prepare(ctx, cap)
    pairs = list(search.basis_images())
    if not pairs:
        raise BasisSearchError("group has no basis")
    o_values = {i: search.image_o(i) for i in set(search.slot1) | set(search.slot2)}
    o_pair = min((o_values[i1], o_values[i2]) for i1, i2 in pairs)

    restricted = _restricted(search, o_pair)
    if not restricted:
        raise BasisSearchError(f"no basis with o = {o_pair} matches r1, r2")
    max1 = {i1: search.max_log(i1) - ctx.n1 for i1, _ in restricted}
    max2 = {i2: search.max_log(i2) - ctx.n2 for _, i2 in restricted}
    oprime = max((max1[i1], max2[i2]) for i1, i2 in restricted)
    candidates = [
        (i1, i2) for i1, i2 in restricted if (max1[i1], max2[i2]) == oprime
    ]
    logger.debug("o = %s, o' = %s over %d image pairs", o_pair, oprime, len(candidates))
    return _min_u(search, candidates, oprime, o_pair)


def extract_inv(ctx: GroupCtx, cap: int = DEFAULT_BASIS_CAP) -> ParamVector:
    return ParamVector(*_vector_fields(ctx, extract_basis(ctx, cap)))


def _vector_fields(ctx: GroupCtx, best: BasisPair) -> tuple[int, ...]:
    return (ctx.p, ctx.m, ctx.n1, ctx.n2, *best.o_pair, *best.oprime_pair, *best.u_pair)


def o_pair_attained(o_b: tuple[int, int], n1: int, n2: int) -> bool:
    """Whether a basis with these o-values realises (o1, o2)."""
    ob1, ob2 = o_b
    return (
        ob1 == 0
        or (ob2 == 0 < ob1 and n2 < n1)
        or (0 < ob2 < ob1 < ob2 + n1 - n2)
    )


def oprime_pair_attained(
    oprime_b: tuple[int, int], o_pair: tuple[int, int], n1: int, n2: int
) -> bool:
    """Whether a basis in B_r with these o'-values realises (o1', o2')."""
    first, second = oprime_b
    o1, o2 = o_pair
    if o1 == 0:
        return first <= second <= first + o2 + n1 - n2
    if o2 == 0:
        return first + min(0, n1 - n2 - o1) <= second <= first + n1 - n2
    return first <= second <= first + n1 - n2


def _first(
    pairs: Iterator[tuple[Image, Image]], accept: Callable[[Image, Image], bool]
) -> tuple[Image, Image]:
    for i1, i2 in pairs:
        if accept(i1, i2):
            return i1, i2
    raise BasisSearchError("pruned search found no admissible basis")


def extract_inv_pruned(ctx: GroupCtx, cap: int = DEFAULT_BASIS_CAP) -> ParamVector:
    search = _prepare(ctx, cap)
    n1, n2 = ctx.n1, ctx.n2
    i1, i2 = _first(
        search.basis_images(),
        lambda i1, i2: o_pair_attained(
            (search.image_o(i1), search.image_o(i2)), n1, n2
        ),
    )
    o_pair = (search.image_o(i1), search.image_o(i2))

    restricted = _restricted(search, o_pair)
    oprime: tuple[int, int] | None = None
    for i1, i2 in restricted:
        values1 = {search.logs[g] - n1 for g in search.lifts(i1)}
        values2 = {search.logs[g] - n2 for g in search.lifts(i2)}
        admissible = [
            (v1, v2)
            for v1 in values1
            for v2 in values2
            if oprime_pair_attained((v1, v2), o_pair, n1, n2)
        ]
        if admissible:
            oprime = admissible[0]
            break
    if oprime is None:
        raise BasisSearchError("pruned search found no admissible o'")

    candidates = (
        (j1, j2)
        for j1, j2 in restricted
        if oprime[0] in {search.logs[g] - n1 for g in search.lifts(j1)}
        and oprime[1] in {search.logs[g] - n2 for g in search.lifts(j2)}
    )
    best = _min_u(search, candidates, oprime, o_pair, stop_at_units=True)
    return ParamVector(*_vector_fields(ctx, best))


def big_O(ctx: GroupCtx, cap: int = DEFAULT_BASIS_CAP) -> tuple[int, int, int, int]:
    search = _prepare(ctx, cap)
    p = ctx.p
    best: tuple[int, int, int, int] | None = None
    max_logs: dict[Image, int] = {}
    for i1, i2 in search.basis_images():
        for i in (i1, i2):
            if i not in max_logs:
                max_logs[i] = search.max_log(i)
        key = (
            p ** search.image_o(i1),
            p ** search.image_o(i2),
            -(p ** max_logs[i1]),
            -(p ** max_logs[i2]),
        )
        if best is None or key < best:
            best = key
    if best is None:
        raise BasisSearchError("group has no basis")
    return best


def big_O_closed(vector: ParamVector) -> tuple[int, int, int, int]:
    p = vector.p
    return (
        p**vector.o1,
        p**vector.o2,
        -(p ** (vector.n1 + vector.o1p)),
        -(p ** (vector.n2 + vector.o2p)),
    )
