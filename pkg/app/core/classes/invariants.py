import json
import logging

from pydantic import TypeAdapter

from app.core.classes.arith import vp_capped
from app.core.classes.basis_search import DEFAULT_BASIS_CAP, big_O
from app.core.classes.errors import InvalidParamsError, QuotientError
from app.core.classes.presentation import DEFAULT_GROUP_CAP, validate_params
from app.core.classes.subgroups import (
    abelian_invariants,
    center_bf,
    centralizer_comm_bf,
    commutator_subgroup_gen,
    derived_subgroup,
    exponent_log,
    jennings_orders,
    nilpotency_class,
    omega,
    socle_quotient,
    subgroup_from_set,
    whole_group,
)
from app.core.Interfaces.group_interface import GroupCtx
from app.core.Interfaces.invariants_interface import Fingerprint, InvariantReport
from app.core.Interfaces.params_interface import ParamPrefix, ParamVector

logger = logging.getLogger(__name__)

_FINGERPRINT_ADAPTER = TypeAdapter(Fingerprint)


def type_invariants(vector: ParamVector | ParamPrefix) -> list[int]:
    e1 = max(vector.n1 + vector.o1p, vector.n2 + vector.o2p)
    top = max(vector.o1p, vector.o2p)
    if top < vector.m:
        return [e1, vector.n1 + vector.n2 + top - e1, vector.m - top]
    # metacyclic: two invariants adding up to log_p |G|
    return [e1, vector.m + vector.n1 + vector.n2 - e1]


def type_invariants_def(ctx: GroupCtx, cap: int = DEFAULT_GROUP_CAP) -> list[int]:
    G = whole_group(ctx, cap)
    sizes = [1] + [len(omega(G, n)) for n in range(1, exponent_log(G) + 1)]
    omegas = [
        vp_capped(sizes[n] // sizes[n - 1], ctx.p, ctx.log_order)
        for n in range(1, len(sizes))
    ]
    return [
        sum(1 for value in omegas if value >= i)
        for i in range(1, max(omegas, default=0) + 1)
    ]


def _quotient_prefix(v: ParamPrefix) -> ParamPrefix:
    if v.m < 2:
        raise QuotientError("the socle quotient needs m >= 2")
    if v.o1 == 0 and 0 < min(v.o1p, v.o2) and v.o2p == v.o1p + v.o2 + v.n1 - v.n2:
        o1p = v.o1p
    else:
        o1p = max(0, v.o1p - 1)
    if v.o2 == 0 and v.n1 - v.n2 < v.o1 and 0 < v.o2p == v.o1p + v.n1 - v.n2 - v.o1:
        o2p = v.o2p
    else:
        o2p = max(0, v.o2p - 1)
    return ParamPrefix(
        v.p, v.m - 1, v.n1, v.n2, max(0, v.o1 - 1), max(0, v.o2 - 1), o1p, o2p
    )


def quotient_params(vector: ParamVector) -> ParamPrefix:
    """
    The first eight entries of the socle quotient's vector; its units stay
    undetermined.
    """
    report = validate_params(vector)
    if not report.valid:
        raise InvalidParamsError(f"{vector.key()} violates {report.violated}")
    return _quotient_prefix(vector.prefix())


def quotient_chain(vector: ParamVector) -> list[ParamPrefix]:
    chain = [vector.prefix()]
    if vector.m >= 2:
        chain.append(quotient_params(vector))
    while chain[-1].m >= 2:
        chain.append(_quotient_prefix(chain[-1]))
    return chain


def invariant_report(
    ctx: GroupCtx, cap: int = DEFAULT_GROUP_CAP, basis_cap: int = DEFAULT_BASIS_CAP
) -> InvariantReport:
    """Group invariants; the basis search behind big_o is bounded by basis_cap."""
    p = ctx.p
    G = whole_group(ctx, cap)
    commutator = commutator_subgroup_gen(ctx)
    center = center_bf(ctx, cap)
    centralizer = centralizer_comm_bf(ctx, cap)
    center_meet = subgroup_from_set(ctx, center.elements & commutator.elements)
    types = type_invariants_def(ctx, cap)
    return InvariantReport(
        order=ctx.order,
        abelianization=abelian_invariants(G, commutator),
        exponent=p ** exponent_log(G),
        center_meet_commutator=len(center_meet),
        center_type=abelian_invariants(center, center_meet),
        jennings_group=jennings_orders(G),
        jennings_commutator=jennings_orders(commutator),
        jennings_centralizer=jennings_orders(centralizer),
        centralizer_mod_commutator=abelian_invariants(centralizer, commutator),
        centralizer_abelianization=abelian_invariants(
            centralizer, derived_subgroup(centralizer)
        ),
        centralizer_exponent=p ** exponent_log(centralizer),
        type_invariants=types,
        nilpotency_class=nilpotency_class(G),
        big_o=list(big_O(ctx, basis_cap)),
        metacyclic=len(types) <= 2,
    )


def fingerprint(
    ctx: GroupCtx, cap: int = DEFAULT_GROUP_CAP, basis_cap: int = DEFAULT_BASIS_CAP
) -> Fingerprint:
    logger.debug("fingerprinting a group of order %d", ctx.order)
    report = invariant_report(ctx, cap, basis_cap)
    if ctx.m == 1:
        return Fingerprint(report)
    return Fingerprint(report, fingerprint(socle_quotient(ctx), cap, basis_cap))


def fingerprint_json(fp: Fingerprint) -> str:
    return json.dumps(
        _FINGERPRINT_ADAPTER.dump_python(fp, mode="json"),
        sort_keys=True,
        separators=(",", ":"),
    )


def first_difference(left: Fingerprint, right: Fingerprint) -> str | None:
    """Dotted path of the first differing report entry, or None if equal."""
    level = 0
    current: tuple[Fingerprint | None, Fingerprint | None] = (left, right)
    while current[0] is not None and current[1] is not None:
        first, second = current
        for name in InvariantReport.__dataclass_fields__:
            if getattr(first.report, name) != getattr(second.report, name):
                return f"level[{level}].{name}"
        current = (first.quotient, second.quotient)
        level += 1
    if current[0] is None and current[1] is None:
        return None
    return f"level[{level}]"
