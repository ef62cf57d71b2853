import logging

from app.core.classes.arith import vp
from app.core.classes.errors import VerificationError
from app.core.classes.presentation import (
    DEFAULT_GROUP_CAP,
    comm,
    normalize,
    power,
)
from app.core.classes.subgroups import centralizer_comm_bf, gen_subgroup
from app.core.Interfaces.group_interface import IDENTITY, Element, GroupCtx
from app.core.Interfaces.invariants_interface import DeltaPresentation
from app.core.Interfaces.params_interface import ParamVector

logger = logging.getLogger(__name__)


def centralizer_presentation(
    ctx: GroupCtx, verify: bool = False, cap: int = DEFAULT_GROUP_CAP
) -> DeltaPresentation:
    """A class-two presentation of C_G(G') with explicit generator images."""
    if ctx.origin is None:
        raise ValueError("centralizer presentations need a canonical group")
    v = ctx.origin
    p, m, pm = v.p, v.m, ctx.pm
    u1, u2 = v.u1, v.u2

    def z_power(k: int) -> int:
        return p**k % pm

    def b1(k: int) -> Element:
        return normalize(ctx, k, 0, 0)

    def b2(k: int) -> Element:
        return normalize(ctx, 0, k, 0)

    def a(k: int) -> Element:
        return normalize(ctx, 0, 0, k)

    if v.o1 == 0:
        presentation = DeltaPresentation(
            case="o1=0",
            commutator=z_power(v.o2),
            x_log=v.n1,
            x_power=z_power(m - v.o1p),
            y_log=v.n2 - v.o2,
            y_power=z_power(m - v.o2p),
            z_log=m,
            images=(b1(u2), b2(u1 * p**v.o2), a(u1 * u2)),
        )
    elif v.o2 == 0:
        presentation = DeltaPresentation(
            case="o2=0<o1",
            commutator=z_power(v.o1),
            x_log=v.n1 - v.o1,
            x_power=z_power(m - v.o1p),
            y_log=v.n2,
            y_power=z_power(m - v.o2p),
            z_log=m,
            images=(b1(u2 * p**v.o1), b2(u1), a(u1 * u2)),
        )
    else:
        presentation = _both_positive(ctx, v)

    if verify:
        failures = verify_centralizer_presentation(ctx, presentation, cap)
        if failures:
            raise VerificationError("; ".join(failures))
    return presentation


def _both_positive(ctx: GroupCtx, v: ParamVector) -> DeltaPresentation:
    p, m, pm = v.p, v.m, ctx.pm
    u1, u2 = v.u1, v.u2
    x_log = v.n1 - v.o1 + v.o2
    s = v.n1 + v.o1p - v.n2 - v.o2p - v.o1 + v.o2
    tilted = normalize(ctx, p ** (v.o1 - v.o2), -1, 0)

    def delta(
        case: str, x_power: int, images: tuple[Element, Element, Element], e: int | None
    ) -> DeltaPresentation:
        return DeltaPresentation(
            case=case,
            commutator=p**v.o1 % pm,
            x_log=x_log,
            x_power=x_power,
            y_log=v.n2 - v.o2,
            y_power=p ** (m - v.o2p) % pm,
            z_log=m,
            images=images,
            s_shift=s,
            e=e,
        )

    if s != 0:
        if s > 0:
            alpha = u1 - u2 * p**s
            x_power = p ** (m - v.o1p) % pm
        else:
            alpha = u1 * p ** (-s) - u2
            x_power = p ** (m - v.o1p + s) % pm
        images = (
            power(ctx, tilted, u2),
            normalize(ctx, 0, alpha * p**v.o2, 0),
            normalize(ctx, 0, 0, alpha * u2),
        )
        return delta("s>0" if s > 0 else "s<0", x_power, images, None)

    difference = u1 - u2
    ell = vp(difference, p)
    w = difference // p ** int(ell) if difference else 0
    e = int(max(v.o1p - ell, v.o1p - v.o2, m - x_log, 0))
    if e == max(v.o1p - v.o2, m - x_log, 0):
        if e == 0 or w == 0:
            base, case = tilted, "s=0,e=0"
        elif e == m - x_log:
            correction = -w * p ** (m - v.o1p + int(ell) - x_log)
            base = normalize(ctx, p ** (v.o1 - v.o2), -1, correction)
            case = "s=0,e=m-N"
        else:
            shift = (u2 - u1) * pow(u2, -1, pm)
            base = normalize(ctx, p ** (v.o1 - v.o2), -1 + shift, 0)
            case = "s=0,e=o1'-o2"
        images = (
            power(ctx, base, u2),
            normalize(ctx, 0, u1 * p**v.o2, 0),
            normalize(ctx, 0, 0, u1 * u2),
        )
        return delta(case, 0, images, e)
    images = (
        power(ctx, tilted, u2),
        normalize(ctx, 0, w * p**v.o2, 0),
        normalize(ctx, 0, 0, w * u2),
    )
    return delta("s=0,e=o1'-l", p ** (m - e) % pm, images, e)


def verify_centralizer_presentation(
    ctx: GroupCtx, presentation: DeltaPresentation, cap: int = DEFAULT_GROUP_CAP
) -> list[str]:
    """Names of the checks that fail; empty when the presentation is correct."""
    p = ctx.p
    x, y, z = presentation.images
    checks = {
        "[y,x]": comm(ctx, y, x) == power(ctx, z, presentation.commutator),
        "[z,x]": comm(ctx, z, x) == IDENTITY,
        "[z,y]": comm(ctx, z, y) == IDENTITY,
        "x power": power(ctx, x, p**presentation.x_log)
        == power(ctx, z, presentation.x_power),
        "y power": power(ctx, y, p**presentation.y_log)
        == power(ctx, z, presentation.y_power),
        "z power": power(ctx, z, p**presentation.z_log) == IDENTITY,
    }
    failures = [name for name, holds in checks.items() if not holds]
    centralizer = centralizer_comm_bf(ctx, cap)
    generated = gen_subgroup(ctx, presentation.images, cap)
    if generated.elements != centralizer.elements:
        failures.append("images do not generate C_G(G')")
    if p**presentation.order_log != len(centralizer):
        failures.append("order mismatch")
    if failures:
        logger.info("presentation %s fails: %s", presentation.case, failures)
    return failures
