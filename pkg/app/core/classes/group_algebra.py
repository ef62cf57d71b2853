import logging

import numpy as np

from app.core.classes.presentation import check_cap, enumerate_elements, mul
from app.core.classes.subgroups import subgroup_from_set
from app.core.Interfaces.algebra_interface import AlgebraCtx, IdealBasis, Matrix
from app.core.Interfaces.group_interface import GroupCtx
from app.core.Interfaces.subgroup_interface import SubgroupSet

logger = logging.getLogger(__name__)

DEFAULT_ALGEBRA_CAP = 3**6


def rref_mod(A: Matrix, p: int) -> IdealBasis:
    """Reduced row-echelon form over the field with p elements; zero rows dropped."""
    A = np.array(A, dtype=np.int64) % p
    n_rows, n_cols = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        factors = A[:, c].copy()
        factors[r] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            A[rows] = (A[rows] - np.outer(factors[rows], A[r])) % p
        pivots.append(c)
        r += 1
    return IdealBasis(A[:r].copy(), pivots)


def make_algebra(ctx: GroupCtx, cap: int = DEFAULT_ALGEBRA_CAP) -> AlgebraCtx:
    check_cap(ctx, cap, "algebra")
    elements = list(enumerate_elements(ctx, cap))
    index = {g: i for i, g in enumerate(elements)}
    right_actions = [
        np.array([index[mul(ctx, g, s)] for g in elements], dtype=np.intp)
        for s in (ctx.b1, ctx.b2)
    ]
    return AlgebraCtx(ctx, elements, index, right_actions)


def _augmentation_vectors(actx: AlgebraCtx) -> Matrix:
    # row i is g_i - 1; the identity has index 0
    vectors = np.eye(actx.dim, dtype=np.int64)
    vectors[:, 0] -= 1
    return vectors


def _times_generators_minus_one(actx: AlgebraCtx, rows: Matrix) -> Matrix:
    blocks = []
    for action in actx.right_actions:
        moved = np.zeros_like(rows)
        moved[:, action] = rows
        blocks.append(moved - rows)
    return np.vstack(blocks)


def aug_ideal_power(actx: AlgebraCtx, n: int) -> IdealBasis:
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    if not actx.powers:
        actx.powers.append(rref_mod(_augmentation_vectors(actx)[1:], actx.p))
    while len(actx.powers) < n:
        last = actx.powers[-1]
        if last.rank == 0:
            actx.powers.append(last)
            continue
        following = rref_mod(_times_generators_minus_one(actx, last.rows), actx.p)
        logger.debug(
            "rank of power %d of the augmentation ideal: %d",
            len(actx.powers) + 1,
            following.rank,
        )
        actx.powers.append(following)
    return actx.powers[n - 1]


def augmentation_ranks(actx: AlgebraCtx) -> list[int]:
    """Ranks of the augmentation ideal powers 1, 2, ... down to the first zero."""
    ranks = []
    n = 1
    while True:
        rank = aug_ideal_power(actx, n).rank
        ranks.append(rank)
        if rank == 0:
            return ranks
        n += 1


def dimension_subgroup(actx: AlgebraCtx, n: int) -> SubgroupSet:
    basis = aug_ideal_power(actx, n)
    vectors = _augmentation_vectors(actx)
    if basis.rank:
        residual = (vectors - vectors[:, basis.pivots] @ basis.rows) % actx.p
    else:
        residual = vectors
    members = [
        actx.elements[i] for i in np.nonzero(~residual.any(axis=1))[0]
    ]
    return subgroup_from_set(actx.ctx, members)
