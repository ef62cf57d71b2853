from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from app.core.Interfaces.group_interface import Element, GroupCtx

Matrix = npt.NDArray[np.int64]


@dataclass
class IdealBasis:
    """Reduced row-echelon basis of a subspace of kG, k the field with p elements."""

    rows: Matrix
    pivots: list[int]

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass
class AlgebraCtx:
    ctx: GroupCtx
    elements: list[Element]
    index: dict[Element, int]
    # right multiplication by b1 and b2 as index permutations
    right_actions: list[npt.NDArray[np.intp]]
    powers: list[IdealBasis] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def p(self) -> int:
        return self.ctx.p
