from dataclasses import dataclass
from typing import Optional

from app.core.Interfaces.group_interface import Element


@dataclass(frozen=True)
class BasisPair:
    b1: Element
    b2: Element
    o_pair: tuple[int, int]
    oprime_pair: tuple[int, int]
    u_pair: tuple[int, int]


@dataclass
class InvariantReport:
    """Group and group-algebra invariants; type lists are in descending order."""

    order: int
    abelianization: list[int]
    exponent: int
    center_meet_commutator: int
    center_type: list[int]
    jennings_group: list[int]
    jennings_commutator: list[int]
    jennings_centralizer: list[int]
    centralizer_mod_commutator: list[int]
    centralizer_abelianization: list[int]
    centralizer_exponent: int
    type_invariants: list[int]
    nilpotency_class: int
    big_o: list[int]
    metacyclic: bool


@dataclass
class Fingerprint:
    report: InvariantReport
    quotient: Optional["Fingerprint"] = None

    @property
    def depth(self) -> int:
        return 1 if self.quotient is None else 1 + self.quotient.depth


@dataclass(frozen=True)
class DeltaPresentation:
    """
    <x, y, z | [y, x] = z^commutator, x^(p^x_log) = z^x_power,
    y^(p^y_log) = z^y_power, z^(p^z_log) = 1, z central>
    together with the images of x, y, z inside the group.
    """

    case: str
    commutator: int
    x_log: int
    x_power: int
    y_log: int
    y_power: int
    z_log: int
    images: tuple[Element, Element, Element]
    s_shift: Optional[int] = None
    e: Optional[int] = None

    @property
    def order_log(self) -> int:
        return self.z_log + self.x_log + self.y_log

    def relators(self) -> tuple[int, int, int, int, int, int]:
        return (
            self.commutator,
            self.x_log,
            self.x_power,
            self.y_log,
            self.y_power,
            self.z_log,
        )
