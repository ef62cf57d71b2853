from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

from app.core.Interfaces.params_interface import ParamVector


class Element(NamedTuple):
    """Normal form b1^x b2^y a^z with 0 <= x < p^n1, 0 <= y < p^n2, 0 <= z < p^m."""

    x: int
    y: int
    z: int


IDENTITY = Element(0, 0, 0)


@dataclass(frozen=True)
class GroupCtx:
    """
    The group <b1, b2, a | a^(p^m), a^b1 = a^r1, a^b2 = a^r2,
    b1^(p^n1) = a^w1, b2^(p^n2) = a^w2, [b2, b1] = a>.

    origin is the classifying vector for canonical groups and None for raw
    presentations such as socle quotients.
    """

    p: int
    m: int
    n1: int
    n2: int
    r1: int
    r2: int
    w1: int
    w2: int
    origin: Optional[ParamVector] = None

    @cached_property
    def pm(self) -> int:
        return int(self.p**self.m)

    @cached_property
    def q1(self) -> int:
        return int(self.p**self.n1)

    @cached_property
    def q2(self) -> int:
        return int(self.p**self.n2)

    @property
    def log_order(self) -> int:
        return self.m + self.n1 + self.n2

    @cached_property
    def order(self) -> int:
        return int(self.p**self.log_order)

    @property
    def canonical(self) -> bool:
        return self.origin is not None

    @property
    def b1(self) -> Element:
        return Element(1 % self.q1, 0, 0)

    @property
    def b2(self) -> Element:
        return Element(0, 1 % self.q2, 0)

    @property
    def a(self) -> Element:
        return Element(0, 0, 1 % self.pm)

    @cached_property
    def tables(self) -> tuple[list[int], list[int], list[int], list[int]]:
        """r1^u, r2^v, S(r1, u), S(r2, v) for u < p^n1 and v < p^n2."""
        return (
            _powers(self.r1, self.q1, self.pm),
            _powers(self.r2, self.q2, self.pm),
            _partial_sums(self.r1, self.q1, self.pm),
            _partial_sums(self.r2, self.q2, self.pm),
        )


def _powers(r: int, count: int, modulus: int) -> list[int]:
    values = [1 % modulus] * count
    for i in range(1, count):
        values[i] = values[i - 1] * r % modulus
    return values


def _partial_sums(r: int, count: int, modulus: int) -> list[int]:
    values = [0] * count
    power = 1
    for i in range(1, count):
        values[i] = (values[i - 1] + power) % modulus
        power = power * r % modulus
    return values
