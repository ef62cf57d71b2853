import math
from dataclasses import dataclass
from functools import wraps
from typing import Callable, TypeAlias, Union

from app.core.classes.errors import ResidueMismatchError

INFINITY = math.inf

# p-adic valuation: a non-negative int, or INFINITY for zero.
Valuation: TypeAlias = Union[int, float]

ResidueLike: TypeAlias = Union["Residue", int]


def _same_modulus(
    func: Callable[["Residue", "Residue"], "Residue"],
) -> Callable[["Residue", ResidueLike], "Residue"]:
    @wraps(func)
    def method(self: "Residue", other: ResidueLike) -> "Residue":
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ResidueMismatchError(f"{self.modulus} != {other.modulus}")
        else:
            other = Residue(other, self.modulus)
        return func(self, other)

    return method


@dataclass(frozen=True, init=False)
class Residue:
    """An integer class modulo a prime power, kept in [0, modulus)."""

    value: int
    modulus: int

    def __init__(self, value: int, modulus: int) -> None:
        if modulus <= 0:
            raise ValueError(f"modulus must be positive, got {modulus}")
        object.__setattr__(self, "value", value % modulus)
        object.__setattr__(self, "modulus", modulus)

    @_same_modulus
    def __add__(self, other: "Residue") -> "Residue":
        return Residue(self.value + other.value, self.modulus)

    @_same_modulus
    def __sub__(self, other: "Residue") -> "Residue":
        return Residue(self.value - other.value, self.modulus)

    @_same_modulus
    def __mul__(self, other: "Residue") -> "Residue":
        return Residue(self.value * other.value, self.modulus)

    def __radd__(self, other: int) -> "Residue":
        return self + other

    def __rmul__(self, other: int) -> "Residue":
        return self * other

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent: int) -> "Residue":
        return Residue(pow(self.value, exponent, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> "Residue":
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def reduce(self, modulus: int) -> "Residue":
        if self.modulus % modulus != 0:
            raise ResidueMismatchError(f"{modulus} does not divide {self.modulus}")
        return Residue(self.value, modulus)
