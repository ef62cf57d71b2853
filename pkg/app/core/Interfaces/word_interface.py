from enum import Enum
from typing import NamedTuple


class Generator(str, Enum):
    B1 = "b1"
    B2 = "b2"
    A = "a"

    @property
    def rank(self) -> int:
        """Position in the collected order b1 < b2 < a."""
        return _RANKS[self]


_RANKS = {Generator.B1: 0, Generator.B2: 1, Generator.A: 2}


class Letter(NamedTuple):
    gen: Generator
    exp: int


Word = list[Letter]
