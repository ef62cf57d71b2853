from dataclasses import dataclass, field
from typing import Iterator

from app.core.Interfaces.group_interface import Element, GroupCtx


@dataclass(frozen=True)
class SubgroupSet:
    """
    An explicit subgroup of ctx's group: the full element set plus the
    generators used to build it.
    """

    ctx: GroupCtx
    elements: frozenset[Element]
    generators: tuple[Element, ...] = field(default=(), compare=False)

    def __contains__(self, g: object) -> bool:
        return g in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(sorted(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def issubset(self, other: "SubgroupSet") -> bool:
        return self.elements <= other.elements
