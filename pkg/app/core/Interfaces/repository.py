from typing import Protocol, TypeVar

ItemT = TypeVar("ItemT")


class Repository(Protocol[ItemT]):
    def create(self, key: str, item: ItemT) -> ItemT:
        pass

    def read(self, key: str) -> ItemT:
        pass

    def exists(self, key: str) -> bool:
        pass

    def read_all(self) -> list[ItemT]:
        pass
