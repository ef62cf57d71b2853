import logging
from dataclasses import dataclass, field

from app.core.classes.errors import DoesntExistError, ExistsError
from app.core.Interfaces.invariants_interface import Fingerprint
from app.core.Interfaces.repository import Repository

logger = logging.getLogger(__name__)


@dataclass
class FingerprintInMemoryRepository(Repository[Fingerprint]):
    """Fingerprints keyed by the comma-joined classifying vector."""

    fingerprints: dict[str, Fingerprint] = field(default_factory=dict)

    def create(self, vector_key: str, fingerprint: Fingerprint) -> Fingerprint:
        if vector_key in self.fingerprints:
            raise ExistsError(vector_key)
        self.fingerprints[vector_key] = fingerprint
        return fingerprint

    def read(self, vector_key: str) -> Fingerprint:
        if vector_key not in self.fingerprints:
            raise DoesntExistError(vector_key)
        logger.debug("fingerprint cache hit for %s", vector_key)
        return self.fingerprints[vector_key]

    def exists(self, vector_key: str) -> bool:
        return vector_key in self.fingerprints

    def read_all(self) -> list[Fingerprint]:
        return list(self.fingerprints.values())
