from dataclasses import dataclass
from typing import Optional, Protocol

from app.core.Interfaces.invariants_interface import DeltaPresentation, Fingerprint
from app.core.Interfaces.params_interface import (
    DerivedParams,
    ParamPrefix,
    ParamVector,
)

IDENTICAL = "identical"
INDISTINGUISHABLE = "indistinguishable by computed invariants"
DISTINGUISHED = "distinguished"


@dataclass
class Description:
    vector: ParamVector
    extracted: ParamVector
    derived: DerivedParams
    metacyclic: bool
    type_invariants: list[int]
    big_o: list[int]
    centralizer: DeltaPresentation
    centralizer_failures: list[str]
    quotient_chain: list[ParamPrefix]
    fingerprint: Fingerprint


@dataclass
class Comparison:
    left: ParamVector
    right: ParamVector
    verdict: str
    first_difference: Optional[str] = None


class ReportInterface(Protocol):
    def describe(self, vector: ParamVector) -> Description:
        pass

    def compare(self, left: ParamVector, right: ParamVector) -> Comparison:
        pass
