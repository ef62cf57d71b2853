from dataclasses import astuple, dataclass, field

# Labels of the classification conditions, in report order.
CONDITION_LABELS = ("1", "2", "4a", "4b", "4c", "5", "5a", "5b", "7", "8a", "8b")


@dataclass(frozen=True, order=True)
class ParamPrefix:
    """The eight entries of a classifying vector that precede (u1, u2)."""

    p: int
    m: int
    n1: int
    n2: int
    o1: int
    o2: int
    o1p: int
    o2p: int


@dataclass(frozen=True, order=True)
class ParamVector:
    p: int
    m: int
    n1: int
    n2: int
    o1: int
    o2: int
    o1p: int
    o2p: int
    u1: int
    u2: int

    def prefix(self) -> ParamPrefix:
        return ParamPrefix(*astuple(self)[:8])

    def as_tuple(self) -> tuple[int, ...]:
        return astuple(self)

    def key(self) -> str:
        return ",".join(str(value) for value in astuple(self))

    @property
    def log_order(self) -> int:
        return self.m + self.n1 + self.n2


@dataclass
class ValidityReport:
    vector: ParamVector
    valid: bool
    violated: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class DerivedParams:
    r1: int
    r2: int
    a1: int
    a2: int
    t: int
    delta1: int
    delta2: int
    order: int
    s_shift: int
