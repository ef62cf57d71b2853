import logging
from dataclasses import dataclass

from app.core.classes.basis_search import DEFAULT_BASIS_CAP, extract_inv
from app.core.classes.centralizer_presentation import (
    centralizer_presentation,
    verify_centralizer_presentation,
)
from app.core.classes.invariants import (
    fingerprint,
    first_difference,
    quotient_chain,
    type_invariants,
)
from app.core.classes.presentation import (
    DEFAULT_GROUP_CAP,
    check_cap,
    derive_params,
    is_metacyclic,
    make_group,
)
from app.core.Interfaces.invariants_interface import Fingerprint
from app.core.Interfaces.params_interface import ParamVector
from app.core.Interfaces.report_interface import (
    DISTINGUISHED,
    IDENTICAL,
    INDISTINGUISHABLE,
    Comparison,
    Description,
    ReportInterface,
)
from app.core.Interfaces.repository import Repository

logger = logging.getLogger(__name__)


@dataclass
class ReportService(ReportInterface):
    repository: Repository[Fingerprint]
    group_cap: int = DEFAULT_GROUP_CAP
    basis_cap: int = DEFAULT_BASIS_CAP

    def fingerprint(self, vector: ParamVector) -> Fingerprint:
        key = vector.key()
        if self.repository.exists(key):
            return self.repository.read(key)
        ctx = make_group(vector)
        check_cap(ctx, self.group_cap)
        logger.info("fingerprinting %s", key)
        return self.repository.create(
            key, fingerprint(ctx, self.group_cap, self.basis_cap)
        )

    def describe(self, vector: ParamVector) -> Description:
        ctx = make_group(vector)
        check_cap(ctx, self.group_cap)
        fp = self.fingerprint(vector)
        presentation = centralizer_presentation(ctx, cap=self.group_cap)
        return Description(
            vector=vector,
            extracted=extract_inv(ctx, self.basis_cap),
            derived=derive_params(vector),
            metacyclic=is_metacyclic(vector),
            type_invariants=type_invariants(vector),
            big_o=fp.report.big_o,
            centralizer=presentation,
            centralizer_failures=verify_centralizer_presentation(
                ctx, presentation, self.group_cap
            ),
            quotient_chain=quotient_chain(vector),
            fingerprint=fp,
        )

    def compare(self, left: ParamVector, right: ParamVector) -> Comparison:
        if left == right:
            return Comparison(left, right, IDENTICAL)
        difference = first_difference(self.fingerprint(left), self.fingerprint(right))
        if difference is None:
            return Comparison(left, right, INDISTINGUISHABLE)
        return Comparison(left, right, DISTINGUISHED, difference)
