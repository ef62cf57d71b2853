import dataclasses
import logging
import random
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import product
from typing import Iterable, Iterator, Optional

from app.core.classes.arith import (
    double_sum,
    geom_sum,
    geom_sum_invert,
    mult_order,
    vp,
    vp_capped,
)
from app.core.classes.basis_search import (
    DEFAULT_BASIS_CAP,
    big_O,
    big_O_closed,
    extract_inv,
    extract_inv_pruned,
)
from app.core.classes.centralizer_presentation import (
    centralizer_presentation,
    verify_centralizer_presentation,
)
from app.core.classes.closed_forms import verify_closed_forms
from app.core.classes.collector import (
    DEFAULT_WORD_CAP,
    collect,
    evaluate,
    random_word,
    word_of,
)
from app.core.classes.enumeration import enumerate_vectors
from app.core.classes.errors import PresentationError
from app.core.classes.group_algebra import (
    DEFAULT_ALGEBRA_CAP,
    dimension_subgroup,
    make_algebra,
)
from app.core.classes.invariants import (
    fingerprint,
    fingerprint_json,
    quotient_params,
    type_invariants,
    type_invariants_def,
)
from app.core.classes.presentation import (
    DEFAULT_GROUP_CAP,
    comm,
    conj,
    derive_params,
    enumerate_elements,
    inv,
    make_group,
    make_raw_group,
    mul,
    normalize,
    power,
)
from app.core.classes.subgroups import (
    abelian_invariants,
    center_bf,
    center_closed,
    center_meet_commutator_closed,
    centralizer_comm_bf,
    centralizer_comm_closed,
    centralizer_exponent_closed,
    commutator_subgroup_gen,
    derived_subgroup,
    exponent_closed,
    exponent_log,
    gen_subgroup,
    jennings_series,
    lower_central_closed,
    lower_central_series,
    mho,
    nilpotency_class,
    nilpotency_class_closed,
    omega_rel,
    omega_rel_set,
    product_subgroup,
    socle_quotient,
    subgroup_from_set,
    whole_group,
)
from app.core.Interfaces.arith_interface import Residue
from app.core.Interfaces.group_interface import IDENTITY, Element, GroupCtx
from app.core.Interfaces.params_interface import ParamVector
from app.core.Interfaces.verification_interface import (
    SUITES,
    CheckResult,
    SuiteReport,
    VectorOutcome,
    VerificationInterface,
)

logger = logging.getLogger(__name__)

# (check name, holds, detail shown on failure)
Check = tuple[str, bool, str]

# Arithmetic identities are checked for arguments below p**ARITH_LOG_RANGE.
ARITH_LOG_RANGE = 4
# Groups up to this order get the collector on every pair of elements.
ORACLE_EXHAUSTIVE_LIMIT = 3**5
SWEEP_SAMPLES = 20
SWEEP_WORD_LENGTH = 8

FAULTS = ("delta",)


def _first_failure(name: str, cases: Iterable[tuple[bool, str]]) -> Check:
    for holds, detail in cases:
        if not holds:
            return name, False, detail
    return name, True, ""


def arith_checks(p: int) -> list[Check]:
    top = p**ARITH_LOG_RANGE
    units = range(1, top, p)

    def valuations() -> Iterator[tuple[bool, str]]:
        for s, n in product(units, range(1, top)):
            lhs = vp(s**n - 1, p)
            yield lhs == vp(s - 1, p) + vp(n, p), f"s={s} n={n}"

    def geom_valuations() -> Iterator[tuple[bool, str]]:
        modulus = p ** (2 * ARITH_LOG_RANGE)
        for s, n in product(units, range(1, top)):
            value = geom_sum(s, n, modulus).value
            holds = vp_capped(value, p, 2 * ARITH_LOG_RANGE) == vp(n, p)
            yield holds, f"s={s} n={n}"

    def orders() -> Iterator[tuple[bool, str]]:
        for s, k in product(units, range(1, ARITH_LOG_RANGE + 1)):
            expected = p ** max(0, k - vp(s - 1, p))
            yield mult_order(s, p**k) == expected, f"s={s} k={k}"

    def sums_near_n() -> Iterator[tuple[bool, str]]:
        for s, m in product(units[1:], range(1, ARITH_LOG_RANGE + 1)):
            step = p ** max(m - vp_capped(s - 1, p, m), 0)
            for n in range(0, top, step):
                holds = geom_sum(s, n, p**m).value == n % p**m
                yield holds, f"s={s} m={m} n={n}"

    def double_sums() -> Iterator[tuple[bool, str]]:
        small = range(1, p**3, p)
        for s, t, n in product(small, small, range(1, ARITH_LOG_RANGE + 1)):
            yield double_sum(s, t, p**n, p**n).value == 0, f"s={s} t={t} n={n}"

    def inversions() -> Iterator[tuple[bool, str]]:
        for m in range(1, ARITH_LOG_RANGE + 1):
            pm = p**m
            for r, x in product(range(1, pm, p), range(pm)):
                y = geom_sum_invert(r, Residue(x, pm))
                yield geom_sum(r, y, pm).value == x, f"r={r} x={x} mod {pm}"

    return [
        _first_failure("vp(s^n - 1)", valuations()),
        _first_failure("vp(S(s, n))", geom_valuations()),
        _first_failure("multiplicative order", orders()),
        _first_failure("S(s, n) = n", sums_near_n()),
        _first_failure("T(s, t, p^n) = 0", double_sums()),
        _first_failure("geom_sum_invert", inversions()),
    ]


def _results(
    suite: str, vector: Optional[str], checks: list[Check]
) -> list[CheckResult]:
    return [
        CheckResult(suite, name, vector, detail)
        for name, holds, detail in checks
        if not holds
    ]


@dataclass
class VerificationService(VerificationInterface):
    group_cap: int = DEFAULT_GROUP_CAP
    algebra_cap: int = DEFAULT_ALGEBRA_CAP
    basis_cap: int = DEFAULT_BASIS_CAP
    word_cap: int = DEFAULT_WORD_CAP
    samples: int = 10_000
    pair_samples: int = 100_000
    seed: int = 0
    jobs: int = 1
    fault: Optional[str] = None

    def __post_init__(self) -> None:
        if self.fault is not None and self.fault not in FAULTS:
            raise ValueError(f"unknown fault {self.fault!r}")

    def run(self, suites: Iterable[str], p: int, bound: int) -> list[SuiteReport]:
        return [self.run_suite(suite, p, bound) for suite in suites]

    def run_suite(self, suite: str, p: int, bound: int) -> SuiteReport:
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}")
        logger.info("suite %s: p=%d, orders up to %d", suite, p, bound)
        report = SuiteReport(suite)
        if suite == "arith":
            report.checked = 1
            report.failures = _results(suite, None, arith_checks(p))
            return report

        vectors = list(enumerate_vectors(p, bound))
        outcomes = self._outcomes(suite, vectors)
        for outcome in outcomes:
            if outcome.checked:
                report.checked += 1
            else:
                report.skipped += 1
            report.failures.extend(outcome.failures)
        if suite == "invariants":
            report.failures.extend(_across_vectors(outcomes))
        logger.info(
            "suite %s: %d checked, %d skipped, %d failures",
            suite,
            report.checked,
            report.skipped,
            len(report.failures),
        )
        return report

    def _outcomes(self, suite: str, vectors: list[ParamVector]) -> list[VectorOutcome]:
        check = partial(self.check_vector, suite)
        if self.jobs == 1 or len(vectors) < 2:
            return [check(vector) for vector in vectors]
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            return list(executor.map(check, vectors))

    def check_vector(self, suite: str, vector: ParamVector) -> VectorOutcome:
        key = vector.key()
        ctx = make_group(vector)
        limit = {
            "group": self.group_cap,
            "subgroups": self.basis_cap,
            "algebra": self.algebra_cap,
            "invariants": self.basis_cap,
            "oracle": self.group_cap,
        }[suite]
        outcome = VectorOutcome(key, checked=ctx.order <= limit)
        if not outcome.checked:
            logger.debug("suite %s skips %s", suite, key)
            return outcome
        rng = random.Random(f"{self.seed}:{suite}:{key}")
        if suite == "group":
            checks = self._group_checks(ctx, rng)
        elif suite == "subgroups":
            checks = self._subgroup_checks(ctx)
        elif suite == "algebra":
            checks = self._algebra_checks(ctx)
        elif suite == "invariants":
            checks = self._invariant_checks(ctx, outcome)
        else:
            checks = self._oracle_checks(ctx, rng)
        outcome.failures = _results(suite, key, checks)
        return outcome

    def _group_checks(self, ctx: GroupCtx, rng: random.Random) -> list[Check]:
        derived = derive_params(ctx.origin) if ctx.origin else None
        checks: list[Check] = []
        try:
            make_raw_group(
                ctx.p, ctx.m, ctx.n1, ctx.n2, ctx.r1, ctx.r2, ctx.w1, ctx.w2
            )
            checks.append(("consistent presentation", True, ""))
        except PresentationError as error:
            checks.append(("consistent presentation", False, str(error)))
        if derived is not None:
            checks.append(
                ("order", derived.order == ctx.order, f"{derived.order}")
            )
        b1, b2, a = ctx.b1, ctx.b2, ctx.a
        checks += [
            ("[b2,b1] = a", comm(ctx, b2, b1) == a, str(comm(ctx, b2, b1))),
            ("a^b1", conj(ctx, a, b1) == normalize(ctx, 0, 0, ctx.r1), ""),
            ("a^b2", conj(ctx, a, b2) == normalize(ctx, 0, 0, ctx.r2), ""),
            ("b1 power", power(ctx, b1, ctx.q1) == normalize(ctx, 0, 0, ctx.w1), ""),
            ("b2 power", power(ctx, b2, ctx.q2) == normalize(ctx, 0, 0, ctx.w2), ""),
            ("a power", power(ctx, a, ctx.pm) == IDENTITY, ""),
        ]

        def element() -> Element:
            return Element(
                rng.randrange(ctx.q1), rng.randrange(ctx.q2), rng.randrange(ctx.pm)
            )

        triples = [
            (element(), element(), element()) for _ in range(self.samples)
        ]
        checks += [
            _first_failure(
                "associativity",
                (
                    (
                        mul(ctx, mul(ctx, g, h), k) == mul(ctx, g, mul(ctx, h, k)),
                        f"{tuple(g)} {tuple(h)} {tuple(k)}",
                    )
                    for g, h, k in triples
                ),
            ),
            _first_failure(
                "inverse",
                (
                    (
                        mul(ctx, g, inv(ctx, g)) == IDENTITY
                        and mul(ctx, inv(ctx, g), g) == IDENTITY,
                        f"{tuple(g)}",
                    )
                    for g, _, _ in triples
                ),
            ),
        ]
        return checks

    def _subgroup_checks(self, ctx: GroupCtx) -> list[Check]:
        cap = self.basis_cap
        assert ctx.origin is not None
        origin = ctx.origin
        p, m = ctx.p, ctx.m
        t = m - max(origin.o1, origin.o2)

        G = whole_group(ctx, cap)
        commutator = commutator_subgroup_gen(ctx)
        center = center_bf(ctx, cap)
        meet = subgroup_from_set(ctx, center.elements & commutator.elements)
        center_commutator = product_subgroup(ctx, [center, commutator])
        centralizer = centralizer_comm_bf(ctx, cap)

        def generated(gens: list[Element]) -> frozenset[Element]:
            return gen_subgroup(ctx, gens, cap).elements

        checks: list[Check] = [
            ("center", center.elements == generated(center_closed(ctx)), ""),
            (
                "center meet commutator",
                meet.elements == generated(center_meet_commutator_closed(ctx)),
                f"order {len(meet)}",
            ),
            (
                "G/Z(G)G'",
                abelian_invariants(G, center_commutator) == [p**m, p**t],
                str(abelian_invariants(G, center_commutator)),
            ),
            (
                "centralizer",
                centralizer.elements == generated(centralizer_comm_closed(ctx)),
                f"order {len(centralizer)}",
            ),
            (
                "centralizer as omega",
                centralizer.elements
                == omega_rel(ctx, center_commutator, t, cap).elements,
                "",
            ),
            (
                "centralizer as a set",
                centralizer.elements == omega_rel_set(G, center_commutator, t),
                "",
            ),
            (
                "centralizer derived subgroup",
                derived_subgroup(centralizer).elements
                == mho(commutator, m - t).elements,
                "",
            ),
            (
                "exponent",
                exponent_log(G) == exponent_closed(ctx),
                f"p^{exponent_log(G)}",
            ),
            (
                "class",
                nilpotency_class(G) == nilpotency_class_closed(ctx),
                f"{nilpotency_class(G)}",
            ),
        ]
        series = lower_central_series(G)
        checks.append(
            _first_failure(
                "lower central series",
                (
                    (
                        series[i - 1].elements
                        == generated(lower_central_closed(ctx, i)),
                        f"gamma_{i}",
                    )
                    for i in range(2, len(series) + 1)
                ),
            )
        )
        closed_exponent = centralizer_exponent_closed(ctx)
        if closed_exponent is not None:
            checks.append(
                (
                    "centralizer exponent",
                    exponent_log(centralizer) == closed_exponent,
                    f"p^{exponent_log(centralizer)}",
                )
            )
        return checks

    def _algebra_checks(self, ctx: GroupCtx) -> list[Check]:
        actx = make_algebra(ctx, self.algebra_cap)
        series = jennings_series(whole_group(ctx, self.group_cap))
        return [
            _first_failure(
                "dimension subgroups",
                (
                    (
                        dimension_subgroup(actx, n).elements
                        == series[n - 1].elements,
                        f"D_{n}",
                    )
                    for n in range(1, len(series) + 1)
                ),
            )
        ]

    def _invariant_checks(self, ctx: GroupCtx, outcome: VectorOutcome) -> list[Check]:
        cap = self.basis_cap
        assert ctx.origin is not None
        vector = ctx.origin
        extracted = extract_inv(ctx, cap)
        pruned = extract_inv_pruned(ctx, cap)
        closed_types = type_invariants(vector)
        defined_types = type_invariants_def(ctx, cap)
        checks: list[Check] = [
            ("extract_inv", extracted == vector, extracted.key()),
            ("extract_inv_pruned", pruned == vector, pruned.key()),
            ("type invariants", closed_types == defined_types, str(defined_types)),
            ("type sum", sum(closed_types) == ctx.log_order, str(closed_types)),
            ("big O", big_O(ctx, cap) == big_O_closed(vector), str(big_O(ctx, cap))),
        ]
        if ctx.m >= 2 and ctx.order // ctx.p <= cap:
            quotient = extract_inv(socle_quotient(ctx), cap).prefix()
            expected = quotient_params(vector)
            checks.append(("socle quotient", quotient == expected, str(quotient)))

        presentation = centralizer_presentation(ctx, cap=cap)
        if self.fault == "delta":
            presentation = dataclasses.replace(
                presentation, commutator=presentation.commutator + 1
            )
        failures = verify_centralizer_presentation(ctx, presentation, cap)
        checks.append(
            (
                f"centralizer presentation ({presentation.case})",
                not failures,
                "; ".join(failures),
            )
        )
        outcome.relators = presentation.relators()
        fp = fingerprint(ctx, self.group_cap, cap)
        outcome.fingerprint = fingerprint_json(fp)
        return checks

    def _oracle_checks(self, ctx: GroupCtx, rng: random.Random) -> list[Check]:
        def element() -> Element:
            return Element(
                rng.randrange(ctx.q1), rng.randrange(ctx.q2), rng.randrange(ctx.pm)
            )

        exhaustive = ctx.order <= ORACLE_EXHAUSTIVE_LIMIT
        if exhaustive:
            elements = list(enumerate_elements(ctx, self.group_cap))
            pairs: Iterable[tuple[Element, Element]] = product(elements, elements)
        else:
            pairs = ((element(), element()) for _ in range(self.pair_samples))

        def collected() -> Iterator[tuple[bool, str]]:
            for g, h in pairs:
                word = word_of(ctx, g) + word_of(ctx, h)
                value = collect(ctx, word, "stack", self.word_cap)
                yield value == mul(ctx, g, h), f"{tuple(g)} * {tuple(h)}"

        checks = [_first_failure("collector", collected())]
        if exhaustive:
            words = [
                random_word(rng, SWEEP_WORD_LENGTH, ctx.p - 1)
                for _ in range(SWEEP_SAMPLES)
            ]
            checks.append(
                _first_failure(
                    "collection strategies",
                    (
                        (
                            collect(ctx, w, "left", self.word_cap)
                            == collect(ctx, w, "right", self.word_cap)
                            == collect(ctx, w, "stack", self.word_cap)
                            == evaluate(ctx, w),
                            str([(letter.gen.value, letter.exp) for letter in w]),
                        )
                        for w in words
                    ),
                )
            )
        report = verify_closed_forms(ctx, self.samples, self.seed, self.group_cap)
        checks += [
            (check.name, check.ok, check.counterexample or "")
            for check in report.checks
        ]
        return checks


def _prefix_key(vector_key: str) -> str:
    return ",".join(vector_key.split(",")[:8])


def _across_vectors(outcomes: list[VectorOutcome]) -> list[CheckResult]:
    """Checks comparing vectors that share, or differ in, their first entries."""
    by_prefix: dict[str, list[VectorOutcome]] = defaultdict(list)
    for outcome in outcomes:
        if outcome.checked:
            by_prefix[_prefix_key(outcome.vector)].append(outcome)

    failures: list[CheckResult] = []
    for prefix, group in by_prefix.items():
        first = group[0]
        for other in group[1:]:
            if other.relators != first.relators:
                failures.append(
                    CheckResult(
                        "invariants",
                        "centralizer relators independent of u",
                        other.vector,
                        f"{other.relators} != {first.relators} at {first.vector}",
                    )
                )
            if other.fingerprint != first.fingerprint:
                failures.append(
                    CheckResult(
                        "invariants",
                        "fingerprint independent of u",
                        other.vector,
                        f"differs from {first.vector}",
                    )
                )

    # Same (p, m, n1, n2) with different (o1, o2, o1', o2') must separate.
    seen: dict[str, dict[str, str]] = defaultdict(dict)
    for prefix, group in by_prefix.items():
        shape = ",".join(prefix.split(",")[:4])
        fp = group[0].fingerprint or ""
        clash = seen[shape].get(fp)
        if clash is not None:
            failures.append(
                CheckResult(
                    "invariants",
                    "fingerprint separates o and o'",
                    group[0].vector,
                    f"same fingerprint as {clash}",
                )
            )
        else:
            seen[shape][fp] = group[0].vector
    return failures
