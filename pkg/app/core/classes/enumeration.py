import logging
from dataclasses import astuple
from typing import Iterator

from app.core.classes.arith import check_prime
from app.core.classes.presentation import a1_exponent, a2_exponent, validate_params
from app.core.Interfaces.params_interface import ParamPrefix, ParamVector

logger = logging.getLogger(__name__)


def max_log_order(p: int, bound: int) -> int:
    """Largest k with p**k <= bound."""
    k = 0
    while p ** (k + 1) <= bound:
        k += 1
    return k


def _prefixes(p: int, top: int) -> Iterator[ParamPrefix]:
    for m in range(1, top - 1):
        for n1 in range(1, top - m):
            for n2 in range(1, min(n1, top - m - n1) + 1):
                for o1 in range(m):
                    for o2 in range(m):
                        for o1p in range(m - o1 + 1):
                            for o2p in range(m - o2 + 1):
                                yield ParamPrefix(p, m, n1, n2, o1, o2, o1p, o2p)


def enumerate_vectors(p: int, bound: int) -> Iterator[ParamVector]:
    """
    Every valid classifying vector with p**(m + n1 + n2) <= bound, in
    lexicographic order of the 10-tuple.
    """
    check_prime(p)
    top = max_log_order(p, bound)
    logger.info("enumerating p=%d up to p^%d", p, top)
    count = 0
    for prefix in _prefixes(p, top):
        a1, a2 = a1_exponent(prefix), a2_exponent(prefix)
        if a1 < 0 or a2 < 0:
            continue
        for u1 in range(1, p**a1 + 1):
            for u2 in range(1, 2 * p**a2 + 1):
                vector = ParamVector(*astuple(prefix), u1, u2)
                if validate_params(vector).valid:
                    count += 1
                    yield vector
    logger.info("enumerated %d vectors for p=%d", count, p)
