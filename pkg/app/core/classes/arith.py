import logging
from functools import lru_cache

from sympy import factorint, isprime, multiplicity, n_order

from app.core.classes.errors import NotCoprimeError, NotPrimeError
from app.core.Interfaces.arith_interface import INFINITY, Residue, Valuation

logger = logging.getLogger(__name__)

# Exhaustive search in geom_sum_invert is allowed only for p**m up to this size.
_EXHAUSTIVE_LIMIT = 5**4


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    return p


@lru_cache(maxsize=None)
def split_prime_power(modulus: int) -> tuple[int, int]:
    """Returns (p, k) with modulus == p**k; (1, 0) for modulus 1."""
    if modulus == 1:
        return 1, 0
    factors = factorint(modulus)
    if len(factors) != 1:
        raise NotPrimeError(f"{modulus} is not a prime power")
    ((p, k),) = factors.items()
    return int(p), int(k)


def vp(n: int, p: int) -> Valuation:
    check_prime(p)
    if n == 0:
        return INFINITY
    return int(multiplicity(p, abs(n)))


def vp_capped(n: int, p: int, cap: int) -> int:
    """min(vp(n, p), cap) as a plain int."""
    value = vp(n, p)
    return cap if value >= cap else int(value)


def mult_order(s: int, modulus: int) -> int:
    if modulus == 1:
        return 1
    p, _ = split_prime_power(modulus)
    if s % p == 0:
        raise NotCoprimeError(f"{s} is not a unit modulo {modulus}")
    return int(n_order(s % modulus, modulus))


def _geom_sum_value(s: int, n: int, modulus: int) -> tuple[int, int]:
    # (S(s, n), s**n) mod modulus, walking the bits of n.
    total, power = 0, 1
    for bit in bin(n)[2:] if n > 0 else "":
        total = total * (1 + power) % modulus
        power = power * power % modulus
        if bit == "1":
            total = (1 + s * total) % modulus
            power = power * s % modulus
    return total, power


def geom_sum(s: int, n: int, modulus: int) -> Residue:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return Residue(_geom_sum_value(s, n, modulus)[0], modulus)


def double_sum(s: int, t: int, n: int, modulus: int) -> Residue:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    # T(a+b) = T(a) + t^a S(s,a) S(t,b) + t^a s^a T(b)
    sum_s, sum_t, pow_s, pow_t, total = 0, 0, 1, 1, 0
    for bit in bin(n)[2:] if n > 0 else "":
        total = (
            total + pow_t * sum_s * sum_t + pow_t * pow_s * total
        ) % modulus
        sum_s = sum_s * (1 + pow_s) % modulus
        sum_t = sum_t * (1 + pow_t) % modulus
        pow_s = pow_s * pow_s % modulus
        pow_t = pow_t * pow_t % modulus
        if bit == "1":
            total = (total + pow_t * sum_s) % modulus
            sum_s = (sum_s + pow_s) % modulus
            sum_t = (sum_t + pow_t) % modulus
            pow_s = pow_s * s % modulus
            pow_t = pow_t * t % modulus
    return Residue(total, modulus)


def geom_sum_invert(r: int, x: Residue) -> int:
    """The unique y in [0, p**m) with S(r, y) == x mod p**m, for r == 1 mod p."""
    p, m = split_prime_power(x.modulus)
    if m == 0:
        return 0
    if r % p != 1:
        raise ValueError(f"{r} is not congruent to 1 modulo {p}")
    y = 0
    step = 1
    for k in range(1, m + 1):
        modulus = step * p
        for digit in range(p):
            candidate = y + digit * step
            if _geom_sum_value(r, candidate, modulus)[0] == x.value % modulus:
                y = candidate
                break
        else:
            return _exhaustive_invert(r, x)
        step = modulus
    return y


def _exhaustive_invert(r: int, x: Residue) -> int:
    if x.modulus > _EXHAUSTIVE_LIMIT:
        raise ArithmeticError(f"no preimage of {x.value} under S({r}, -)")
    logger.debug("digit lifting failed for r=%d, searching exhaustively", r)
    for y in range(x.modulus):
        if _geom_sum_value(r, y, x.modulus)[0] == x.value:
            return y
    raise ArithmeticError(f"no preimage of {x.value} under S({r}, -)")
