"""Modular determinants and Chinese-remainder reconstruction.

Moduli come from a fixed, deterministic list of primes counting down
from 2**31 - 1.  Keeping every modulus below 2**31 lets Gaussian
elimination run vectorized in int64: products of two reduced values
stay under 2**62, safely inside the int64 range.  A seed offset picks a
different window of the same list; the reconstructed rational is the
same for every seed, which makes cross-seed agreement a cheap
consistency check.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

import numpy as np

from .errors import BadPrime, InputError, InsufficientModuli

PRIME_LIMIT = 2**31

_MR_BASES = (2, 3, 5, 7)  # deterministic below 3,215,031,751


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIMES: list[int] = []


def _extend_primes(count: int) -> None:
    candidate = _PRIMES[-1] - 2 if _PRIMES else PRIME_LIMIT - 1
    while len(_PRIMES) < count:
        if is_prime(candidate):
            _PRIMES.append(candidate)
        candidate -= 2


def nth_prime(index: int) -> int:
    """index-th modulus (0-based) of the fixed descending list."""
    if index < 0:
        raise InputError("prime index must be non-negative")
    if index >= len(_PRIMES):
        _extend_primes(index + 1)
    return _PRIMES[index]


def primes_for_bound(bound: int, seed: int = 0) -> list[int]:
    """Moduli starting at offset ``seed`` whose product exceeds ``bound``."""
    if bound < 1:
        bound = 1
    out: list[int] = []
    product = 1
    index = seed
    while product <= bound:
        p = nth_prime(index)
        out.append(p)
        product *= p
        index += 1
    return out


def _det_mod_i64(a: np.ndarray, p: int) -> int:
    """Determinant mod p of an int64 array with entries already in [0, p)."""
    a = a.copy()
    n = a.shape[0]
    det = 1
    for col in range(n):
        nz = np.nonzero(a[col:, col])[0]
        if nz.size == 0:
            return 0
        pivot_row = col + int(nz[0])
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            det = p - det
        pivot = int(a[col, col])
        det = det * pivot % p
        if col + 1 < n:
            inv = pow(pivot, -1, p)
            factors = a[col + 1 :, col] * inv % p
            a[col + 1 :, col + 1 :] = (
                a[col + 1 :, col + 1 :] - factors[:, None] * a[col, col + 1 :]
            ) % p
    return det


def _check_prime(p: int) -> None:
    if p < 3 or p >= PRIME_LIMIT or not is_prime(p):
        raise BadPrime(f"modulus must be an odd prime below 2**31, got {p}")


def det_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    """Determinant of an integer matrix modulo an odd prime below 2**31."""
    _check_prime(p)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError("matrix must be square")
    if n == 0:
        return 1 % p
    a = np.array([[int(v) % p for v in row] for row in rows], dtype=np.int64)
    return _det_mod_i64(a, p)


def mat_mod(rows: Sequence[Sequence[Fraction]], p: int) -> list[list[int]]:
    """Entrywise reduction of a rational matrix modulo p."""
    _check_prime(p)
    out = []
    for row in rows:
        r = []
        for value in row:
            v = Fraction(value)
            if v.denominator % p == 0:
                raise BadPrime(f"denominator of {v} vanishes mod {p}")
            r.append(v.numerator * pow(v.denominator, -1, p) % p)
        out.append(r)
    return out


def crt_combine(residues: Sequence[int], moduli: Sequence[int]) -> tuple[int, int]:
    """Combined residue and modulus; moduli must be pairwise coprime."""
    if len(residues) != len(moduli) or not moduli:
        raise InputError("need equally many residues and moduli, at least one")
    r, m = residues[0] % moduli[0], moduli[0]
    for r2, m2 in zip(residues[1:], moduli[1:]):
        g = gcd(m, m2)
        if g != 1:
            raise InputError(f"moduli {m} and {m2} share factor {g}")
        # r + m*t == r2 (mod m2)
        t = (r2 - r) * pow(m, -1, m2) % m2
        r += m * t
        m *= m2
        r %= m
    return r, m


def symmetric_residue(r: int, m: int) -> int:
    """Representative of r mod m in (-m/2, m/2]."""
    r %= m
    return r - m if r > m // 2 else r


def crt_reconstruct(
    residues: Sequence[int],
    moduli: Sequence[int],
    num_bound: int | None = None,
    den_bound: int | None = None,
) -> Fraction:
    """Rational p/q with q > 0 congruent to the residues, |p|, q in bounds.

    With no explicit bounds both default to isqrt((M - 1) / 2), the largest
    balanced choice satisfying 2 * N * D < M, which makes the answer unique.
    Raises InsufficientModuli when no admissible rational exists.
    """
    r, m = crt_combine(residues, moduli)
    if num_bound is None and den_bound is None:
        num_bound = den_bound = isqrt((m - 1) // 2)
    elif num_bound is None or den_bound is None:
        raise InputError("give both bounds or neither")
    if num_bound < 0 or den_bound < 1:
        raise InputError("bounds must allow at least the integers 0..N")
    if 2 * num_bound * den_bound >= m:
        raise InsufficientModuli(
            f"modulus {m} too small for bounds ({num_bound}, {den_bound})"
        )

    v0, v1 = m, r
    t0, t1 = 0, 1
    while v1 > num_bound:
        q = v0 // v1
        v0, v1 = v1, v0 - q * v1
        t0, t1 = t1, t0 - q * t1
    num, den = v1, t1
    if den < 0:
        num, den = -num, -den
    if den == 0 or den > den_bound or gcd(abs(num), den) != 1:
        raise InsufficientModuli(
            f"no rational within bounds ({num_bound}, {den_bound}) mod {m}"
        )
    if (num - den * r) % m != 0:
        raise InsufficientModuli("reconstruction check failed")
    return Fraction(num, den)
