"""Dense resultants of square homogeneous polynomial systems.

For n homogeneous polynomials in n variables of degrees d_1..d_n, build
the classical pair of matrices on the monomials of total degree
D = sum(d_i - 1) + 1: each monomial mu owns one row, filled with the
coefficients of (mu / x_i**d_i) * f_i for the least variable index i
with x_i**d_i dividing mu.  The resultant is det(M) / det(M') where M'
restricts rows and columns to the monomials divisible by x_i**d_i for
two or more distinct i.  det(M') can vanish identically for sparse
systems; callers escape through simultaneous (polynomial, variable)
permutations and determinant-one changes of variables, both of which
leave the resultant value unchanged.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .determinants import det_exact
from .errors import (
    CapExceeded,
    DegenerateMinor,
    DimMismatch,
    InputError,
    NotHomogeneous,
    NotSquareSystem,
)
from .polynomial import MultiPoly


@dataclass(frozen=True)
class PolySystem:
    """Square homogeneous system: polys[i] is homogeneous of degrees[i]."""

    nvars: int
    polys: tuple[MultiPoly, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.polys) != self.nvars or len(self.degrees) != self.nvars:
            raise NotSquareSystem(
                f"{len(self.polys)} polynomials, {len(self.degrees)} degrees, "
                f"{self.nvars} variables"
            )
        for i, (poly, degree) in enumerate(zip(self.polys, self.degrees)):
            if degree < 1:
                raise InputError(f"degree of polynomial {i} must be positive")
            if poly.nvars != self.nvars:
                raise DimMismatch(
                    f"polynomial {i} lives in {poly.nvars} variables, "
                    f"system has {self.nvars}"
                )
            if not poly.is_homogeneous(degree):
                raise NotHomogeneous(
                    f"polynomial {i} is not homogeneous of degree {degree}"
                )

    def permute_pairs(self, order: Sequence[int]) -> "PolySystem":
        """New slot j carries old (polynomial, variable) pair order[j]."""
        polys = tuple(self.polys[order[j]].permute_vars(order) for j in range(self.nvars))
        degrees = tuple(self.degrees[order[j]] for j in range(self.nvars))
        return PolySystem(self.nvars, polys, degrees)

    def substitute_linear(self, matrix: Sequence[Sequence[int]]) -> "PolySystem":
        return PolySystem(
            self.nvars,
            tuple(p.substitute_linear(matrix) for p in self.polys),
            self.degrees,
        )


def monomial_basis(nvars: int, total: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), total):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    return tuple(sorted(out))


@dataclass(frozen=True)
class MacaulayStructure:
    """Combinatorial skeleton shared by every system with these degrees."""

    nvars: int
    degrees: tuple[int, ...]
    total_degree: int
    monomials: tuple[tuple[int, ...], ...]
    assignment: tuple[int, ...]
    nonreduced: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.monomials)

    def column(self, mono: tuple[int, ...]) -> int:
        return _column_index(self.nvars, self.total_degree)[mono]


@lru_cache(maxsize=None)
def _column_index(nvars: int, total: int) -> dict[tuple[int, ...], int]:
    return {m: j for j, m in enumerate(monomial_basis(nvars, total))}


def _assign(mono: tuple[int, ...], degrees: tuple[int, ...]) -> int:
    for i, d in enumerate(degrees):
        if mono[i] >= d:
            return i
    raise AssertionError("degree-D monomial with no owning variable")


@lru_cache(maxsize=None)
def macaulay_structure(nvars: int, degrees: tuple[int, ...]) -> MacaulayStructure:
    total = sum(d - 1 for d in degrees) + 1
    monos = monomial_basis(nvars, total)
    assignment = tuple(_assign(m, degrees) for m in monos)
    nonreduced = tuple(
        j
        for j, m in enumerate(monos)
        if sum(1 for i, d in enumerate(degrees) if m[i] >= d) >= 2
    )
    return MacaulayStructure(nvars, degrees, total, monos, assignment, nonreduced)


def macaulay_dim(nvars: int, degrees: Sequence[int]) -> int:
    total = sum(d - 1 for d in degrees) + 1
    return comb(total + nvars - 1, nvars - 1)


@dataclass(frozen=True)
class MacaulayPair:
    structure: MacaulayStructure
    matrix: tuple[tuple[Fraction, ...], ...]
    minor: tuple[tuple[Fraction, ...], ...]


def macaulay_pair(system: PolySystem, dim_cap: int | None = None) -> MacaulayPair:
    if dim_cap is not None:
        size = macaulay_dim(system.nvars, system.degrees)
        if size > dim_cap:
            raise CapExceeded(f"matrix dimension {size} exceeds cap {dim_cap}")
    structure = macaulay_structure(system.nvars, system.degrees)
    index = _column_index(system.nvars, structure.total_degree)
    size = structure.size
    rows = []
    for r, mono in enumerate(structure.monomials):
        i = structure.assignment[r]
        shift = list(mono)
        shift[i] -= system.degrees[i]
        row = [Fraction(0)] * size
        for exp, coeff in system.polys[i].terms.items():
            col = index[tuple(s + e for s, e in zip(shift, exp))]
            row[col] = coeff
        rows.append(tuple(row))
    minor = tuple(
        tuple(rows[r][c] for c in structure.nonreduced) for r in structure.nonreduced
    )
    return MacaulayPair(structure, tuple(rows), minor)


def resultant_value(
    system: PolySystem, *, prime_seed: int = 0, dim_cap: int | None = None
) -> Fraction:
    """Exact resultant of one numeric system; raises DegenerateMinor if stuck."""
    if any(p.is_zero() for p in system.polys):
        return Fraction(0)
    pair = macaulay_pair(system, dim_cap=dim_cap)
    det_minor = det_exact(pair.minor, prime_seed=prime_seed)
    if det_minor == 0:
        raise DegenerateMinor(
            "divisor determinant vanished; try a transformed system"
        )
    det_full = det_exact(pair.matrix, prime_seed=prime_seed)
    return det_full / det_minor


def rotation_order(nvars: int, shift: int) -> tuple[int, ...]:
    return tuple((j + shift) % nvars for j in range(nvars))


def unimodular_matrix(nvars: int, attempt: int) -> list[list[int]]:
    """Deterministic determinant-one integer matrix; denser with each attempt."""
    matrix = [[1 if i == j else 0 for j in range(nvars)] for i in range(nvars)]
    if nvars < 2:
        return matrix
    rng = random.Random(9176 + 1009 * attempt + nvars)
    for _ in range(2 * nvars + attempt):
        i, j = rng.sample(range(nvars), 2)
        c = rng.choice((1, -1, 2))
        for col in range(nvars):
            matrix[i][col] += c * matrix[j][col]
    return matrix


MAX_SHEAR_ATTEMPTS = 6


def system_variants(system: PolySystem):
    """Deterministic ladder of resultant-preserving reformulations.

    The plain system first, then the cyclic pair rotations, then shears
    by determinant-one matrices.  Every variant has exactly the same
    resultant, so callers may use whichever evaluates cleanly.
    """
    yield system
    for shift in range(1, min(system.nvars, 4)):
        yield system.permute_pairs(rotation_order(system.nvars, shift))
    for attempt in range(MAX_SHEAR_ATTEMPTS):
        yield system.substitute_linear(unimodular_matrix(system.nvars, attempt))
