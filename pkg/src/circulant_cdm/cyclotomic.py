"""
Exact arithmetic in Z[x]/(Phi_n), where x stands for a primitive n-th root of unity.

Phi_n is built by dividing x^n - 1 by the product of Phi_d over the proper
divisors d of n. That product, Psi_n = (x^n - 1)/Phi_n, is kept as well: a
polynomial P of degree < n vanishes at a primitive n-th root of unity iff
x^n - 1 divides P * Psi_n, which is a cyclic convolution of length n.
"""
from dataclasses import dataclass
from threading import Lock
from typing import Iterable

import numpy as np
from sympy import Poly, divisors, symbols, totient

x = symbols("x")

_cache: dict[int, tuple[Poly, Poly]] = {}
_cofactor_rows: dict[int, np.ndarray] = {}
_lock = Lock()


def _phi_and_cofactor(n: int) -> tuple[Poly, Poly]:
    with _lock:
        cached = _cache.get(n)
    if cached is not None:
        return cached
    cofactor = Poly(1, x, domain="ZZ")
    for d in divisors(n)[:-1]:
        cofactor = cofactor * _phi_and_cofactor(d)[0]
    phi = Poly(x**n - 1, x, domain="ZZ").exquo(cofactor)
    with _lock:
        _cache.setdefault(n, (phi, cofactor))
        return _cache[n]


def cyclotomic_poly(n: int) -> Poly:
    """
    The n-th cyclotomic polynomial as an integer Poly in x.

    Raises:
        ValueError: If n < 1.
    """
    if n < 1:
        raise ValueError(f"cyclotomic_poly needs n >= 1: got {n}")
    return _phi_and_cofactor(n)[0]


def _cofactor_row(m: int) -> np.ndarray:
    """Coefficients of Psi_m in ascending order, zero padded to length m."""
    with _lock:
        row = _cofactor_rows.get(m)
    if row is not None:
        return row
    coeffs = [int(a) for a in reversed(_phi_and_cofactor(m)[1].all_coeffs())]
    # Psi_m has small coefficients; int64 only fails for astronomically large m
    dtype = np.int64 if max(abs(a) for a in coeffs) < 2**40 else object
    row = np.zeros(m, dtype=dtype)
    row[:len(coeffs)] = coeffs
    with _lock:
        _cofactor_rows.setdefault(m, row)
        return _cofactor_rows[m]


def vanishes_at_primitive_root(m: int, exponents: Iterable[int]) -> bool:
    """
    True iff sum(w**e for e in exponents) == 0 for a primitive m-th root w.

    Exponents are taken mod m and may repeat.
    """
    if m < 1:
        raise ValueError(f"conductor must be positive: got {m}")
    row = _cofactor_row(m)
    acc = np.zeros(m, dtype=row.dtype)
    for e in exponents:
        acc += np.roll(row, e % m)
    return not acc.any()


def _padded(poly: Poly, length: int) -> tuple[int, ...]:
    coeffs = [int(a) for a in reversed(poly.all_coeffs())]
    if coeffs == [0]:
        coeffs = []
    return tuple(coeffs + [0] * (length - len(coeffs)))


@dataclass(frozen=True)
class CyclotomicResidue:
    """
    An element of Z[x]/(Phi_n) in its unique reduced form.

    coeffs holds the ascending coefficients of the remainder, padded to
    totient(n) entries. The zero residue has only zero coefficients.
    """

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"conductor must be positive: got {self.n}")
        if len(self.coeffs) != totient(self.n):
            raise ValueError(f"residue mod Phi_{self.n} needs {totient(self.n)} coefficients: got {len(self.coeffs)}")

    @classmethod
    def from_poly(cls, n: int, poly: Poly) -> "CyclotomicResidue":
        phi = cyclotomic_poly(n)
        return cls(n, _padded(poly.rem(phi), phi.degree()))

    @classmethod
    def from_exponents(cls, n: int, exponents: Iterable[int]) -> "CyclotomicResidue":
        """Residue of sum(x**(e mod n)); exponents may repeat."""
        terms: dict[tuple[int], int] = {}
        for e in exponents:
            key = (e % n,)
            terms[key] = terms.get(key, 0) + 1
        return cls.from_poly(n, Poly.from_dict(terms or {(0,): 0}, x, domain="ZZ"))

    @classmethod
    def root_power(cls, n: int, k: int) -> "CyclotomicResidue":
        return cls.from_exponents(n, [k])

    def as_poly(self) -> Poly:
        return Poly(list(reversed(self.coeffs)) or [0], x, domain="ZZ")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "CyclotomicResidue") -> None:
        if not isinstance(other, CyclotomicResidue) or other.n != self.n:
            raise TypeError("residues must share the conductor")

    def __add__(self, other: "CyclotomicResidue") -> "CyclotomicResidue":
        self._check(other)
        return CyclotomicResidue(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CyclotomicResidue":
        return CyclotomicResidue(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CyclotomicResidue") -> "CyclotomicResidue":
        return self + (-other)

    def __mul__(self, other: "CyclotomicResidue") -> "CyclotomicResidue":
        self._check(other)
        return CyclotomicResidue.from_poly(self.n, self.as_poly() * other.as_poly())
