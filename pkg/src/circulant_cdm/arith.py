"""
Integer helpers for canonical forms and the family predicates.

Everything here works on Python ints, so products such as 2(c^2 - 1) never
overflow regardless of the order n.
"""
from dataclasses import dataclass
from math import gcd

from sympy import isprime


@dataclass(frozen=True)
class TwoAdicSplit:
    """m = 2**t * odd with odd odd."""

    t: int
    odd: int

    def __post_init__(self):
        if self.t < 0 or self.odd < 1 or self.odd % 2 == 0:
            raise ValueError(f"invalid 2-adic split: t={self.t}, odd={self.odd}")

    @property
    def value(self) -> int:
        return self.odd << self.t


@dataclass(frozen=True)
class DecompositionWitness:
    """
    Factorisation data of a canonical valency-5 pair (n, c).

    With n = 2^t * ell, c + 1 = 2^alpha * ell1 and c - 1 = 2^beta * ell2,
    d1 = gcd(ell, ell1), d2 = gcd(ell, ell2) and the cofactors satisfy
    ell = d1 * n1 = d2 * n2, ell1 = d1 * m1, ell2 = d2 * m2.
    """

    n: int
    c: int
    t: int
    ell: int
    alpha: int
    ell1: int
    beta: int
    ell2: int
    d1: int
    d2: int
    n1: int
    n2: int
    m1: int
    m2: int

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}


def two_adic_split(m: int) -> TwoAdicSplit:
    """
    Split a positive integer into its 2-part exponent and odd part.

    Args:
        m (int): A positive integer.

    Returns:
        TwoAdicSplit: (t, odd) with m == 2**t * odd.

    Raises:
        ValueError: If m is not positive.
    """
    if m < 1:
        raise ValueError(f"two_adic_split needs m >= 1: got {m}")
    t = (m & -m).bit_length() - 1
    return TwoAdicSplit(t=t, odd=m >> t)


def p_part(m: int, p: int) -> int:
    """
    Largest power of the prime p dividing m.

    Raises:
        ValueError: If m < 1 or p is not prime.
    """
    if m < 1:
        raise ValueError(f"p_part needs m >= 1: got {m}")
    if not isprime(p):
        raise ValueError(f"p_part needs a prime: got {p}")
    part = 1
    while m % p == 0:
        m //= p
        part *= p
    return part


def units(n: int) -> list[int]:
    """Residues q in 1..n-1 with gcd(q, n) == 1, ascending (empty for n == 1)."""
    if n < 1:
        raise ValueError(f"units needs n >= 1: got {n}")
    return [q for q in range(1, n) if gcd(q, n) == 1]


def decomposition_witness(n: int, c: int) -> DecompositionWitness:
    """
    Build the factorisation witness for the canonical pair (n, c).

    Raises:
        ValueError: If n is odd or c is not in the open interval (1, n/2).
    """
    if n % 2 or not 1 < c < n // 2:
        raise ValueError(f"decomposition_witness needs even n and 1 < c < n/2: got n={n}, c={c}")
    n_split = two_adic_split(n)
    plus = two_adic_split(c + 1)
    minus = two_adic_split(c - 1)
    ell = n_split.odd
    d1 = gcd(ell, plus.odd)
    d2 = gcd(ell, minus.odd)
    return DecompositionWitness(
        n=n, c=c,
        t=n_split.t, ell=ell,
        alpha=plus.t, ell1=plus.odd,
        beta=minus.t, ell2=minus.odd,
        d1=d1, d2=d2,
        n1=ell // d1, n2=ell // d2,
        m1=plus.odd // d1, m2=minus.odd // d2,
    )
