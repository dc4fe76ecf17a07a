"""
Circulant graphs Cay(Z_n; S).

Vertices are the residues 0..n-1. Labels (1..n) never appear in this module;
keeping the two ranges apart avoids off-by-one mix-ups further up.

Classes:
    - CirculantSpec: order n and an inverse-closed connection set S.
    - CanonicalForm: a valency-5 presentation {+-1, +-c, n/2} reached by a unit.

Functions:
    - make_spec: inverse closure of a generator list.
    - closed_neighborhood, is_connected, edge_list, adjacency_matrix.
    - canonical_forms_valency5: every (n, c) reachable by a unit multiplier.
"""
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable

import numpy as np

from .arith import units
from .errors import InvalidSpecError


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    S: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise InvalidSpecError(f"order must be at least 2: got {self.n}")
        if tuple(sorted(set(self.S))) != tuple(self.S):
            raise InvalidSpecError(f"connection set must be sorted and duplicate free: {self.S}")
        for s in self.S:
            if not 0 < s < self.n:
                raise InvalidSpecError(f"connection set element {s} outside 1..{self.n - 1}")
            if (self.n - s) not in self._members:
                raise InvalidSpecError(f"connection set is not inverse-closed: {s} without {self.n - s}")

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.S)

    @property
    def valency(self) -> int:
        return len(self.S)

    @property
    def involution(self) -> int | None:
        """The self-inverse element n/2 when it is in S."""
        if self.n % 2 == 0 and self.n // 2 in self._members:
            return self.n // 2
        return None

    def __contains__(self, s: int) -> bool:
        return s in self._members

    def multiply(self, q: int) -> "CirculantSpec":
        """Image of S under x -> q*x (an isomorphism when gcd(q, n) == 1)."""
        return CirculantSpec(self.n, tuple(sorted({q * s % self.n for s in self.S})))

    def as_dict(self) -> dict:
        return {"n": self.n, "S": list(self.S)}


@dataclass(frozen=True)
class CanonicalForm:
    """Cay(Z_n; {+-1, +-c, n/2}) with 1 < c < n/2, reached by multiplying S by a unit."""

    n: int
    c: int
    multiplier: int

    def __post_init__(self):
        if self.n % 2 or not 1 < self.c < self.n // 2:
            raise InvalidSpecError(f"canonical form needs even n and 1 < c < n/2: got ({self.n}, {self.c})")
        if gcd(self.multiplier, self.n) != 1:
            raise InvalidSpecError(f"multiplier {self.multiplier} is not a unit mod {self.n}")

    @property
    def spec(self) -> CirculantSpec:
        return canonical_spec(self.n, self.c)


def make_spec(n: int, generators: Iterable[int]) -> CirculantSpec:
    """
    Build Cay(Z_n; S) where S is the inverse closure of the generators.

    Raises:
        InvalidSpecError: If n < 2 or a generator is 0 (mod n) or outside 1..n-1.
    """
    if n < 2:
        raise InvalidSpecError(f"order must be at least 2: got {n}")
    closed = set()
    for g in generators:
        if not 0 < g < n:
            raise InvalidSpecError(f"generator {g} outside 1..{n - 1}")
        closed.add(g)
        closed.add(n - g)
    return CirculantSpec(n, tuple(sorted(closed)))


def canonical_spec(n: int, c: int) -> CirculantSpec:
    return make_spec(n, (1, c, n // 2))


def closed_neighborhood(spec: CirculantSpec, x: int) -> frozenset[int]:
    if not 0 <= x < spec.n:
        raise InvalidSpecError(f"vertex {x} outside 0..{spec.n - 1}")
    return frozenset([x, *((x + s) % spec.n for s in spec.S)])


def closed_neighborhoods(spec: CirculantSpec) -> list[tuple[int, ...]]:
    """N[x] for every x, each as (x, x+s for s in S) in connection-set order."""
    n = spec.n
    return [(x, *((x + s) % n for s in spec.S)) for x in range(n)]


def is_connected(spec: CirculantSpec) -> bool:
    return reduce(gcd, spec.S, spec.n) == 1


def edge_list(spec: CirculantSpec) -> list[tuple[int, int]]:
    """Every undirected edge once, as (x, y) with x < y."""
    n = spec.n
    return [(x, y) for x in range(n) for s in spec.S if x < (y := (x + s) % n)]


def adjacency_matrix(spec: CirculantSpec) -> np.ndarray:
    n = spec.n
    matrix = np.zeros((n, n), dtype=np.int64)
    rows = np.arange(n)
    for s in spec.S:
        matrix[rows, (rows + s) % n] = 1
    return matrix


def canonical_forms_valency5(spec: CirculantSpec) -> list[CanonicalForm]:
    """
    All distinct (n, c) with q*S = {+-1, +-c, n/2} for some unit q.

    The smallest such multiplier is kept for each c. The list is empty iff
    neither generator pair of S is coprime to n.

    Raises:
        InvalidSpecError: If spec is not valency 5 with n/2 in S.
    """
    n = spec.n
    if spec.valency != 5 or spec.involution is None:
        raise InvalidSpecError(f"canonical forms need valency 5 with n/2 in S: got n={n}, S={spec.S}")
    half = n // 2
    found: dict[int, CanonicalForm] = {}
    for q in units(n):
        image = {q * s % n for s in spec.S}
        if 1 not in image:
            continue
        rest = image - {1, n - 1, half}
        c = min(rest)
        if c not in found:
            found[c] = CanonicalForm(n=n, c=c, multiplier=q)
    return [found[c] for c in sorted(found)]
