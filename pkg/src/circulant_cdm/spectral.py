"""
Characters, eigenvalues and the -1 eigenspace of circulants.

The eigenvalues of Cay(Z_n; S) are chi_j(S) = sum_{s in S} w^(j*s) with w a
primitive n-th root of unity. Whether chi_j(S) == -1 is decided exactly:
chi_j(S) + 1 is the polynomial sum_{s in S u {0}} x^(j*s mod n) evaluated
at w, and w^j is a primitive (n / gcd(n, j))-th root, so the test reduces to
divisibility by a cyclotomic polynomial. Floating values are for display.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd, lcm, pi
from typing import TYPE_CHECKING, Sequence

import numpy as np

from ._SETTINGS import FLOAT_TOLERANCE
from .circulant import CanonicalForm, CirculantSpec, closed_neighborhoods
from .cyclotomic import CyclotomicResidue, vanishes_at_primitive_root

if TYPE_CHECKING:
    from .labeler import Labeling


class CharacterType(str, Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3_PLUS = "Type3Plus"
    TYPE3_MINUS = "Type3Minus"


class CosineFamily(str, Enum):
    FAMILY1 = "Family1"  # r2 = 1/2, r3 = 1 - r1
    FAMILY2 = "Family2"  # r2 = 2/3 - r1, r3 = 2/3 + r1
    EXCEPTIONAL = "Exceptional"


class RefusalKind(str, Enum):
    PARITY_INFEASIBLE = "ParityInfeasible"
    NO_MINUS_ONE_EIGENVALUE = "NoMinusOneEigenvalue"
    SEPARATION_GCD = "SeparationGcd"


@dataclass(frozen=True)
class AdmissibleSet:
    n: int
    members: tuple[int, ...]

    def __contains__(self, j: int) -> bool:
        return j in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class CharacterTypeSet:
    j: int
    types: frozenset[CharacterType]

    def names(self) -> list[str]:
        return sorted(t.value for t in self.types)


@dataclass(frozen=True)
class RationalCosineTriple:
    r1: Fraction
    r2: Fraction
    r3: Fraction

    def __post_init__(self):
        for name in ("r1", "r2", "r3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not 0 <= self.r1 <= self.r2 <= self.r3 <= 1:
            raise ValueError(f"triple must satisfy 0 <= r1 <= r2 <= r3 <= 1: got {self.as_tuple()}")

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.r1, self.r2, self.r3


@dataclass(frozen=True)
class Refusal:
    """A failed necessary condition for closed distance magic."""

    kind: RefusalKind
    gcd: int | None = None

    def __str__(self):
        return f"{self.kind.value}({self.gcd})" if self.gcd is not None else self.kind.value


@dataclass(frozen=True)
class SpectrumRow:
    j: int
    eigenvalue: float
    admissible: bool
    types: tuple[str, ...] | None

    def as_dict(self) -> dict:
        return {"j": self.j, "eigenvalue": self.eigenvalue, "admissible": self.admissible,
                "types": list(self.types) if self.types is not None else None}


def _check_index(spec: CirculantSpec, j: int) -> None:
    if not 0 <= j < spec.n:
        raise ValueError(f"character index {j} outside 0..{spec.n - 1}")


def character_residue(spec: CirculantSpec, j: int) -> CyclotomicResidue:
    """chi_j(S) + 1 as an element of Z[x]/(Phi_n)."""
    _check_index(spec, j)
    return CyclotomicResidue.from_exponents(spec.n, (j * s for s in (0, *spec.S)))


def is_admissible(spec: CirculantSpec, j: int) -> bool:
    """Exact test of chi_j(S) == -1."""
    _check_index(spec, j)
    g = gcd(j, spec.n)
    conductor = spec.n // g
    step = j // g
    return vanishes_at_primitive_root(conductor, (step * s for s in (0, *spec.S)))


def admissible_set(spec: CirculantSpec) -> AdmissibleSet:
    return AdmissibleSet(spec.n, tuple(j for j in range(1, spec.n) if is_admissible(spec, j)))


def minus_one_multiplicity(spec: CirculantSpec) -> int:
    return len(admissible_set(spec))


def eigenvalue_approx(spec: CirculantSpec, j: int) -> float:
    """Floating chi_j(S); imaginary parts cancel because S is inverse-closed."""
    _check_index(spec, j)
    residues = np.array([j * s % spec.n for s in spec.S], dtype=np.float64)
    return float(np.cos(2 * pi * residues / spec.n).sum())


def eigenvalues_approx(spec: CirculantSpec) -> np.ndarray:
    """eigenvalue_approx for every j at once."""
    n = spec.n
    js = np.arange(n, dtype=np.int64)[:, None]
    residues = (js * np.asarray(spec.S, dtype=np.int64)[None, :]) % n
    return np.cos(2 * pi * residues / n).sum(axis=1)


def exact_float_mismatches(spec: CirculantSpec, tolerance: float = FLOAT_TOLERANCE) -> list[int]:
    """Indices where the exact admissibility bit and |eigenvalue + 1| < tolerance disagree."""
    values = eigenvalues_approx(spec)
    return [j for j in range(spec.n) if is_admissible(spec, j) != (abs(values[j] + 1) < tolerance)]


def separation_gcd(n: int, admissible: AdmissibleSet) -> int:
    """
    gcd(n, J). A value g > 1 means chi_j(0) == chi_j(n/g) for every
    admissible j, so no -1 eigenvector separates 0 from n/g.
    """
    return reduce(gcd, admissible.members, n)


def refusal_reason(spec: CirculantSpec) -> Refusal | None:
    """First failed necessary condition, or None when all of them hold."""
    if (spec.valency + 1) * (spec.n + 1) % 2:
        return Refusal(RefusalKind.PARITY_INFEASIBLE)
    admissible = admissible_set(spec)
    if not admissible.members:
        return Refusal(RefusalKind.NO_MINUS_ONE_EIGENVALUE)
    g = separation_gcd(spec.n, admissible)
    if g > 1:
        return Refusal(RefusalKind.SEPARATION_GCD, g)
    return None


def classify_types(canon: CanonicalForm, j: int) -> CharacterTypeSet:
    """
    Congruence shapes of an admissible index for Cay(Z_n; {+-1, +-c, n/2}).

    Raises:
        ValueError: If j is not admissible for the canonical spec.
    """
    n, c = canon.n, canon.c
    if not is_admissible(canon.spec, j):
        raise ValueError(f"index {j} is not admissible for (n={n}, c={c})")
    types = set()
    if j % 2:
        if (2 * j * (c + 1) - n) % (2 * n) == 0:
            types.add(CharacterType.TYPE3_PLUS)
        if (2 * j * (c - 1) - n) % (2 * n) == 0:
            types.add(CharacterType.TYPE3_MINUS)
        return CharacterTypeSet(j, frozenset(types))
    a, b = j % n, j * c % n
    if n % 3 == 0:
        thirds = {n // 3, 2 * n // 3}
        if a in thirds and b in thirds:
            types.add(CharacterType.TYPE2)
    if n % 4 == 0:
        half, quarters = n // 2, {n // 4, 3 * n // 4}
        if (a == half and b in quarters) or (b == half and a in quarters):
            types.add(CharacterType.TYPE1)
    return CharacterTypeSet(j, frozenset(types))


def _canonical_c(spec: CirculantSpec) -> int | None:
    """c when spec is literally {+-1, +-c, n/2}."""
    if spec.valency != 5 or spec.involution is None or 1 not in spec:
        return None
    return min(set(spec.S) - {1, spec.n - 1, spec.n // 2})


def spectrum(spec: CirculantSpec) -> list[SpectrumRow]:
    values = eigenvalues_approx(spec)
    c = _canonical_c(spec)
    canon = CanonicalForm(spec.n, c, 1) if c is not None else None
    rows = []
    for j in range(spec.n):
        admissible = is_admissible(spec, j)
        types = None
        if canon is not None:
            types = tuple(classify_types(canon, j).names()) if admissible else ()
        rows.append(SpectrumRow(j, float(values[j]), admissible, types))
    return rows


def classify_cosine_triple(triple: RationalCosineTriple) -> frozenset[CosineFamily]:
    """Families of rational solutions of cos(r1 pi) + cos(r2 pi) + cos(r3 pi) = 0 containing the triple."""
    r1, r2, r3 = triple.as_tuple()
    half, third, two_thirds = Fraction(1, 2), Fraction(1, 3), Fraction(2, 3)
    families = set()
    if r1 <= half and r2 == half and r3 == 1 - r1:
        families.add(CosineFamily.FAMILY1)
    if r1 <= third and r2 == two_thirds - r1 and r3 == two_thirds + r1:
        families.add(CosineFamily.FAMILY2)
    if (r1, r2, r3) in _EXCEPTIONAL_TRIPLES:
        families.add(CosineFamily.EXCEPTIONAL)
    return frozenset(families)


_EXCEPTIONAL_TRIPLES = {
    (Fraction(1, 5), Fraction(3, 5), Fraction(2, 3)),
    (Fraction(1, 3), Fraction(2, 5), Fraction(4, 5)),
}


def cosine_sum_vanishes(triple: RationalCosineTriple) -> bool:
    """
    Exact test of cos(r1 pi) + cos(r2 pi) + cos(r3 pi) == 0.

    With D the common denominator, cos(a pi / D) = (z^a + z^-a) / 2 for a
    primitive 2D-th root of unity z.
    """
    rs = triple.as_tuple()
    denominator = lcm(*(r.denominator for r in rs))
    conductor = 2 * denominator
    exponents = []
    for r in rs:
        a = int(r * denominator)
        exponents += [a, -a]
    return vanishes_at_primitive_root(conductor, exponents)


def eigenvector_from_labeling(labeling: "Labeling") -> tuple[Fraction, ...]:
    """v_x = l(x) - (n+1)/2."""
    center = Fraction(labeling.n + 1, 2)
    return tuple(value - center for value in labeling.values)


def closed_adjacency_product(spec: CirculantSpec, vector: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """(A + I) v in exact arithmetic."""
    if len(vector) != spec.n:
        raise ValueError(f"vector length {len(vector)} does not match order {spec.n}")
    return tuple(sum((vector[y] for y in hood), Fraction(0)) for hood in closed_neighborhoods(spec))


def is_minus_one_eigenvector(spec: CirculantSpec, vector: Sequence[Fraction]) -> bool:
    return not any(closed_adjacency_product(spec, vector))
