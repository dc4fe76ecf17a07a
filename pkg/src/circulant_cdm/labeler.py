"""
Explicit closed distance magic labelings and the verifier that certifies them.

Every constructor hands its result to verify_labeling before returning, so a
construction defect surfaces as LabelingDefectError and never as a wrong
labeling.

Constructions (all on the canonical presentation {+-1, +-c, n/2}):
    - family (i), c = n/2 - 1: two linear branches.
    - families (iii)/(iv), c = n/6 -+ 1: six values per coset of <n/6>.
    - family (ii): antipodal backtracking search, or the additive closed form.
"""
from dataclasses import dataclass
from math import gcd

import numpy as np

from ._SETTINGS import FAMILY_II_BUDGET, FAMILY_II_FALLBACK, FAMILY_II_STRATEGY
from ._log import debug_log
from .circulant import CirculantSpec, canonical_spec, closed_neighborhoods
from .classifier import (COMPLETE_BY_VALENCY, ClassificationResult, Family, FamilyMatch, check_family_ii,
                         check_family_iii, check_family_iv, classify)
from .errors import InvalidSpecError, LabelingDefectError, SearchTimeoutError
from .search import ClosedSumSearch, SearchStatus

FAMILY_II_STRATEGIES = ("search", "additive")


@dataclass(frozen=True)
class Labeling:
    """values[x] is the label of vertex x; bijectivity is checked by verify_labeling."""

    n: int
    values: tuple[int, ...]
    magic_constant: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.n:
            raise InvalidSpecError(f"labeling has {len(self.values)} values for order {self.n}")

    def with_constant(self, r: int) -> "Labeling":
        return Labeling(self.n, self.values, r)

    def transported(self, multiplier: int) -> "Labeling":
        """l'(x) = l(q*x mod n): moves a labeling of q*S back to S."""
        n = self.n
        return Labeling(n, tuple(self.values[multiplier * x % n] for x in range(n)), self.magic_constant)


@dataclass(frozen=True)
class LabelingVerdict:
    accepted: bool
    r: int | None = None
    expected_r: int | None = None
    vertex: int | None = None
    vertex_sum: int | None = None
    reason: str | None = None

    def __bool__(self):
        return self.accepted

    @property
    def formula_holds(self) -> bool:
        return self.accepted and self.r == self.expected_r


def expected_magic_constant(spec: CirculantSpec) -> int | None:
    """(|S|+1)(n+1)/2, or None when it is not an integer."""
    total = (spec.valency + 1) * (spec.n + 1)
    return None if total % 2 else total // 2


def verify_labeling(spec: CirculantSpec, labeling: Labeling) -> LabelingVerdict:
    """
    Check a labeling against the definition. Rejections are returned, not raised.

    Raises:
        InvalidSpecError: If the labeling and the graph have different orders.
    """
    n = spec.n
    if labeling.n != n:
        raise InvalidSpecError(f"labeling of order {labeling.n} given for a graph of order {n}")
    expected = expected_magic_constant(spec)
    values = np.asarray(labeling.values, dtype=np.int64)

    seen = np.zeros(n + 1, dtype=bool)
    for x, value in enumerate(labeling.values):
        if not 1 <= value <= n or seen[value]:
            return LabelingVerdict(False, expected_r=expected, vertex=x, reason=f"label {value} repeated or out of range")
        seen[value] = True

    hoods = np.asarray(closed_neighborhoods(spec), dtype=np.int64)
    sums = values[hoods].sum(axis=1)
    r = int(sums[0])
    bad = np.flatnonzero(sums != r)
    if bad.size:
        x = int(bad[0])
        return LabelingVerdict(False, expected_r=expected, vertex=x, vertex_sum=int(sums[x]),
                               reason=f"closed sum {int(sums[x])} at vertex {x} differs from {r} at vertex 0")
    return LabelingVerdict(True, r=r, expected_r=expected)


def _certified(spec: CirculantSpec, labeling: Labeling, what: str) -> Labeling:
    verdict = verify_labeling(spec, labeling)
    if not verdict.formula_holds:
        raise LabelingDefectError(f"{what} produced a rejected labeling for n={spec.n}, S={spec.S}: {verdict.reason}")
    return labeling.with_constant(verdict.r)


def identity_labeling(n: int) -> Labeling:
    return Labeling(n, tuple(range(1, n + 1)))


def label_family_i(n: int) -> Labeling:
    """
    l(x) = x + 1 below n/2 and 3n/2 - x from n/2 on.

    Raises:
        InvalidSpecError: If n is odd or below 6.
    """
    if n % 2 or n < 6:
        raise InvalidSpecError(f"family (i) needs even n >= 6: got {n}")
    half = n // 2
    values = [x + 1 if x < half else 3 * half - x for x in range(n)]
    return _certified(canonical_spec(n, half - 1), Labeling(n, values), "family (i) construction")


@dataclass(frozen=True)
class CosetFrame:
    """Rows (3k + j*n/6 mod n for j = 0..5) for k = 0..n/6 - 1."""

    n: int
    step: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n: int) -> "CosetFrame":
        if n % 6:
            raise InvalidSpecError(f"coset frame needs 6 | n: got {n}")
        step = n // 6
        rows = tuple(tuple((3 * k + j * step) % n for j in range(6)) for k in range(step))
        return cls(n, step, rows)

    def is_partition(self) -> bool:
        covered = [x for row in self.rows for x in row]
        return len(covered) == self.n and len(set(covered)) == self.n

    def row_of(self) -> list[int]:
        """Row index of every vertex (meaningful only for a partition)."""
        owner = [-1] * self.n
        for k, row in enumerate(self.rows):
            for x in row:
                owner[x] = k
        return owner


def _coset_row_values(n: int, k: int) -> tuple[int, ...]:
    return 1 + 3 * k, n - 1 - 3 * k, 3 + 3 * k, n - 2 - 3 * k, 2 + 3 * k, n - 3 * k


def label_family_iii_iv(n: int, c: int) -> Labeling:
    """
    Coset labeling shared by families (iii) and (iv).

    Raises:
        InvalidSpecError: If (n, c) is in neither family.
        LabelingDefectError: If the coset rows do not partition Z_n.
    """
    if check_family_iii(n, c) is None and check_family_iv(n, c) is None:
        raise InvalidSpecError(f"(n={n}, c={c}) is not in family (iii) or (iv)")
    frame = CosetFrame.build(n)
    if not frame.is_partition():
        raise LabelingDefectError(f"coset rows do not partition Z_{n}")
    values = [0] * n
    for k, row in enumerate(frame.rows):
        for x, value in zip(row, _coset_row_values(n, k)):
            values[x] = value
    return _certified(canonical_spec(n, c), Labeling(n, values), "coset construction")


def label_family_ii(n: int, c: int, budget: float = FAMILY_II_BUDGET) -> Labeling:
    """
    Antipodal backtracking search: l(x) + l(x + n/2) = n + 1 and l(0) = 1.

    Raises:
        InvalidSpecError: If (n, c) fails the family (ii) predicate.
        SearchTimeoutError: If the budget runs out.
        LabelingDefectError: If the search tree is exhausted without a labeling.
    """
    if not check_family_ii(n, c):
        raise InvalidSpecError(f"(n={n}, c={c}) is not in family (ii)")
    spec = canonical_spec(n, c)
    debug_log(f"family (ii) search started for n={n}, c={c}, budget={budget}s")
    result = ClosedSumSearch(n, closed_neighborhoods(spec), 3 * (n + 1),
                             antipodal=True, root_labels=(1,), budget=budget).run()
    debug_log(f"family (ii) search for n={n}, c={c}: {result.status.value} "
              f"after {result.nodes_explored} nodes in {result.elapsed:.3f}s")
    if result.status is SearchStatus.TIMEOUT:
        raise SearchTimeoutError(f"family (ii) search for n={n}, c={c} exceeded {budget}s", result.nodes_explored)
    if result.status is SearchStatus.INFEASIBLE:
        raise LabelingDefectError(f"family (ii) search for n={n}, c={c} exhausted without a labeling")
    return _certified(spec, Labeling(n, result.values), "family (ii) search")


def label_family_ii_additive(n: int, c: int) -> Labeling:
    """
    Closed-form family (ii) labeling.

    With m = n/2 (odd), m+ = gcd(c-1, m), m- = gcd(c+1, m) and
    h(y) = 2*m-*(y mod m+) + 2*(y mod m-) + 1, a bijection of Z_m onto the
    odd numbers below 2m, set l(x) = (n + 1 + h(x mod m))/2 for even x and
    (n + 1 - h(x mod m))/2 for odd x.

    Raises:
        InvalidSpecError: If (n, c) fails the family (ii) predicate.
    """
    if not check_family_ii(n, c):
        raise InvalidSpecError(f"(n={n}, c={c}) is not in family (ii)")
    m = n // 2
    m_plus, m_minus = gcd(c - 1, m), gcd(c + 1, m)
    values = []
    for x in range(n):
        y = x % m
        h = 2 * m_minus * (y % m_plus) + 2 * (y % m_minus) + 1
        values.append((n + 1 + h) // 2 if x % 2 == 0 else (n + 1 - h) // 2)
    return _certified(canonical_spec(n, c), Labeling(n, values), "additive family (ii) construction")


def _family_ii(n: int, c: int, strategy: str, budget: float) -> Labeling:
    if strategy == "additive":
        return label_family_ii_additive(n, c)
    try:
        return label_family_ii(n, c, budget)
    except SearchTimeoutError:
        if not FAMILY_II_FALLBACK:
            raise
        debug_log(f"family (ii) search timed out for n={n}, c={c}; using the additive construction")
        return label_family_ii_additive(n, c)


_PRIORITY = (Family.FAMILY_I, Family.FAMILY_III, Family.FAMILY_IV, Family.FAMILY_II)


def _canonical_labeling(match: FamilyMatch, n: int, strategy: str, budget: float) -> Labeling:
    if match.family is Family.FAMILY_I:
        return label_family_i(n)
    if match.family in (Family.FAMILY_III, Family.FAMILY_IV):
        return label_family_iii_iv(n, match.c)
    return _family_ii(n, match.c, strategy, budget)


def label(spec: CirculantSpec,
          family_ii_strategy: str = FAMILY_II_STRATEGY,
          budget: float = FAMILY_II_BUDGET,
          classification: ClassificationResult | None = None) -> Labeling | None:
    """
    Classify (unless a classification of spec is passed in), then build a
    labeling for the first matched family.

    Complete graphs get the identity labeling. Valency-5 constructions run on
    the canonical presentation and are moved back with its multiplier.
    Returns None for graphs that are not closed distance magic.

    Raises:
        ValueError: If family_ii_strategy is unknown.
    """
    if family_ii_strategy not in FAMILY_II_STRATEGIES:
        raise ValueError(f"unknown family (ii) strategy {family_ii_strategy!r}")
    result = classification if classification is not None else classify(spec)
    if not result.is_cdm:
        return None
    if spec.valency in COMPLETE_BY_VALENCY:
        return _certified(spec, identity_labeling(spec.n), "identity labeling")
    match = min(result.matches, key=lambda m: (_PRIORITY.index(m.family), m.c))
    canonical = _canonical_labeling(match, spec.n, family_ii_strategy, budget)
    return _certified(spec, canonical.transported(match.multiplier), "multiplier transport")
