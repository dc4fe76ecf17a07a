"""
Exhaustive ground truth for small circulants.

solve_cdm runs the closed-sum backtracking search with the magic constant
fixed to (|S|+1)(n+1)/2. Vertex 0 is pinned to label 1: translating any
labeling by -x0 keeps it closed distance magic, so some solution has
label 1 on vertex 0 whenever any solution exists.
"""
import time
from dataclasses import dataclass
from typing import Iterator

from ._SETTINGS import ORACLE_MAX_N, TIMEOUT_PER_INSTANCE
from ._log import debug_log
from .circulant import CirculantSpec, closed_neighborhoods, is_connected, make_spec
from .errors import LabelingDefectError, OracleRefusalError
from .labeler import Labeling, expected_magic_constant, verify_labeling
from .search import ClosedSumSearch, SearchStatus
from .spectral import Refusal, refusal_reason

__all__ = ["SearchStatus", "SearchOutcome", "solve_cdm", "spectral_prefilter", "enumerate_specs"]


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    labeling: Labeling | None = None
    nodes_explored: int = 0
    elapsed: float = 0.0
    refusal: Refusal | None = None

    def __post_init__(self):
        if (self.status is SearchStatus.FOUND) != (self.labeling is not None):
            raise ValueError("a labeling accompanies exactly the Found status")


def spectral_prefilter(spec: CirculantSpec) -> Refusal | None:
    """A failed necessary condition, or None when the search has to decide."""
    return refusal_reason(spec)


def solve_cdm(spec: CirculantSpec,
              budget: float | None = TIMEOUT_PER_INSTANCE,
              max_n: int = ORACLE_MAX_N,
              prefilter: bool = True) -> SearchOutcome:
    """
    Decide closed distance magic status by search.

    Args:
        spec (CirculantSpec): The graph.
        budget (float | None): Seconds before giving up with Timeout; None for no limit.
        max_n (int): Largest order the oracle accepts.
        prefilter (bool): Answer Infeasible from the spectral necessary conditions when they fail.

    Raises:
        OracleRefusalError: If n exceeds max_n.
        LabelingDefectError: If the search reports a labeling the verifier rejects.
    """
    if spec.n > max_n:
        raise OracleRefusalError(f"order {spec.n} is above the oracle maximum {max_n}")
    target = expected_magic_constant(spec)
    if target is None:
        return SearchOutcome(SearchStatus.INFEASIBLE, refusal=spectral_prefilter(spec))
    if prefilter:
        refusal = spectral_prefilter(spec)
        if refusal is not None:
            debug_log(f"oracle prefilter refused n={spec.n}, S={spec.S}: {refusal}")
            return SearchOutcome(SearchStatus.INFEASIBLE, refusal=refusal)

    start = time.monotonic()
    result = ClosedSumSearch(spec.n, closed_neighborhoods(spec), target, root_labels=(1,), budget=budget).run()
    elapsed = time.monotonic() - start
    debug_log(f"oracle n={spec.n}, S={spec.S}: {result.status.value} "
              f"after {result.nodes_explored} nodes in {elapsed:.3f}s")
    if result.status is not SearchStatus.FOUND:
        return SearchOutcome(result.status, nodes_explored=result.nodes_explored, elapsed=elapsed)

    labeling = Labeling(spec.n, result.values)
    verdict = verify_labeling(spec, labeling)
    if not verdict:
        raise LabelingDefectError(f"oracle labeling rejected for n={spec.n}, S={spec.S}: {verdict.reason}")
    return SearchOutcome(SearchStatus.FOUND, labeling.with_constant(verdict.r), result.nodes_explored, elapsed)


def _generator_sets(valency: int, n: int) -> Iterator[tuple[int, ...]]:
    half = n // 2
    if valency == 3 and n % 2 == 0:
        for a in range(1, half):
            yield a, half
    elif valency == 4:
        for a in range(1, (n + 1) // 2):
            for b in range(a + 1, (n + 1) // 2):
                yield a, b
    elif valency == 5 and n % 2 == 0:
        for a in range(1, half):
            for b in range(a + 1, half):
                yield a, b, half


def enumerate_specs(valency: int, max_n: int) -> Iterator[CirculantSpec]:
    """
    Every connected circulant of the given valency with n <= max_n, once each.

    Raises:
        ValueError: If valency is not 3, 4 or 5.
    """
    if valency not in (3, 4, 5):
        raise ValueError(f"enumerate_specs handles valency 3, 4 or 5: got {valency}")
    for n in range(valency + 1, max_n + 1):
        for generators in _generator_sets(valency, n):
            spec = make_spec(n, generators)
            if is_connected(spec):
                yield spec
