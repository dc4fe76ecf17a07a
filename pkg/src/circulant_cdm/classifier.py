"""
Closed distance magic verdicts for connected circulants of valency <= 5.

Valency 1..4: only the complete graphs K2, K3, K4, K5 qualify.
Valency 5: the graph must be multiplier-isomorphic to Cay(Z_n; {+-1, +-c, n/2})
with (n, c) in one of four arithmetic families. Every canonical
representative is tested and every match is reported.
"""
from dataclasses import dataclass, field
from enum import Enum

from .arith import DecompositionWitness, decomposition_witness
from .circulant import CanonicalForm, CirculantSpec, canonical_forms_valency5, is_connected
from .errors import InvalidSpecError, UnsupportedValencyError
from .spectral import Refusal, RefusalKind, refusal_reason


class Family(str, Enum):
    K2 = "K2"
    K3 = "K3"
    K4 = "K4"
    K5 = "K5"
    FAMILY_I = "FamilyI"
    FAMILY_II = "FamilyII"
    FAMILY_III = "FamilyIII"
    FAMILY_IV = "FamilyIV"


COMPLETE_BY_VALENCY = {1: Family.K2, 2: Family.K3, 3: Family.K4, 4: Family.K5}


class Reason(str, Enum):
    DISCONNECTED = "disconnected"
    NO_COPRIME_GENERATOR = "no-coprime-generator"
    NO_ADMISSIBLE_CHARACTER = "no-admissible-character"
    SEPARATION_GCD = "separation-gcd"
    PREDICATE_FAILURE = "predicate-failure"
    PARITY = "parity"
    NOT_COMPLETE = "not-complete"


_REFUSAL_REASONS = {
    RefusalKind.PARITY_INFEASIBLE: Reason.PARITY,
    RefusalKind.NO_MINUS_ONE_EIGENVALUE: Reason.NO_ADMISSIBLE_CHARACTER,
    RefusalKind.SEPARATION_GCD: Reason.SEPARATION_GCD,
}


@dataclass(frozen=True)
class FamilyMatch:
    """One family hit; c and multiplier are set for valency 5, t and k for (iii)/(iv)."""

    family: Family
    c: int | None = None
    multiplier: int | None = None
    t: int | None = None
    k: int | None = None

    def parameters(self) -> dict:
        return {name: value for name, value in
                (("c", self.c), ("multiplier", self.multiplier), ("t", self.t), ("k", self.k))
                if value is not None}


@dataclass(frozen=True)
class ClassificationResult:
    spec: CirculantSpec
    is_cdm: bool
    matches: tuple[FamilyMatch, ...] = ()
    witness: DecompositionWitness | None = None
    reason: Reason | None = None
    refusal: Refusal | None = None
    families: frozenset[Family] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "families", frozenset(m.family for m in self.matches))
        if self.is_cdm != bool(self.matches):
            raise ValueError("is_cdm must agree with the matched families")

    @property
    def parameters(self) -> dict | None:
        return self.matches[0].parameters() if self.matches else None

    def as_record(self) -> dict:
        return {
            "n": self.spec.n,
            "S": list(self.spec.S),
            "connected": self.reason is not Reason.DISCONNECTED,
            "valency": self.spec.valency,
            "is_cdm": self.is_cdm,
            "families": sorted(f.value for f in self.families),
            "parameters": self.parameters,
            "reason": self.reason.value if self.reason else None,
        }


def _check_pair(n: int, c: int) -> None:
    if n % 2 or not 1 < c < n // 2:
        raise InvalidSpecError(f"family predicates need even n and 1 < c < n/2: got n={n}, c={c}")


def check_family_i(n: int, c: int) -> bool:
    _check_pair(n, c)
    return c == n // 2 - 1


def check_family_ii(n: int, c: int) -> bool:
    """n = 2 (mod 4), c even and 2(c^2 - 1) an odd multiple of n."""
    _check_pair(n, c)
    if n % 4 != 2 or c % 2:
        return False
    multiple, remainder = divmod(2 * (c * c - 1), n)
    return remainder == 0 and multiple % 2 == 1


def _scan_t_k(n: int, c: int, sign: int) -> tuple[int, int] | None:
    """
    Find (t >= 2, k >= 0) with n = 3 * 2^t * u and c = 2^(t-1) * u - sign,
    where u = 6k + sign * (-1)^t. sign is +1 for family (iii), -1 for (iv).
    """
    t = 2
    while 3 * 2**t <= n:
        power = 2**t
        parity = -1 if t % 2 else 1
        for k in range(n // (18 * power) + 2):
            u = 6 * k + sign * parity
            if u <= 0:
                continue
            order = 3 * power * u
            if order > n:
                break
            connector = power // 2 * u - sign
            if order == n and connector == c and connector >= 2:
                return t, k
        t += 1
    return None


def check_family_iii(n: int, c: int) -> tuple[int, int] | None:
    _check_pair(n, c)
    return _scan_t_k(n, c, +1)


def check_family_iv(n: int, c: int) -> tuple[int, int] | None:
    _check_pair(n, c)
    return _scan_t_k(n, c, -1)


def match_families(canon: CanonicalForm) -> list[FamilyMatch]:
    """All of (i)-(iv) satisfied by one canonical pair."""
    n, c, q = canon.n, canon.c, canon.multiplier
    matches = []
    if check_family_i(n, c):
        matches.append(FamilyMatch(Family.FAMILY_I, c=c, multiplier=q))
    if check_family_ii(n, c):
        matches.append(FamilyMatch(Family.FAMILY_II, c=c, multiplier=q))
    for family, check in ((Family.FAMILY_III, check_family_iii), (Family.FAMILY_IV, check_family_iv)):
        params = check(n, c)
        if params is not None:
            matches.append(FamilyMatch(family, c=c, multiplier=q, t=params[0], k=params[1]))
    return matches


def _negative(spec: CirculantSpec, fallback: Reason, witness: DecompositionWitness | None = None) -> ClassificationResult:
    refusal = refusal_reason(spec)
    reason = _REFUSAL_REASONS[refusal.kind] if refusal else fallback
    return ClassificationResult(spec, False, witness=witness, reason=reason, refusal=refusal)


def classify(spec: CirculantSpec) -> ClassificationResult:
    """
    Decide closed distance magic status.

    Raises:
        UnsupportedValencyError: If the valency exceeds 5.
    """
    if spec.valency > 5:
        raise UnsupportedValencyError(f"valency {spec.valency} is above 5")
    if not is_connected(spec):
        return ClassificationResult(spec, False, reason=Reason.DISCONNECTED)
    if spec.valency <= 4:
        if spec.n == spec.valency + 1:
            return ClassificationResult(spec, True, matches=(FamilyMatch(COMPLETE_BY_VALENCY[spec.valency]),))
        return _negative(spec, Reason.NOT_COMPLETE)

    forms = canonical_forms_valency5(spec)
    if not forms:
        return ClassificationResult(spec, False, reason=Reason.NO_COPRIME_GENERATOR)
    matches = [m for form in forms for m in match_families(form)]
    if matches:
        witness = decomposition_witness(spec.n, matches[0].c)
        return ClassificationResult(spec, True, matches=tuple(matches), witness=witness)
    return _negative(spec, Reason.PREDICATE_FAILURE, decomposition_witness(spec.n, forms[0].c))
