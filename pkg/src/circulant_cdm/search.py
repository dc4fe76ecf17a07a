"""
Backtracking over bijective labelings with fixed closed-neighbourhood sums.

The neighbourhood equations, the total sum n(n+1)/2 and, with antipodal
coupling, l(x) + l(x + n/2) = n + 1 are solved once over the rationals.
Every labeling that meets them is the base solution plus a combination of
kernel vectors, so the search only decides kernel coordinates:

    - vertices with parallel kernel rows move together and form a class,
    - each class keeps the labels its representative can still take without
      clashing with labels already placed,
    - the class with the fewest such labels is decided next,
    - a neighbourhood whose open vertices cannot reach the target with the
      unused labels prunes the branch.

Deciding a class removes one kernel vector, so the depth never exceeds the
kernel dimension. Ties are broken by vertex index and labels are tried in
increasing order, so node counts are reproducible.
"""
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import accumulate
from math import lcm
from typing import Iterable, Sequence

from sympy import Matrix


class SearchStatus(str, Enum):
    FOUND = "Found"
    INFEASIBLE = "Infeasible"
    TIMEOUT = "Timeout"


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    values: tuple[int, ...] | None
    nodes_explored: int
    elapsed: float


class _Expired(Exception):
    pass


def _fraction(value) -> Fraction:
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class VertexClass:
    """
    Open vertices whose labels are tied to one parameter.

    With v the label of members[0], member i gets (offsets[i] + slopes[i] * v) / scale.
    """

    members: tuple[int, ...]
    offsets: tuple[int, ...]
    slopes: tuple[int, ...]
    scale: int

    def labels_for(self, v: int, n: int, used: Sequence[bool]) -> list[int] | None:
        placed = []
        for offset, slope in zip(self.offsets, self.slopes):
            value, remainder = divmod(offset + slope * v, self.scale)
            if remainder or not 1 <= value <= n or used[value]:
                return None
            placed.append(value)
        return placed if len(set(placed)) == len(placed) else None


class ClosedSumSearch:
    """
    Args:
        n (int): Number of vertices (and labels).
        neighborhoods (Sequence[Sequence[int]]): Closed neighbourhood of each vertex, as vertex sets.
        target (int): Required sum over every neighbourhood.
        antipodal (bool): Couple x with x + n/2 through l(x) + l(x + n/2) = n + 1.
        root_labels (Iterable[int] | None): Labels allowed on vertex 0.
        budget (float | None): Seconds before the search gives up with Timeout.

    Attributes:
        base (list[Fraction] | None): A rational solution of the equations, None when they are inconsistent.
        kernel (list[list[Fraction]]): Basis of the homogeneous solutions.

    Raises:
        ValueError: If antipodal coupling is requested for an odd order.
    """

    def __init__(self,
                 n: int,
                 neighborhoods: Sequence[Sequence[int]],
                 target: int,
                 antipodal: bool = False,
                 root_labels: Iterable[int] | None = None,
                 budget: float | None = None):
        if antipodal and n % 2:
            raise ValueError(f"antipodal coupling needs an even order: got {n}")
        self.n = n
        self.target = target
        self.antipodal = antipodal
        self.budget = budget
        self.hoods = [tuple(h) for h in neighborhoods]
        self.root_labels = frozenset(root_labels) if root_labels is not None else None
        self.base, self.kernel = self._solve()

        self.value = [0] * n
        self.used = [False] * (n + 1)
        self.nodes = 0
        self._deadline = None

    def _equations(self) -> list[list[int]]:
        """Augmented rows [coefficients..., right-hand side]."""
        n = self.n
        rows = []
        for hood in self.hoods:
            row = [0] * (n + 1)
            for v in hood:
                row[v] += 1
            row[n] = self.target
            rows.append(row)
        rows.append([1] * n + [n * (n + 1) // 2])
        if self.antipodal:
            half = n // 2
            for x in range(half):
                row = [0] * (n + 1)
                row[x] = row[x + half] = 1
                row[n] = n + 1
                rows.append(row)
        return rows

    def _solve(self) -> tuple[list[Fraction] | None, list[list[Fraction]]]:
        n = self.n
        reduced, pivots = Matrix(self._equations()).rref()
        if n in pivots:
            return None, []
        base = [Fraction(0)] * n
        for i, column in enumerate(pivots):
            base[column] = _fraction(reduced[i, n])
        kernel = []
        for free in (column for column in range(n) if column not in pivots):
            vector = [Fraction(0)] * n
            vector[free] = Fraction(1)
            for i, column in enumerate(pivots):
                vector[column] = -_fraction(reduced[i, free])
            kernel.append(vector)
        return base, kernel

    def _place_fixed(self) -> bool:
        """Place the labels the equations already determine."""
        for y in range(self.n):
            if any(vector[y] for vector in self.kernel):
                continue
            label = self.base[y]
            if label.denominator != 1 or not 1 <= label <= self.n or self.used[int(label)]:
                return False
            if y == 0 and self.root_labels is not None and label not in self.root_labels:
                return False
            self._place((y,), (int(label),))
        return True

    def _place(self, members: Sequence[int], labels: Sequence[int]) -> None:
        for y, label in zip(members, labels):
            self.value[y] = label
            self.used[label] = True

    def _clear(self, members: Sequence[int]) -> None:
        for y in members:
            self.used[self.value[y]] = False
            self.value[y] = 0

    def _bounds_ok(self) -> bool:
        free = [label for label in range(1, self.n + 1) if not self.used[label]]
        low = [0, *accumulate(free)]
        high = [0, *accumulate(reversed(free))]
        for hood in self.hoods:
            rest, open_count = self.target, 0
            for y in hood:
                if self.value[y]:
                    rest -= self.value[y]
                else:
                    open_count += 1
            if not low[open_count] <= rest <= high[open_count]:
                return False
        return True

    def _classes(self, base: list[Fraction], kernel: list[list[Fraction]]) -> list[VertexClass]:
        groups: dict[tuple[Fraction, ...], list[tuple[int, Fraction]]] = {}
        for y in range(self.n):
            row = [vector[y] for vector in kernel]
            lead = next((c for c in row if c), None)
            if lead is not None:
                groups.setdefault(tuple(c / lead for c in row), []).append((y, lead))
        classes = []
        for members in groups.values():
            x, lead_x = members[0]
            slopes = [lead / lead_x for _, lead in members]
            offsets = [base[y] - slope * base[x] for (y, _), slope in zip(members, slopes)]
            scale = lcm(*(q.denominator for q in slopes + offsets))
            classes.append(VertexClass(tuple(y for y, _ in members),
                                       tuple(int(q * scale) for q in offsets),
                                       tuple(int(q * scale) for q in slopes),
                                       scale))
        return classes

    def _options(self, group: VertexClass) -> list[tuple[int, list[int]]]:
        labels = range(1, self.n + 1)
        if group.members[0] == 0 and self.root_labels is not None:
            labels = sorted(self.root_labels)
        options = []
        for v in labels:
            if 1 <= v <= self.n and not self.used[v]:
                placed = group.labels_for(v, self.n, self.used)
                if placed is not None:
                    options.append((v, placed))
        return options

    def _fix(self, base: list[Fraction], kernel: list[list[Fraction]], x: int, v: int):
        """Restrict the solution space to l(x) = v."""
        pivot = next(i for i, vector in enumerate(kernel) if vector[x])
        lead = kernel[pivot]
        shift = (v - base[x]) / lead[x]
        new_base = [b + c * shift if c else b for b, c in zip(base, lead)]
        new_kernel = []
        for i, vector in enumerate(kernel):
            if i == pivot:
                continue
            factor = vector[x] / lead[x]
            if factor:
                vector = [a - c * factor if c else a for a, c in zip(vector, lead)]
            new_kernel.append(vector)
        return new_base, new_kernel

    def _tick(self) -> None:
        self.nodes += 1
        if self._deadline is not None and time.monotonic() >= self._deadline:
            raise _Expired

    def _descend(self, base: list[Fraction], kernel: list[list[Fraction]]) -> bool:
        if not kernel:
            return True
        if not self._bounds_ok():
            return False
        best, best_key, best_options = None, None, None
        for group in self._classes(base, kernel):
            options = self._options(group)
            if not options:
                return False
            key = (len(options), -len(group.members))
            if best_key is None or key < best_key:
                best, best_key, best_options = group, key, options
        for v, placed in best_options:
            self._tick()
            self._place(best.members, placed)
            if self._descend(*self._fix(base, kernel, best.members[0], v)):
                return True
            self._clear(best.members)
        return False

    def run(self) -> SearchResult:
        start = time.monotonic()
        self._deadline = start + self.budget if self.budget is not None else None
        self.value = [0] * self.n
        self.used = [False] * (self.n + 1)
        self.nodes = 0
        try:
            found = self.base is not None and self._place_fixed() and self._descend(self.base, self.kernel)
        except _Expired:
            return SearchResult(SearchStatus.TIMEOUT, None, self.nodes, time.monotonic() - start)
        elapsed = time.monotonic() - start
        if found:
            return SearchResult(SearchStatus.FOUND, tuple(self.value), self.nodes, elapsed)
        return SearchResult(SearchStatus.INFEASIBLE, None, self.nodes, elapsed)
