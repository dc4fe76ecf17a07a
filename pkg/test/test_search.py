import unittest

from src.circulant_cdm.circulant import canonical_spec, closed_neighborhoods, make_spec
from src.circulant_cdm.search import ClosedSumSearch, SearchStatus, VertexClass
from src.circulant_cdm.spectral import minus_one_multiplicity


def _split_halves(n: int) -> list[tuple[int, ...]]:
    # two disjoint neighbourhoods cannot share a sum when n(n+1)/2 is odd
    return [tuple(range(n // 2)), tuple(range(n // 2, n))]


def _closed_sums_hold(values, hoods, target) -> bool:
    return all(sum(values[y] for y in hood) == target for hood in hoods)


class TestClosedSumSearch(unittest.TestCase):

    def test_single_full_neighborhood(self):
        result = ClosedSumSearch(4, [(0, 1, 2, 3)] * 4, 10, root_labels=(1,)).run()
        self.assertEqual(result.status, SearchStatus.FOUND)
        self.assertEqual(result.values[0], 1)
        self.assertEqual(sorted(result.values), [1, 2, 3, 4])

    def test_antipodal(self):
        n = 14
        hoods = closed_neighborhoods(canonical_spec(n, 6))
        result = ClosedSumSearch(n, hoods, 3 * (n + 1), antipodal=True, root_labels=(1,)).run()
        self.assertEqual(result.status, SearchStatus.FOUND)
        for x in range(n):
            self.assertEqual(result.values[x] + result.values[(x + n // 2) % n], n + 1)
        self.assertTrue(_closed_sums_hold(result.values, hoods, 3 * (n + 1)))

    def test_antipodal_pairs_only(self):
        # c + 1 = n/2: every closed neighbourhood is three antipodal pairs
        n = 22
        hoods = closed_neighborhoods(canonical_spec(n, 10))
        result = ClosedSumSearch(n, hoods, 3 * (n + 1), root_labels=(1,), budget=60.0).run()
        self.assertEqual(result.status, SearchStatus.FOUND)
        self.assertEqual(sorted(result.values), list(range(1, n + 1)))
        self.assertTrue(_closed_sums_hold(result.values, hoods, 3 * (n + 1)))
        self.assertLessEqual(result.nodes_explored, n)

    def test_antipodal_needs_even_order(self):
        with self.assertRaises(ValueError):
            ClosedSumSearch(5, [], 0, antipodal=True)

    def test_inconsistent_equations(self):
        search = ClosedSumSearch(10, _split_halves(10), 27)
        self.assertIsNone(search.base)
        result = search.run()
        self.assertEqual(result.status, SearchStatus.INFEASIBLE)
        self.assertIsNone(result.values)
        self.assertEqual(result.nodes_explored, 0)

    def test_constant_solution_is_infeasible(self):
        # K_{3,3}: closed sums force every label to (n+1)/2
        search = ClosedSumSearch(6, closed_neighborhoods(make_spec(6, [1, 3])), 14)
        self.assertEqual(search.kernel, [])
        self.assertEqual(search.run().status, SearchStatus.INFEASIBLE)

    def test_kernel_matches_minus_one_eigenspace(self):
        for n, c in ((24, 5), (12, 5), (14, 6)):
            spec = canonical_spec(n, c)
            search = ClosedSumSearch(n, closed_neighborhoods(spec), 3 * (n + 1))
            self.assertEqual(len(search.kernel), minus_one_multiplicity(spec), msg=f"n={n}, c={c}")

    def test_antipodal_rows_keep_pair_kernel(self):
        n = 14
        search = ClosedSumSearch(n, closed_neighborhoods(canonical_spec(n, 6)), 45, antipodal=True)
        self.assertEqual(len(search.kernel), n // 2)

    def test_root_labels(self):
        n = 24
        hoods = closed_neighborhoods(make_spec(n, [1, 5, 12]))
        result = ClosedSumSearch(n, hoods, 75, root_labels=(7,), budget=60.0).run()
        self.assertEqual(result.status, SearchStatus.FOUND)
        self.assertEqual(result.values[0], 7)
        self.assertTrue(_closed_sums_hold(result.values, hoods, 75))

    def test_timeout(self):
        result = ClosedSumSearch(4, [(0, 1, 2, 3)] * 4, 10, budget=0.0).run()
        self.assertEqual(result.status, SearchStatus.TIMEOUT)
        self.assertIsNone(result.values)
        self.assertEqual(result.nodes_explored, 1)

    def test_deterministic(self):
        hoods = closed_neighborhoods(make_spec(24, [1, 5, 12]))
        runs = [ClosedSumSearch(24, hoods, 75, root_labels=(1,)).run() for _ in range(2)]
        self.assertEqual(runs[0].nodes_explored, runs[1].nodes_explored)
        self.assertEqual(runs[0].values, runs[1].values)


class TestVertexClass(unittest.TestCase):

    def test_labels_follow_the_representative(self):
        # second member carries n + 1 - v
        group = VertexClass((0, 5), (0, 11), (1, -1), 1)
        used = [False] * 11
        self.assertEqual(group.labels_for(3, 10, used), [3, 8])
        used[8] = True
        self.assertIsNone(group.labels_for(3, 10, used))

    def test_fractional_and_colliding_labels(self):
        half = VertexClass((0, 1), (0, 1), (2, 1), 2)
        self.assertIsNone(half.labels_for(2, 10, [False] * 11))
        self.assertEqual(half.labels_for(3, 10, [False] * 11), [3, 2])
        twin = VertexClass((0, 1), (0, 0), (1, 1), 1)
        self.assertIsNone(twin.labels_for(4, 10, [False] * 11))


if __name__ == "__main__":
    unittest.main()
