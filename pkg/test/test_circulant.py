import unittest

import numpy as np

from src.circulant_cdm.circulant import (CanonicalForm, CirculantSpec, adjacency_matrix, canonical_forms_valency5,
                                         canonical_spec, closed_neighborhood, edge_list, is_connected, make_spec)
from src.circulant_cdm.errors import InvalidSpecError


class TestMakeSpec(unittest.TestCase):

    def test_inverse_closure(self):
        self.assertEqual(make_spec(24, [1, 5, 12]).S, (1, 5, 12, 19, 23))
        self.assertEqual(make_spec(4, [1, 2]).S, (1, 2, 3))
        self.assertEqual(make_spec(6, [3]).S, (3,))

    def test_rejects_zero_and_out_of_range(self):
        for generators in ([0], [6], [-1]):
            with self.assertRaises(InvalidSpecError):
                make_spec(6, generators)

    def test_rejects_small_order(self):
        with self.assertRaises(InvalidSpecError):
            make_spec(1, [])

    def test_not_inverse_closed(self):
        with self.assertRaises(InvalidSpecError):
            CirculantSpec(8, (1, 2))

    def test_valency_and_involution(self):
        spec = make_spec(24, [1, 5, 12])
        self.assertEqual(spec.valency, 5)
        self.assertEqual(spec.involution, 12)
        self.assertIsNone(make_spec(10, [1, 3]).involution)


class TestNeighborhoods(unittest.TestCase):

    def test_closed_neighborhood(self):
        self.assertEqual(closed_neighborhood(make_spec(8, [1, 3, 4]), 0), {0, 1, 3, 4, 5, 7})
        self.assertEqual(closed_neighborhood(make_spec(4, [1, 2]), 2), {0, 1, 2, 3})
        self.assertEqual(closed_neighborhood(make_spec(24, [1, 5, 12]), 10), {10, 11, 15, 22, 5, 9})

    def test_vertex_out_of_range(self):
        with self.assertRaises(InvalidSpecError):
            closed_neighborhood(make_spec(24, [1, 5, 12]), 24)

    def test_connectivity(self):
        self.assertTrue(is_connected(make_spec(24, [1, 5, 12])))
        self.assertFalse(is_connected(make_spec(8, [2, 4])))
        self.assertTrue(is_connected(make_spec(4, [1, 2])))
        self.assertTrue(is_connected(make_spec(6, [2, 3])))

    def test_edge_counts(self):
        self.assertEqual(len(edge_list(make_spec(4, [1, 2]))), 6)
        self.assertEqual(len(edge_list(make_spec(6, [3]))), 3)
        self.assertEqual(len(edge_list(make_spec(24, [1, 5, 12]))), 60)

    def test_adjacency_matrix(self):
        spec = make_spec(24, [1, 5, 12])
        matrix = adjacency_matrix(spec)
        self.assertTrue(np.array_equal(matrix, matrix.T))
        self.assertTrue((matrix.sum(axis=1) == 5).all())
        self.assertEqual(int(np.trace(matrix)), 0)


class TestCanonicalForms(unittest.TestCase):

    def test_identity_multiplier(self):
        forms = canonical_forms_valency5(make_spec(24, [1, 5, 12]))
        self.assertEqual(forms, [CanonicalForm(24, 5, 1)])

    def test_non_trivial_multiplier(self):
        forms = canonical_forms_valency5(make_spec(24, [5, 7, 12]))
        self.assertIn(CanonicalForm(24, 11, 5), forms)

    def test_rejects_other_valency(self):
        with self.assertRaises(InvalidSpecError):
            canonical_forms_valency5(make_spec(12, [2, 3, 4]))

    def test_multiplier_reproduces_canonical_set(self):
        for n in range(6, 41, 2):
            for a in range(1, n // 2):
                for b in range(a + 1, n // 2):
                    spec = make_spec(n, [a, b, n // 2])
                    forms = canonical_forms_valency5(spec)
                    self.assertEqual(bool(forms), any(g for g in (a, b) if np.gcd(g, n) == 1))
                    for form in forms:
                        self.assertEqual(spec.multiply(form.multiplier).S, canonical_spec(n, form.c).S)

    def test_multiplier_preserves_valency_and_edges(self):
        spec = make_spec(60, [7, 11, 30])
        for q in (7, 11, 13, 49):
            image = spec.multiply(q)
            self.assertEqual(image.valency, spec.valency)
            self.assertEqual(len(edge_list(image)), len(edge_list(spec)))

    def test_invalid_canonical_form(self):
        with self.assertRaises(InvalidSpecError):
            CanonicalForm(24, 12, 1)
        with self.assertRaises(InvalidSpecError):
            CanonicalForm(24, 5, 2)


if __name__ == "__main__":
    unittest.main()
