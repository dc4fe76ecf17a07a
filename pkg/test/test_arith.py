import unittest

from src.circulant_cdm.arith import (TwoAdicSplit, decomposition_witness, p_part, two_adic_split,
                                     units)


class TestTwoAdicSplit(unittest.TestCase):

    def test_split(self):
        self.assertEqual(two_adic_split(24), TwoAdicSplit(3, 3))
        self.assertEqual(two_adic_split(1), TwoAdicSplit(0, 1))
        self.assertEqual(two_adic_split(70), TwoAdicSplit(1, 35))

    def test_value_round_trip(self):
        for m in range(1, 200):
            self.assertEqual(two_adic_split(m).value, m)

    def test_non_positive(self):
        with self.assertRaises(ValueError):
            two_adic_split(0)

    def test_even_odd_part(self):
        with self.assertRaises(ValueError):
            TwoAdicSplit(1, 2)


class TestPPart(unittest.TestCase):

    def test_p_part(self):
        self.assertEqual(p_part(72, 3), 9)
        self.assertEqual(p_part(72, 2), 8)
        self.assertEqual(p_part(35, 2), 1)

    def test_not_prime(self):
        with self.assertRaises(ValueError):
            p_part(10, 4)


class TestUnits(unittest.TestCase):

    def test_units(self):
        self.assertEqual(units(12), [1, 5, 7, 11])
        self.assertEqual(units(2), [1])
        self.assertEqual(len(units(24)), 8)


class TestDecompositionWitness(unittest.TestCase):

    def test_figure_instance(self):
        w = decomposition_witness(24, 5)
        self.assertEqual((w.t, w.ell), (3, 3))
        self.assertEqual((w.alpha, w.ell1), (1, 3))
        self.assertEqual((w.beta, w.ell2), (2, 1))
        self.assertEqual((w.d1, w.d2, w.n1, w.n2, w.m1, w.m2), (3, 1, 1, 3, 1, 1))

    def test_factorisations_hold(self):
        for n in range(6, 120, 2):
            for c in range(2, n // 2):
                w = decomposition_witness(n, c)
                self.assertEqual(2**w.t * w.ell, n)
                self.assertEqual(2**w.alpha * w.ell1, c + 1)
                self.assertEqual(2**w.beta * w.ell2, c - 1)
                self.assertEqual(w.d1 * w.n1, w.ell)
                self.assertEqual(w.d2 * w.n2, w.ell)
                self.assertEqual(w.d1 * w.m1, w.ell1)
                self.assertEqual(w.d2 * w.m2, w.ell2)

    def test_rejects_out_of_range(self):
        with self.assertRaises(ValueError):
            decomposition_witness(24, 12)
        with self.assertRaises(ValueError):
            decomposition_witness(23, 5)


if __name__ == "__main__":
    unittest.main()
