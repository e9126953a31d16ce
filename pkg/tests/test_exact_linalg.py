"""Unit tests for exact integer and field linear algebra."""

import unittest

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith

from tropfan.errors import InconsistencyError, InputError, NotAComplexError
from tropfan.exact_linalg import (
    GroupPresentation, IntMatrix, Ring, check_complex, column_basis, determinant,
    hermite_normal_form, homology_of_pair, is_isomorphism, kernel_basis, kernel_lattice,
    rank, saturate, smith_invariants, smith_normal_form, solve, solve_integral,
    try_solve_integral, unimodular_inverse, xgcd,
)
from tests.base import BaseTestCase

Z = Ring('Z')
Q = Ring('Q')


def rows(*data):
    """Shorthand for IntMatrix.from_rows."""
    return IntMatrix.from_rows(data)


class TestRing(BaseTestCase):
    """Tests for ring tags and unit tests."""

    def test_parse_rings(self):
        """Should parse Z, Q and Fp with a prime modulus."""
        self.assertFalse(Ring.parse('Z').is_field)
        self.assertTrue(Ring.parse('Q').is_field)
        f7 = Ring.parse('Fp:7')
        self.assertTrue(f7.is_field)
        self.assertEqual(f7.modulus, 7)
        self.assertEqual(str(f7), 'Fp:7')

    def test_composite_modulus_rejected(self):
        """Should reject a composite modulus with 'modulus not prime'."""
        with self.assertRaisesRegex(InputError, 'modulus not prime'):
            Ring.parse('Fp:4')

    def test_unknown_ring_rejected(self):
        """Should reject an unknown ring name."""
        with self.assertRaises(InputError):
            Ring.parse('R')

    def test_units(self):
        """Should treat +-1 as the only units over Z and nonzero residues over Fp."""
        self.assertTrue(Z.is_unit(-1))
        self.assertFalse(Z.is_unit(2))
        f3 = Ring('Fp', 3)
        self.assertTrue(f3.is_unit(2))
        self.assertFalse(f3.is_unit(3))
        self.assertTrue(Q.is_unit(5))

    def test_rings_hash_by_value(self):
        """Should compare and hash rings by kind and modulus."""
        self.assertEqual(Ring('Fp', 5), Ring.parse('Fp:5'))
        self.assertEqual(len({Ring('Z'), Ring.parse('Z'), Ring('Q')}), 2)


class TestIntMatrix(BaseTestCase):
    """Tests for the immutable integer matrix."""

    def test_product_and_transpose(self):
        """Should multiply and transpose exactly."""
        a = rows([1, 2], [3, 4])
        self.assertEqual(a @ IntMatrix.identity(2), a)
        self.assertEqual((a @ a).to_list(), [[7, 10], [15, 22]])
        self.assertEqual(a.transpose().to_list(), [[1, 3], [2, 4]])

    def test_stacking(self):
        """Should stack side by side and build block diagonals."""
        a = rows([1], [2])
        b = rows([3, 4], [5, 6])
        self.assertEqual(IntMatrix.hstack([a, b]).to_list(), [[1, 3, 4], [2, 5, 6]])
        diagonal = IntMatrix.block_diagonal([rows([1]), rows([2, 3])])
        self.assertEqual(diagonal.to_list(), [[1, 0, 0], [0, 2, 3]])

    def test_zero_in_ring(self):
        """Should detect zero matrices modulo p."""
        self.assertTrue(rows([2, 4]).is_zero(Ring('Fp', 2)))
        self.assertFalse(rows([2, 4]).is_zero())

    def test_shape_mismatch(self):
        """Should refuse to multiply incompatible shapes."""
        with self.assertRaises(InconsistencyError):
            _ = rows([1, 2]) @ rows([1, 2])


class TestNormalForms(BaseTestCase):
    """Tests for Hermite and Smith normal forms."""

    def test_xgcd(self):
        """Should return Bezout coefficients for the gcd."""
        g, s, t = xgcd(12, 18)
        self.assertEqual(g, 6)
        self.assertEqual(s * 12 + t * 18, 6)
        self.assertEqual(xgcd(0, -5)[0], 5)

    def test_hermite_form(self):
        """Should reduce a 2x2 matrix to its canonical column Hermite form."""
        m = rows([2, 4], [3, 5])
        h, u = hermite_normal_form(m)
        self.assertEqual(h.to_list(), [[2, 0], [0, 1]])
        self.assertEqual(m @ u, h)
        self.assertIn(determinant(u), (1, -1))

    def test_column_basis_drops_dependent_columns(self):
        """Should return one generator for a rank-one column lattice."""
        self.assertEqual(column_basis(rows([1, 2], [2, 4])).to_list(), [[1], [2]])

    def test_smith_form_against_sympy(self):
        """Should agree with sympy's Smith normal form up to sign."""
        data = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
        m = IntMatrix.from_rows(data)
        s, u, v = smith_normal_form(m)
        self.assertEqual(u @ m @ v, s)
        oracle = sympy_smith(Matrix(data), domain=ZZ)
        self.assertEqual(smith_invariants(m), [abs(oracle[i, i]) for i in range(3)])
        self.assertEqual(smith_invariants(m), [2, 6, 12])

    def test_smith_form_rectangular(self):
        """Should handle non-square matrices with a zero invariant."""
        m = rows([1, 2, 3], [2, 4, 6])
        s, u, v = smith_normal_form(m)
        self.assertEqual(u @ m @ v, s)
        self.assertEqual(smith_invariants(m), [1, 0])

    def test_determinant(self):
        """Should return 1 for the empty matrix and exact values otherwise."""
        self.assertEqual(determinant(IntMatrix(0, 0)), 1)
        self.assertEqual(determinant(rows([2, 1], [1, 1])), 1)
        self.assertEqual(determinant(rows([2, 4, 4], [-6, 6, 12], [10, -4, -16])), -144)


class TestLattices(BaseTestCase):
    """Tests for kernels, saturation and integral solves."""

    def test_kernel_is_saturated(self):
        """Should return a saturated kernel basis annihilated by the matrix."""
        m = rows([1, 1, 1])
        kernel = kernel_lattice(m)
        self.assertEqual(kernel.cols, 2)
        self.assertTrue((m @ kernel).is_zero())
        self.assertEqual(saturate(kernel), kernel)

    def test_saturate(self):
        """Should saturate 2*e1 to e1."""
        self.assertEqual(saturate(rows([2], [0])).to_list(), [[1], [0]])

    def test_saturate_dependent_columns(self):
        """Should raise InconsistencyError on dependent columns."""
        with self.assertRaises(InconsistencyError):
            saturate(rows([1, 2], [1, 2]))

    def test_integral_solve(self):
        """Should solve exactly and report non-integral systems."""
        self.assertEqual(solve_integral(rows([2]), rows([4])).to_list(), [[2]])
        self.assertIsNone(try_solve_integral(rows([2]), rows([3])))
        with self.assertRaises(InconsistencyError):
            solve_integral(rows([2]), rows([3]))

    def test_unimodular_inverse(self):
        """Should invert a unimodular matrix."""
        u = rows([2, 1], [1, 1])
        self.assertEqual(u @ unimodular_inverse(u), IntMatrix.identity(2))


class TestFieldAlgebra(BaseTestCase):
    """Tests for ranks, kernels and solves over Q and Fp."""

    def test_rank_depends_on_ring(self):
        """Should see 2*I as rank 2 over Q and rank 0 over F2."""
        m = rows([2, 0], [0, 2])
        self.assertEqual(rank(m, Q), 2)
        self.assertEqual(rank(m, Ring('Fp', 2)), 0)
        self.assertEqual(rank(rows([1, 1], [1, 1]), Z), 1)

    def test_kernel_mod_p(self):
        """Should find the all-ones vector in the kernel of [1 1] over F2."""
        kernel = kernel_basis(rows([1, 1]), Ring('Fp', 2))
        self.assertEqual(kernel.to_list(), [[1], [1]])

    def test_solve_mod_p(self):
        """Should solve 2x = 1 over F3."""
        f3 = Ring('Fp', 3)
        self.assertEqual(solve(rows([2]), rows([1]), f3).to_list(), [[2]])


class TestHomology(BaseTestCase):
    """Tests for homology of a pair of maps and isomorphism decisions."""

    def test_torsion_over_z(self):
        """Should present Z/2 as the homology of multiplication by 2."""
        group = homology_of_pair(rows([2]), IntMatrix(0, 1), Z)
        self.assertEqual(group.free_rank, 0)
        self.assertEqual(group.invariant_factors, (2,))
        self.assertFalse(group.is_zero)
        self.assertEqual(group.describe(), 'Z/2')

    def test_torsion_vanishes_over_q(self):
        """Should give the zero group over Q for multiplication by 2."""
        self.assertTrue(homology_of_pair(rows([2]), IntMatrix(0, 1), Q).is_zero)

    def test_free_homology(self):
        """Should count cycles modulo boundaries over Z."""
        group = homology_of_pair(IntMatrix(2, 0), IntMatrix(0, 2), Z)
        self.assertEqual(group.to_dict(), {'free_rank': 2, 'torsion': []})

    def test_not_a_complex(self):
        """Should raise NotAComplexError when the composite is nonzero."""
        with self.assertRaisesRegex(NotAComplexError, 'not a complex'):
            check_complex(rows([1]), rows([1]))

    def test_isomorphism_free(self):
        """Should decide multiplication by 2 per ring."""
        one = GroupPresentation.free(1)
        self.assertFalse(is_isomorphism(rows([2]), one, one, Z))
        self.assertTrue(is_isomorphism(rows([2]), one, one, Q))
        self.assertFalse(is_isomorphism(rows([2]), one, one, Ring('Fp', 2)))
        self.assertTrue(is_isomorphism(rows([-1]), one, one, Z))

    def test_isomorphism_with_torsion(self):
        """Should accept the identity of Z/2 and reject the zero map."""
        z2 = GroupPresentation.from_relations(rows([2]), Z)
        self.assertEqual(z2.invariant_factors, (2,))
        self.assertTrue(is_isomorphism(rows([1]), z2, z2, Z))
        self.assertFalse(is_isomorphism(rows([0]), z2, z2, Z))

    def test_isomorphism_shape_mismatch(self):
        """Should raise InputError when the map does not fit the modules."""
        with self.assertRaises(InputError):
            is_isomorphism(rows([1, 0]), GroupPresentation.free(1),
                           GroupPresentation.free(1), Z)

    def test_invalid_invariant_factors(self):
        """Should reject factors that break the divisibility chain."""
        with self.assertRaises(InconsistencyError):
            GroupPresentation(0, (2, 3))
        self.assertEqual(GroupPresentation(2, (2,), Z).describe(), 'Z^2 + Z/2')


if __name__ == '__main__':
    unittest.main()
