"""End-to-end checks on the golden fans."""

import itertools
import unittest

from tropfan.complexes import (
    bm_chain_complex, compact_cochain_complex, euler_characteristic, homology,
    plain_cochain_complex, star_bm_complex, star_row_complex,
)
from tropfan.duality import (
    HOLDS, HYPOTHESIS_VIOLATED, is_balanced, is_local_tpd, is_tpd, is_uniquely_balanced,
    local_tpd_characterization, star_tpd, tpd_from_stars_check,
)
from tropfan.exact_linalg import Ring
from tropfan.fan_core import WeightedFan, bergman_fan, boolean_matroid, reduced_star
from tropfan.trop_sheaf import build_multitangent
from tests.base import BaseTestCase, load_fixture

Z = Ring('Z')
Q = Ring('Q')
GOLDEN = ('cross.json', 'crown.json', 'tripod.json', 'proper_stars_tpd.json', 'u34.json')


class TestCross(BaseTestCase):
    """The four half-lines in the plane."""

    def test_balancing_condition(self):
        """Should balance exactly when opposite rays carry equal weights."""
        fan = load_fixture('cross.json').fan
        for values in itertools.product((1, 2), repeat=4):
            wf = WeightedFan(fan, Z, dict(zip(fan.maximal_faces(), values)))
            expected = values[0] == values[2] and values[1] == values[3]
            self.assertEqual(is_balanced(wf), expected, values)

    def test_not_tpd_over_any_ring(self):
        """Should fail TPD over Z, Q and F2."""
        for ring in ('Z', 'Q', 'Fp:2'):
            self.assertFalse(is_tpd(load_fixture('cross.json', ring)).verdict, ring)


class TestCrownFan(BaseTestCase):
    """The surface fan in Z^4 with signed weights that is TPD over Q."""

    def setUp(self):
        """Load the fan over Q."""
        super().setUp()
        self.wf = load_fixture('crown.json')

    def test_face_counts(self):
        """Should have 8 rays and 12 two-faces."""
        self.assertEqual(len(self.wf.fan.faces_of_dim(1)), 8)
        self.assertEqual(len(self.wf.fan.maximal_faces()), 12)

    def test_homology_concentrated_in_top_degree(self):
        """Should give top dimensions (1, 4, 5) for F_2, F_1, F_0 and nothing else."""
        expected = {2: 1, 1: 4, 0: 5}
        for p, top in expected.items():
            table = homology(bm_chain_complex(self.wf.fan, p, Q))
            self.assertTrue(table.vanishes_except(2), p)
            self.assertEqual(table.dims()[2], top)

    def test_tpd(self):
        """Should certify TPD with dimensions (1, 4, 5) on both sides."""
        report = is_tpd(self.wf)
        self.assertTrue(report.verdict)
        self.assertEqual(report.cohomology_dims, report.homology_dims)
        self.assertEqual(euler_characteristic(bm_chain_complex(self.wf.fan, 2, Q)), 1)

    def test_star_criterion(self):
        """Should satisfy hypotheses and conclusion, with the ray stars agreeing."""
        check = tpd_from_stars_check(self.wf)
        self.assertEqual(check.status, HOLDS)
        self.assertTrue(check.details['ray_stars_tpd'])


class TestTripod(BaseTestCase):
    """Four rays in Z^3 spanning an index-two sublattice."""

    def test_balanced_and_tpd(self):
        """Should be uniquely Z-balanced and TPD over Z."""
        wf = load_fixture('tripod.json')
        self.assertTrue(is_uniquely_balanced(wf))
        self.assertTrue(is_tpd(wf).verdict)

    def test_boundary_lists_the_rays(self):
        """Should map each ray generator to the ray vector at the vertex."""
        fan = load_fixture('tripod.json').fan
        module = build_multitangent(fan, 1)
        boundary = bm_chain_complex(fan, 1, Z).differential(1)
        vertex_basis = module.basis(fan.vertex)
        for j, ray in enumerate(fan.faces_of_dim(1)):
            image = vertex_basis @ boundary.select_columns([j])
            self.assertIn(image.column(0), (fan.rays[ray - 1],
                                            tuple(-x for x in fan.rays[ray - 1])))


class TestProperStarsFan(BaseTestCase):
    """A fan whose proper stars are TPD while the fan itself is not."""

    def setUp(self):
        """Load the fan over Q."""
        super().setUp()
        self.wf = load_fixture('proper_stars_tpd.json')

    def test_face_counts(self):
        """Should have 8 rays and 12 two-faces."""
        self.assertEqual(len(self.wf.fan.faces_of_dim(1)), 8)
        self.assertEqual(len(self.wf.fan.maximal_faces()), 12)

    def test_top_coefficients(self):
        """Should give chi = -1 and nonzero H_1 for F_2."""
        complex_ = bm_chain_complex(self.wf.fan, 2, Q)
        self.assertEqual(euler_characteristic(complex_), -1)
        self.assertFalse(homology(complex_).group(1).is_zero)

    def test_proper_stars_pass(self):
        """Should pass every proper star and fail globally."""
        fan = self.wf.fan
        for gamma in fan.face_ids[1:]:
            self.assertTrue(star_tpd(self.wf, gamma).verdict, gamma)
        self.assertFalse(is_tpd(self.wf).verdict)

    def test_star_criterion_hypothesis(self):
        """Should report the vanishing hypothesis as violated."""
        check = tpd_from_stars_check(self.wf)
        self.assertEqual(check.status, HYPOTHESIS_VIOLATED)
        self.assertFalse(check.hypotheses['homology_vanishes'])
        self.assertTrue(check.hypotheses['proper_stars_tpd'])
        self.assertFalse(check.conclusion)

    def test_local_characterization(self):
        """Should fail both the characterization and the direct local check."""
        report = local_tpd_characterization(self.wf)
        self.assertFalse(report.verdict)
        self.assertFalse(report.direct_verdict)
        self.assertFalse(report.conditions['stars_vanish'])

    def test_row_complex_hypothesis(self):
        """Should fail the vanishing hypothesis of the row complex at the vertex."""
        table = homology(star_bm_complex(self.wf.fan, self.wf.fan.vertex, 2, Q))
        self.assertIsNotNone(table.first_nonzero_except(2))


class TestMatroidFans(BaseTestCase):
    """Bergman fans of U_{3,4} and of the Boolean matroid on three elements."""

    def setUp(self):
        """Load the U_{3,4} fan over Z."""
        super().setUp()
        self.wf = load_fixture('u34.json')

    def test_counts_and_balancing(self):
        """Should have 10 rays and 12 two-cones and be uniquely Z-balanced."""
        self.assertEqual(len(self.wf.fan.rays), 10)
        self.assertEqual(len(self.wf.fan.maximal_faces()), 12)
        self.assertTrue(is_uniquely_balanced(self.wf))

    def test_local_tpd_over_z(self):
        """Should certify local TPD over Z."""
        self.assertTrue(is_local_tpd(self.wf).verdict)

    def test_ray_star_top_homology(self):
        """Should give a rank one top group on the star of a singleton flat for F_2."""
        ray = self.wf.fan.faces_of_dim(1)[0]
        table = homology(star_bm_complex(self.wf.fan, ray, 2, Z))
        self.assertEqual(table.dims()[2], 1)

    def test_row_complex_exact(self):
        """Should be exact except in the rightmost position for p = 0, 1, 2."""
        for p in range(3):
            table = homology(star_row_complex(self.wf, p, Z))
            self.assertTrue(all(table.group(r).is_zero for r in range(2)), p)

    def test_boolean_fan(self):
        """Should make the complete A_2 fan exact in its row and TPD from its stars."""
        wf = bergman_fan(boolean_matroid(3))
        table = homology(star_row_complex(wf, 1, Z))
        self.assertTrue(all(table.group(r).is_zero for r in range(2)))
        self.assertEqual(tpd_from_stars_check(wf).status, HOLDS)

    def test_star_matches_reduced_star(self):
        """Should match the homology of each ray star with its quotient fan, shifted by one."""
        for ray in self.wf.fan.faces_of_dim(1):
            star = homology(star_bm_complex(self.wf.fan, ray, 0, Z))
            quotient = homology(bm_chain_complex(reduced_star(self.wf, ray).fan, 0, Z))
            self.assertEqual({q - 1: g for q, g in star.groups.items()}, quotient.groups)


class TestStructuralProperties(BaseTestCase):
    """Properties that hold on every golden fan."""

    def test_plain_cohomology_on_vertex(self):
        """Should give H^0 = F^p(v) and nothing in positive degrees."""
        for name in GOLDEN:
            fan = load_fixture(name).fan
            for p in range(fan.dim + 1):
                rank = build_multitangent(fan, p).rank(fan.vertex)
                table = homology(plain_cochain_complex(fan, p, Z))
                self.assertEqual(table.dims(), {0: rank}, (name, p))

    def test_universal_coefficients(self):
        """Should match compact cohomology over Q and Z with Borel-Moore homology over Z."""
        for name in GOLDEN:
            fan = load_fixture(name).fan
            for p in range(fan.dim + 1):
                bm = homology(bm_chain_complex(fan, p, Z))
                compact_q = homology(compact_cochain_complex(fan, p, Q))
                compact_z = homology(compact_cochain_complex(fan, p, Z))
                for q in range(fan.dim + 1):
                    self.assertEqual(compact_q.dims()[q], bm.dims()[q], (name, p, q))
                    below = bm.groups[q - 1].invariant_factors if q else ()
                    self.assertEqual(compact_z.group(q).invariant_factors, below,
                                     (name, p, q))


if __name__ == '__main__':
    unittest.main()
