"""Randomized cross-checks between certificates and their characterizations.

Each theorem check raises InconsistencyError when a characterization and
the direct certificate disagree, so a passing run means zero violations.
"""

import random
import unittest
from math import gcd

from sympy import Matrix

from tropfan.duality import (
    FAILS, classify_dim1, integral_local_tpd_criterion, is_local_tpd, is_tpd,
    is_uniquely_balanced, local_tpd_characterization, tpd_from_stars_check,
)
from tropfan.errors import InputError
from tropfan.exact_linalg import (
    GroupPresentation, IntMatrix, Ring, determinant, hermite_normal_form, is_isomorphism,
    smith_normal_form,
)
from tropfan.fan_core import (
    Matroid, WeightedFan, bergman_fan, boolean_matroid, build_fan, stellar_subdivide,
    uniform_matroid,
)
from tests.base import BaseTestCase, load_fixture

Z = Ring('Z')
Q = Ring('Q')
F3 = Ring('Fp', 3)

WEIGHTS = (1, -1, 2, -2, 3, -3)
MATROIDS = (
    boolean_matroid(3),
    uniform_matroid(3, 4),
    Matroid(4, [[0, 1, 3], [0, 2, 3], [1, 2, 3]]),
)


def random_curve_fan(rng):
    """A balanced one-dimensional fan with 3 to 8 rays in rank 2 to 4."""
    while True:
        n = rng.randint(2, 4)
        count = rng.randint(2, 7)
        rays = []
        while len(rays) < count:
            ray = tuple(rng.randint(-2, 2) for _ in range(n))
            if any(ray) and gcd(*ray) == 1 and ray not in rays:
                rays.append(ray)
        weights = [rng.choice(WEIGHTS) for _ in rays]
        total = [-sum(w * r[c] for w, r in zip(weights, rays)) for c in range(n)]
        g = gcd(*total)
        if g == 0 or g > 3:
            continue
        last = tuple(x // g for x in total)
        if last in rays:
            continue
        rays.append(last)
        weights.append(g)
        fan = build_fan(n, [list(r) for r in rays], [[i] for i in range(len(rays))])
        return WeightedFan(fan, Z, dict(zip(fan.maximal_faces(), weights)))


def random_surface_fan(rng):
    """A matroid fan, possibly subdivided once, with all weights scaled."""
    wf = bergman_fan(rng.choice(MATROIDS))
    if rng.random() < 0.5:
        try:
            wf = stellar_subdivide(wf, rng.choice(wf.fan.maximal_faces()))
        except InputError:
            pass
    scale = rng.choice((1, -1, 2, 3))
    return WeightedFan(wf.fan, Z, {alpha: scale * w for alpha, w in wf.weights.items()})


class TestDimensionOneClassification(BaseTestCase):
    """Unique balancing with unit weights decides TPD for curves."""

    def test_random_curves(self):
        """Should agree with the direct certificate on 100 random fans over Z, Q and F3."""
        rng = random.Random(20240611)
        for index in range(100):
            wf = random_curve_fan(rng)
            for ring in (Z, Q, F3):
                try:
                    over = wf.with_ring(ring)
                except InputError:
                    continue
                report = is_tpd(over)
                self.assertEqual(classify_dim1(over), report.verdict, (index, str(ring)))
                if report.verdict:
                    self.assertTrue(is_uniquely_balanced(over))


class TestSurfaceCharacterizations(BaseTestCase):
    """Star criteria against direct certificates on two-dimensional fans."""

    def check_fan(self, wf):
        """Run every characterization; each raises on disagreement."""
        local = is_local_tpd(wf)
        local_tpd_characterization(wf, local_report=local)
        if wf.ring.kind == 'Z':
            criterion = integral_local_tpd_criterion(wf, local_report=local)
            if not wf.all_weights_units():
                self.assertFalse(criterion.verdict)
        if wf.fan.dim >= 2:
            self.assertNotEqual(tpd_from_stars_check(wf).status, FAILS)

    def test_random_surfaces(self):
        """Should find no violation on 50 random surfaces over Z and Q."""
        rng = random.Random(7)
        for _ in range(50):
            wf = random_surface_fan(rng)
            self.check_fan(wf)
            self.check_fan(wf.with_ring(Q))

    def test_golden_fans(self):
        """Should find no violation on the golden fans."""
        for name in ('crown.json', 'proper_stars_tpd.json', 'u34.json', 'tripod.json'):
            self.check_fan(load_fixture(name))

    def test_scaled_weights(self):
        """Should lose local TPD over Z but keep it over Q when weights double."""
        base = bergman_fan(uniform_matroid(3, 4))
        doubled = WeightedFan(base.fan, Z, {a: 2 for a in base.fan.maximal_faces()})
        self.assertFalse(integral_local_tpd_criterion(doubled).verdict)
        self.assertTrue(local_tpd_characterization(doubled.with_ring(Q)).verdict)


class TestRandomMatrices(BaseTestCase):
    """Normal forms and isomorphism decisions on random integer matrices."""

    def test_normal_form_identities(self):
        """Should reconstruct H = MU and S = UMV with unimodular transforms."""
        rng = random.Random(3)
        for _ in range(30):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            m = IntMatrix.from_rows([[rng.randint(-5, 5) for _ in range(cols)]
                                     for _ in range(rows)])
            h, u = hermite_normal_form(m)
            self.assertEqual(m @ u, h)
            self.assertIn(determinant(u), (1, -1))
            s, left, right = smith_normal_form(m)
            self.assertEqual(left @ m @ right, s)
            self.assertIn(determinant(left), (1, -1))
            self.assertIn(determinant(right), (1, -1))

    def test_isomorphism_against_determinant(self):
        """Should decide 4x4 maps by the determinant over Z, Q and F3."""
        rng = random.Random(11)
        free = GroupPresentation.free(4)
        for _ in range(40):
            data = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)]
            m = IntMatrix.from_rows(data)
            det = Matrix(data).det()
            self.assertEqual(is_isomorphism(m, free, free, Z), abs(det) == 1)
            self.assertEqual(is_isomorphism(m, free, free, Q), det != 0)
            self.assertEqual(is_isomorphism(m, free, free, F3), det % 3 != 0)


if __name__ == '__main__':
    unittest.main()
