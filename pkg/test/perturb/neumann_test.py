#!/usr/bin/env python3
#-*- coding:  utf-8 -*-

from curved_hpl import graded_errors, perturb_errors
from curved_hpl.filtered import IdealSpec, Poset
from curved_hpl.graded import GradedMap, GradedModule, assemble
from curved_hpl.hpltest import HplTestCase
from curved_hpl.perturb import neumann_inverse
from curved_hpl.scalar import Scalar

from ..init import CONTEXT, module, single

LABELS = ['x', 'y', 'w']

def triangle():
    "Three copies of Q in degrees 0 and 2, decomposed along x < y < w"
    return GradedModule.direct_sum([(label, module({0: 1, 2: 1})) for label in LABELS])

class Test(HplTestCase):
    def setUp(self):
        self.mod = triangle()
        self.part = part = module({0: 1, 2: 1})
        self.lower = assemble(self.mod, self.mod, 0, {
            ('y', 'x'): single(part, part, 0, 0, 2), ('w', 'y'): single(part, part, 0, 0, -1)})
        self.diagonal = assemble(self.mod, self.mod, 0, {('x', 'x'): single(part, part, 0, 0, 3)})
        self.down = assemble(self.mod, self.mod, -2, {('x', 'x'): single(part, part, -2, 2, 3)})

    def test_zero(self):
        "(id + 0)^-1 = id"
        ident = GradedMap.identity(self.mod)
        self.hplAssertMapEqual(neumann_inverse(GradedMap.zero(self.mod, self.mod, 0)), ident)

    def test_square_zero(self):
        "(id + u)^-1 = id - u when u² = 0"
        nil = assemble(self.mod, self.mod, 0, {('w', 'x'): single(self.part, self.part, 0, 0, 5)})
        self.hplAssertMapEqual(neumann_inverse(nil), GradedMap.identity(self.mod) - nil)

    def test_sum_ideal(self):
        "u = z·a + b, b strictly lower triangular, should be inverted two-sidedly"
        umap = Scalar.z(CONTEXT) * self.down + self.lower
        self.assertEqual(umap.degree, 0)
        ideal = IdealSpec.sum(Poset.chain(LABELS))
        self.assertTrue(ideal.contains(umap))
        inverse = neumann_inverse(umap, ideal)
        self.hplAssertInverse(GradedMap.identity(self.mod) + umap, inverse)

    def test_triangular_ideal(self):
        ideal = IdealSpec.triangular(Poset.chain(LABELS))
        inverse = neumann_inverse(self.lower, ideal)
        self.hplAssertInverse(GradedMap.identity(self.mod) + self.lower, inverse)
        with self.assertRaises(perturb_errors.NotInIdeal) as cm:
            neumann_inverse(self.diagonal, ideal)
        self.assertEqual(cm.exception.kind, 'triangular')

    def test_adic_ideal(self):
        "a map with a constant part is not in (z, ε)"
        with self.assertRaises(perturb_errors.NotInIdeal):
            neumann_inverse(self.lower, IdealSpec.adic())

    def test_cap(self):
        "a series which does not terminate should hit the cap"
        with self.assertRaises(perturb_errors.NeumannCapExceeded) as cm:
            neumann_inverse(-GradedMap.identity(self.mod), cap=10)
        self.assertEqual(cm.exception.cap, 10)
        with self.assertRaises(perturb_errors.NeumannCapExceeded):
            neumann_inverse(self.lower, cap=2)
        neumann_inverse(self.lower, cap=3)

    def test_degree(self):
        mod = module({0: 1, 1: 1})
        with self.assertRaises(graded_errors.DegreeMismatch):
            neumann_inverse(single(mod, mod, 1, 0, 1))

    def test_not_endomorphism(self):
        with self.assertRaises(graded_errors.ShapeMismatch):
            neumann_inverse(GradedMap.zero(self.mod, module({0: 1}), 0))

    def test_ideal_spec(self):
        with self.assertRaises(ValueError):
            IdealSpec('nilpotent')
        with self.assertRaises(perturb_errors.PosetError):
            IdealSpec('triangular')
        self.assertEqual(IdealSpec.triangular(Poset.chain(LABELS)).with_adic().kind, 'sum')
        self.assertEqual(IdealSpec.adic().with_adic(), IdealSpec.adic())
