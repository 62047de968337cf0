#!/usr/bin/env python3
#-*- coding:  utf-8 -*-

from curved_hpl import homotopy_errors, perturb_errors
from curved_hpl.complex import CurvedComplex, twist
from curved_hpl.graded import GradedMap, assemble, shift_iso
from curved_hpl.homotopy import HEData, cone_contraction_from_he
from curved_hpl.hpltest import HplTestCase
from curved_hpl.perturb import neumann_inverse, perturb_contraction

from ..init import module

class Test(HplTestCase):
    def setUp(self):
        "cone(id_V), V = Q² in degree 0, with its contraction"
        vcplx = CurvedComplex.with_zero_differential(module({0: 2}))
        built = cone_contraction_from_he(HEData.identity(vcplx))
        self.cplx, self.contraction = built.cone.complex, built.contraction
        mod = self.cplx.module
        nil = GradedMap.from_rows(vcplx.module, vcplx.module, 0, {0: [[0, 0], [1, 0]]})
        self.alpha = assemble(mod, mod, 1, {('target', 'source'): nil @ shift_iso(vcplx.module, 1)})

    def test_zero(self):
        "α = 0 should keep the contraction"
        zero = GradedMap.zero(self.cplx.module, self.cplx.module, 1)
        self.hplAssertMapEqual(perturb_contraction(self.contraction, zero, self.cplx),
                               self.contraction)

    def test_perturbed(self):
        "h(id + αh)^-1 should contract tw_α(X)"
        hmap = perturb_contraction(self.contraction, self.alpha, self.cplx)
        self.hplAssertContraction(hmap, twist(self.cplx, self.alpha))

    def test_closed_forms(self):
        "h(id + αh)^-1 = (id + hα)^-1 h"
        hmap, alpha = self.contraction, self.alpha
        self.hplAssertMapEqual(hmap @ neumann_inverse(alpha @ hmap),
                               neumann_inverse(hmap @ alpha) @ hmap)

    def test_not_a_contraction(self):
        with self.assertRaises(homotopy_errors.NotAContraction):
            perturb_contraction(2 * self.contraction, self.alpha, self.cplx)

    def test_minus_delta(self):
        "α = -δ twists X into (X, 0) but id + αh is not inverted by a finite series"
        alpha = -self.cplx.delta
        self.hplAssertMaurerCartan(self.cplx, alpha)
        with self.assertRaises(perturb_errors.NeumannCapExceeded):
            perturb_contraction(self.contraction, alpha, self.cplx, cap=16)
