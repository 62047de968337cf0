#!/usr/bin/env python3
#-*- coding:  utf-8 -*-

from hypothesis import given, settings, strategies as st

from curved_hpl import scalar_errors
from curved_hpl.complex import CurvedComplex
from curved_hpl.filtered import IdealSpec
from curved_hpl.homotopy import SHEData, validate_she
from curved_hpl.hpltest import HplTestCase
from curved_hpl.perturb import TRAILING_FACTOR_NOTE, curved_perturb, perturb_zhe, verify_transfer
from curved_hpl.scalar import Scalar

from ..init import CONTEXT, generator, module, single

class Test(HplTestCase):
    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_curved(self, seed):
        "the transferred data should satisfy every output equation and reduce to the z-homotopy transfer at ε = 0"
        inst = generator(seed).curved_instance()
        self.hplAssertReportOk(validate_she(inst.she))
        transfer = curved_perturb(inst.she, inst.alpha, ideal=inst.ideal)
        self.assertEqual(transfer.mode, 'curved')
        self.assertEqual(transfer.zscalar, Scalar.z(CONTEXT))
        self.assertEqual(transfer.beta.context, CONTEXT)
        self.assertFalse(transfer.beta.has_eps)
        self.assertIn(TRAILING_FACTOR_NOTE, transfer.notes)
        report = verify_transfer(transfer)
        self.hplAssertReportOk(report)
        self.assertEqual(len(report.checks), 8)
        self.assertIn(TRAILING_FACTOR_NOTE, report.notes)
        self.assertIsInstance(transfer.equivalence(), SHEData)

        ztransfer = perturb_zhe(inst.zhe(), inst.alpha, inst.ideal)
        self.hplAssertMapEqual(transfer.beta, ztransfer.beta)
        for name in ('F', 'G', 'H'):
            self.hplAssertMapEqual(getattr(transfer, name).at_eps_zero(), getattr(ztransfer, name))

    def test_truncation(self):
        "the ε order of the data should cover the substitution ε ↦ z + ε"
        inst = generator(11).curved_instance()
        with self.assertRaises(scalar_errors.TruncationError):
            curved_perturb(inst.she.with_context(CONTEXT), inst.alpha)

    def test_zscalar(self):
        "the curvature increment should be a polynomial in z without constant term"
        inst = generator(11).curved_instance()
        for zscalar in (Scalar.z(CONTEXT) + 1, Scalar.eps(CONTEXT)):
            with self.assertRaises(ValueError):
                curved_perturb(inst.she, inst.alpha, zscalar)

    def test_alpha_with_eps(self):
        "the perturbation should not depend on ε"
        mod = module({0: 1, 1: 1})
        she = SHEData.identity(CurvedComplex.with_zero_differential(mod))
        alpha = single(mod, mod, 1, 1, 1, j=1)
        with self.assertRaises(ValueError):
            curved_perturb(she, alpha)

    def test_eps_components(self):
        "the generated strong equivalences should have ε terms, and the transfer still hold"
        found = 0
        for seed in range(10):
            inst = generator(seed).curved_instance()
            if not any(fmap.has_eps for fmap in inst.she.maps().values()):
                continue
            found += 1
            self.hplAssertReportOk(verify_transfer(curved_perturb(inst.she, inst.alpha, ideal=inst.ideal)))
        self.assertGreater(found, 0)
        plain = generator(0).curved_instance(skew=False)
        self.assertFalse(any(fmap.has_eps for fmap in plain.she.maps().values()))

    def test_adic_instance(self):
        "an adic instance should carry a perturbation in (z, ε)"
        for seed in range(5):
            inst = generator(seed).curved_instance(ideal='adic')
            self.assertEqual(inst.ideal.kind, 'adic')
            self.assertTrue(inst.ideal.contains(inst.alpha))
            self.assertTrue(IdealSpec.adic().contains(inst.alpha))
            self.hplAssertReportOk(verify_transfer(curved_perturb(inst.she, inst.alpha, ideal=inst.ideal)))
        with self.assertRaises(ValueError):
            generator(0).curved_instance(ideal='triangular')
