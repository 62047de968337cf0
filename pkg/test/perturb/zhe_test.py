#!/usr/bin/env python3
#-*- coding:  utf-8 -*-

from hypothesis import given, settings, strategies as st

from curved_hpl import complex_errors, homotopy_errors
from curved_hpl.graded import GradedMap
from curved_hpl.homotopy import ZHEData, validate_zhe
from curved_hpl.hpltest import HplTestCase
from curved_hpl.perturb import perturb_zhe, verify_transfer
from curved_hpl.scalar import Scalar

from ..init import CONTEXT, generator

def flat(data):
    "The equivalence seen as a z-homotopy equivalence for z = 0"
    return ZHEData(data.source, data.target, data.f, data.g, data.h, data.k,
                   zscalar=Scalar.zero(data.context))

class Test(HplTestCase):
    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_curved_instance(self, seed):
        "F and G should be closed and d(H) = id - GF for the curvature z"
        inst = generator(seed).curved_instance()
        zhe = inst.zhe()
        self.hplAssertReportOk(validate_zhe(zhe))
        transfer = perturb_zhe(zhe, inst.alpha, inst.ideal)
        self.assertEqual(transfer.mode, 'zhe')
        self.assertIsNone(transfer.K)
        self.assertEqual(transfer.curvature, Scalar.z(CONTEXT))
        report = verify_transfer(transfer)
        self.hplAssertReportOk(report)
        self.assertEqual([check.name for check in report.checks],
                         ['MC(α)', 'MC(β)', 'd(F) = 0', 'd(G) = 0', 'd(H) = id - GF'])
        with self.assertRaises(ValueError):
            transfer.equivalence()

    def test_zero(self):
        "α = 0 and z = 0 should leave the equivalence unchanged"
        data = generator(5).homotopy_equivalence()
        alpha = GradedMap.zero(data.source.module, data.source.module, 1)
        transfer = perturb_zhe(flat(data), alpha)
        self.hplAssertZero(transfer.beta)
        self.hplAssertMapEqual(transfer.F, data.f)
        self.hplAssertMapEqual(transfer.G, data.g)
        self.hplAssertMapEqual(transfer.H, data.h)
        self.hplAssertReportOk(verify_transfer(transfer))

    def test_not_maurer_cartan(self):
        "α = 0 does not twist a non zero complex into curvature z"
        seed = next(seed for seed in range(100)
                    if not generator(seed).curved_instance().she.source.module.is_zero())
        inst = generator(seed).curved_instance()
        module = inst.she.source.module
        with self.assertRaises(complex_errors.MaurerCartanError) as err:
            perturb_zhe(inst.zhe(), GradedMap.zero(module, module, 1))
        self.hplAssertMapEqual(err.exception.residual,
                               -GradedMap.scalar(module, Scalar.z(CONTEXT)))

    def test_invalid(self):
        "the data should be checked before any transfer"
        data = next(data for data in map(lambda seed: generator(seed).homotopy_equivalence(), range(100))
                    if not data.f.is_zero())
        broken = ZHEData(data.source, data.target, data.f, 2 * data.g, data.h, data.k,
                         zscalar=Scalar.zero(CONTEXT))
        alpha = GradedMap.zero(data.source.module, data.source.module, 1)
        with self.assertRaises(homotopy_errors.InvalidEquivalence):
            perturb_zhe(broken, alpha)
