#!/usr/bin/env python3
#-*- coding:  utf-8 -*-

"""Corrupted inputs should be reported by the validators, not accepted."""

import dataclasses

from hypothesis import assume, given, settings, strategies as st

from curved_hpl import complex_errors
from curved_hpl.complex import twist
from curved_hpl.homotopy import HEData, SHEData, promote_he_to_she, validate_he, validate_she
from curved_hpl.hpltest import HplTestCase
from curved_hpl.perturb import markl_perturb, total_equivalence, verify_transfer
from curved_hpl.scalar import Context, Scalar

from ..init import generator

H_CHECK = 'd(h) = id - gf - sh²'

class Test(HplTestCase):
    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_doubled_g(self, seed):
        "doubling g should break d(h) = id - gf"
        data = generator(seed).homotopy_equivalence()
        assume(not data.target.module.is_zero())
        broken = HEData(data.source, data.target, data.f, 2 * data.g, data.h, data.k)
        report = validate_he(broken)
        self.hplAssertReportFails(report, H_CHECK)
        self.hplAssertMapEqual(report[H_CHECK].residual, data.g @ data.f)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_doubled_strong_g(self, seed):
        "doubling g should break the strong equations as well"
        data = generator(seed).homotopy_equivalence()
        assume(not data.target.module.is_zero())
        she = promote_he_to_she(data, eps_order=4)
        self.hplAssertReportOk(validate_she(she))
        broken = SHEData(she.source, she.target, she.f, 2 * she.g, she.h, she.k)
        report = validate_she(broken)
        self.hplAssertReportFails(report, H_CHECK)
        self.assertFalse(report[H_CHECK].residual.at_eps_zero().is_zero())

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_curvature_forgotten(self, seed):
        "the curved α only twists for the curvature z"
        inst = generator(seed).curved_instance()
        source = inst.zhe().source
        assume(not source.module.is_zero())
        twist(source, inst.alpha, Scalar.z(source.context))
        with self.assertRaises(complex_errors.MaurerCartanError) as err:
            twist(source, inst.alpha, Scalar.zero(source.context))
        self.assertFalse(err.exception.residual.is_zero())

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_corrupted_transfer(self, seed):
        "a transfer whose G was doubled should fail verification"
        inst = generator(seed).filtered_instance(size=2)
        fcomplex = inst.fcomplex
        total = total_equivalence(fcomplex, inst.equivalences)
        she = promote_he_to_she(total, eps_order=5)
        transfer = markl_perturb(she, fcomplex.alpha.with_context(Context(4, 4)), fcomplex.ideal)
        self.hplAssertReportOk(verify_transfer(transfer))
        assume(not (transfer.G @ transfer.F).is_zero())
        broken = dataclasses.replace(transfer, G=2 * transfer.G)
        report = verify_transfer(broken)
        self.hplAssertReportFails(report, 'd(H) + αH + Hα = id - GF - εH²')
        self.assertTrue(report['MC(β)'].passed)
