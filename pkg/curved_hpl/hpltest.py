"""Assertion helpers for the tests of code built on curved_hpl."""

import unittest

from curved_hpl.complex import CurvedComplex, hom_diff, mc_residual
from curved_hpl.graded import GradedMap
from curved_hpl.report import Report
from curved_hpl.scalar import Scalar


class HplTestCase(unittest.TestCase):
    def hplAssertZero(self, fmap: GradedMap, msg: str=''):
        "it should be the zero map"
        if not fmap.is_zero():
            keys = ', '.join(f'z^{i}ε^{j}' for i, j in fmap.components)
            raise self.fail(f'{msg} non zero components: {keys}'.strip())

    def hplAssertMapEqual(self, left: GradedMap, right: GradedMap):
        "the maps should be equal"
        self.assertEqual(left.degree, right.degree)
        self.hplAssertZero(left - right.with_modules(left.source, left.target), 'maps differ,')

    def hplAssertReportOk(self, report: Report):
        "every check of the report should pass"
        if not report.ok:
            names = ', '.join(check.name for check in report.failures())
            raise self.fail(f'{report.title} failed: {names}')

    def hplAssertReportFails(self, report: Report, name: str):
        "the named check should fail"
        if report[name].passed:
            raise self.fail(f"'{name}' passed in {report.title}")

    def hplAssertMaurerCartan(self, cplx: CurvedComplex, alpha: GradedMap, curvature: Scalar=None):
        "(δ+α)² should be the curvature"
        self.hplAssertZero(mc_residual(cplx, alpha, curvature), 'Maurer-Cartan residual,')

    def hplAssertContraction(self, contraction: GradedMap, cplx: CurvedComplex):
        "d(h) should be the identity"
        self.hplAssertZero(hom_diff(contraction, cplx) - cplx.identity, 'd(h) - id,')

    def hplAssertInverse(self, fmap: GradedMap, inverse: GradedMap):
        "the maps should be two-sided inverses"
        self.hplAssertMapEqual(fmap @ inverse, GradedMap.identity(fmap.target))
        self.hplAssertMapEqual(inverse @ fmap, GradedMap.identity(fmap.source))
