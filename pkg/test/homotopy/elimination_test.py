#!/usr/bin/env python3
#-*- coding:  utf-8 -*-

from hypothesis import given, settings, strategies as st

from curved_hpl import complex_errors, graded_errors
from curved_hpl.complex import CurvedComplex
from curved_hpl.elimination import gaussian_elimination, minimal_reduction
from curved_hpl.graded import GradedMap
from curved_hpl.homology import euler_characteristic, homology_ranks, is_plain, specialize
from curved_hpl.homotopy import validate_he
from curved_hpl.hpltest import HplTestCase

from ..init import factorization, generator, module, oracle_homology, single, unit_complex

def wide():
    "Q² → Q with δ = [1, 0]"
    mod = module({0: 2, 1: 1})
    return CurvedComplex(mod, GradedMap.from_rows(mod, mod, 1, {0: [[1, 0]]}))

class Test(HplTestCase):
    def test_unit(self):
        "Q → Q with a unit differential should reduce to 0"
        data = gaussian_elimination(unit_complex(3), 0, [0], [0])
        self.hplAssertReportOk(validate_he(data))
        self.assertTrue(data.target.module.is_zero())

    def test_partial(self):
        "eliminating the pivot of Q² → Q should leave Q in degree 0"
        data = gaussian_elimination(wide(), 0, [0], [0])
        self.hplAssertReportOk(validate_he(data))
        self.assertEqual(dict(data.target.module.ranks), {0: 1})

    def test_singular_pivot(self):
        with self.assertRaises(graded_errors.NotInvertible):
            gaussian_elimination(wide(), 0, [0], [1])

    def test_no_differential(self):
        flat = CurvedComplex.with_zero_differential(module({0: 1, 1: 1}))
        with self.assertRaises(graded_errors.NotInvertible):
            gaussian_elimination(flat, 0, [0], [0])

    def test_bad_pivot(self):
        with self.assertRaises(ValueError):
            gaussian_elimination(wide(), 0, [0], [5])
        with self.assertRaises(ValueError):
            gaussian_elimination(wide(), 0, [], [])

    def test_not_plain(self):
        "curved complexes should be refused"
        with self.assertRaises(complex_errors.NotPlain):
            gaussian_elimination(factorization(), 0, [0], [0])
        self.assertFalse(is_plain(factorization()))

    def test_specialized_homology(self):
        "the homology of a complex depending on z should be taken at z = ε = 0"
        cplx = factorization()
        plain = specialize(cplx)
        self.assertTrue(is_plain(plain))
        self.hplAssertMapEqual(plain.delta, GradedMap.from_rows(cplx.module, cplx.module, 1, {0: [[1]]}))
        self.assertEqual(homology_ranks(cplx), {})

        mod = module({0: 1, 1: 1})
        deformed = CurvedComplex(mod, single(mod, mod, 1, 1, 1, i=1))
        self.assertFalse(is_plain(deformed))
        self.assertEqual(homology_ranks(deformed), {0: 1, 1: 1})
        flat = wide()
        self.assertIs(specialize(flat), flat)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_minimal_reduction(self, seed):
        "the reduction should reach the homology computed by an independent elimination"
        cplx = generator(seed, max_rank=3, max_span=4).plain_complex()
        data = minimal_reduction(cplx)
        self.hplAssertReportOk(validate_he(data))
        self.hplAssertZero(data.target.delta)
        expected = oracle_homology(cplx)
        self.assertEqual(dict(data.target.module.ranks), expected)
        self.assertEqual(homology_ranks(cplx), expected)
        self.assertEqual(euler_characteristic(data.target), euler_characteristic(cplx))
