#!/usr/bin/env python3
#-*- coding:  utf-8 -*-

from hypothesis import given, settings, strategies as st

from curved_hpl import graded_errors, perturb_errors
from curved_hpl.filtered import FilteredComplex, Poset, triangularity_defect
from curved_hpl.graded import GradedMap
from curved_hpl.homotopy import HEData
from curved_hpl.hpltest import HplTestCase
from curved_hpl.perturb import poset_reduce, verify_transfer

from ..init import generator, oracle_homology, point

class Test(HplTestCase):
    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_reduce(self, seed):
        "the reduced complex should be filtered by the same poset and have the same homology"
        inst = generator(seed).filtered_instance(size=2 + seed % 3, chain=seed % 2 == 1)
        fcomplex = inst.fcomplex
        result = poset_reduce(fcomplex, inst.equivalences)
        self.hplAssertReportOk(verify_transfer(result.transfer))
        reduced = result.reduced
        self.assertEqual(reduced.poset, fcomplex.poset)
        self.assertIsNone(triangularity_defect(reduced.alpha, reduced.poset))
        for label in fcomplex.poset.elements:
            self.assertEqual(reduced.summands[label], inst.equivalences[label].target)
        self.assertEqual(oracle_homology(fcomplex.twisted), oracle_homology(reduced.twisted))

    def test_single_element(self):
        "a single summand carries no perturbation"
        inst = generator(13).filtered_instance(size=1)
        result = poset_reduce(inst.fcomplex, inst.equivalences)
        self.hplAssertZero(result.reduced.alpha)
        data = inst.equivalences['x0']
        self.hplAssertMapEqual(result.transfer.F, result.total.f)
        self.assertEqual(result.reduced.summands['x0'], data.target)

    def test_missing_equivalence(self):
        inst = generator(13).filtered_instance(size=2)
        equivalences = dict(inst.equivalences)
        del equivalences['x1']
        with self.assertRaises(perturb_errors.PosetError):
            poset_reduce(inst.fcomplex, equivalences)

    def test_wrong_source(self):
        "each equivalence should start at its summand"
        inst = generator(13).filtered_instance(size=2)
        equivalences = dict(inst.equivalences)
        equivalences['x0'] = HEData.identity(point(degree=50))
        with self.assertRaises(graded_errors.ShapeMismatch):
            poset_reduce(inst.fcomplex, equivalences)

    def test_not_triangular(self):
        "a block against the order should be refused"
        poset = Poset.chain(['a', 'b'])
        summands = {'a': point(0), 'b': point(1)}
        upward = GradedMap.from_rows(summands['a'].module, summands['b'].module, 1, {0: [[1]]})
        FilteredComplex.from_blocks(poset, summands, {('b', 'a'): upward})
        with self.assertRaises(perturb_errors.TriangularityError) as err:
            FilteredComplex.from_blocks(poset, summands, {('a', 'b'): GradedMap.zero(
                summands['b'].module, summands['a'].module, 1)})
        self.assertEqual((err.exception.row, err.exception.col), ('a', 'b'))
        diagonal = GradedMap.zero(summands['a'].module, summands['a'].module, 1)
        with self.assertRaises(perturb_errors.TriangularityError):
            FilteredComplex.from_blocks(poset, summands, {('a', 'a'): diagonal})
