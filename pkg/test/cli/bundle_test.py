#!/usr/bin/env python3
#-*- coding:  utf-8 -*-

import json
import os
from unittest import TestCase

from curved_hpl import bundle_errors
from curved_hpl.bundle import Bundle
from curved_hpl.homotopy import validate_he
from curved_hpl.hpltest import HplTestCase
from curved_hpl.perturb import simple_perturb, total_equivalence, verify_transfer

from ..init import generator

cur_dir = os.path.abspath(os.path.dirname(__file__))
bundle_file = os.path.join(cur_dir, 'bundle_test_file.json')

def he_bundle(seed=1):
    data = generator(seed).homotopy_equivalence()
    bundle = Bundle()
    bundle.add_complex('X', data.source)
    bundle.add_complex('Y', data.target)
    bundle.add_equivalence('E', data, 'X', 'Y')
    return bundle, data

class Test(HplTestCase):
    def tearDown(self):
        if os.path.exists(bundle_file):
            os.remove(bundle_file)

    def test_equivalence(self):
        "it should give back the stored equivalence"
        bundle, data = he_bundle()
        text = bundle.to_json()
        loaded = Bundle.from_json(text)
        self.assertEqual(loaded.to_json(), text)
        self.assertEqual(loaded.names(), ['E', 'X', 'Y'])
        self.assertEqual(loaded.names('complex'), ['X', 'Y'])
        self.assertEqual(loaded.kind('E'), 'he')
        self.assertEqual(loaded.references('E'), {'source': 'X', 'target': 'Y'})
        self.assertEqual(loaded.complex('X'), data.source)
        decoded = loaded.equivalence('E')
        self.hplAssertReportOk(validate_he(decoded))
        for name in ('f', 'g', 'h', 'k'):
            self.hplAssertMapEqual(getattr(decoded, name), getattr(data, name))

    def test_deterministic(self):
        "equal bundles should be byte identical"
        self.assertEqual(he_bundle(4)[0].to_json(), he_bundle(4)[0].to_json())

    def test_file(self):
        bundle, _ = he_bundle()
        bundle.dump(bundle_file)
        loaded = Bundle.load(bundle_file)
        self.assertEqual(loaded.filename, bundle_file)
        self.assertEqual(loaded.to_json(), bundle.to_json())

    def test_filtered_and_transfer(self):
        "filtered complexes and transfers should be stored with their complexes"
        inst = generator(2).filtered_instance(size=3)
        fcomplex = inst.fcomplex
        total = total_equivalence(fcomplex, inst.equivalences)
        transfer = simple_perturb(total, fcomplex.alpha, fcomplex.ideal)
        bundle = Bundle()
        bundle.add_filtered('P', fcomplex)
        bundle.add_complex('T.source', transfer.source)
        bundle.add_complex('T.target', transfer.target)
        bundle.add_transfer('T', transfer, 'T.source', 'T.target')
        report = verify_transfer(transfer)
        bundle.add_report('T', report)
        loaded = Bundle.from_json(bundle.to_json())

        self.assertIn('P.x0', loaded.names('complex'))
        decoded = loaded.filtered('P')
        self.assertEqual(decoded.poset, fcomplex.poset)
        self.hplAssertMapEqual(decoded.alpha, fcomplex.alpha)

        again = loaded.transfer('T')
        self.assertEqual(again.mode, 'simple')
        self.hplAssertMapEqual(again.beta, transfer.beta)
        self.hplAssertReportOk(verify_transfer(again))
        self.assertEqual(loaded.report('T'), report.to_dict())
        self.assertEqual(list(loaded.reports), ['T'])

    def test_map(self):
        bundle, data = he_bundle()
        bundle.add_map('f', data.f, 'X', 'Y')
        loaded = Bundle.from_json(bundle.to_json())
        self.assertEqual(loaded.map_complexes('f'), ('X', 'Y'))
        self.hplAssertMapEqual(loaded.map('f'), data.f)


class TestErrors(TestCase):
    def test_unresolved(self):
        "it should name the missing object"
        bundle, _ = he_bundle()
        with self.assertRaises(bundle_errors.UnresolvedReference) as cm:
            bundle.complex('Z')
        self.assertEqual(cm.exception.name, 'Z')
        with self.assertRaises(bundle_errors.UnresolvedReference):
            bundle.complex('E')
        with self.assertRaises(bundle_errors.UnresolvedReference):
            bundle.report('E')

    def test_dangling_reference(self):
        "references should be resolved at load time"
        bundle, _ = he_bundle()
        data = bundle.to_dict()
        del data['objects']['Y']
        with self.assertRaises(bundle_errors.UnresolvedReference) as cm:
            Bundle.from_dict(json.loads(json.dumps(data)))
        self.assertEqual(cm.exception.name, 'Y')

    def test_format(self):
        bundle, _ = he_bundle()
        data = json.loads(bundle.to_json())
        for key, value in (('format', 'half-orm'), ('version', 2)):
            broken = dict(data, **{key: value})
            with self.assertRaises(bundle_errors.MalformedBundle):
                Bundle.from_dict(broken, 'broken.json')
        with self.assertRaises(bundle_errors.MalformedBundle):
            Bundle.from_dict([], 'broken.json')

    def test_bad_json(self):
        with self.assertRaises(bundle_errors.MalformedBundle) as cm:
            Bundle.from_json('{"format": ', 'broken.json')
        self.assertEqual(cm.exception.filename, 'broken.json')

    def test_untyped_object(self):
        data = {'format': Bundle.FORMAT, 'version': Bundle.VERSION,
                'objects': {'X': {'type': 'table'}}}
        with self.assertRaises(bundle_errors.MalformedBundle):
            Bundle.from_dict(data)

    def test_undecodable(self):
        "decoding errors should be reported as malformed bundles"
        data = {'format': Bundle.FORMAT, 'version': Bundle.VERSION,
                'objects': {'X': {'type': 'complex'}}}
        bundle = Bundle.from_dict(data, 'broken.json')
        with self.assertRaises(bundle_errors.MalformedBundle):
            bundle.complex('X')
