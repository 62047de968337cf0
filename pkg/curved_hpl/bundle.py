#-*- coding: utf-8 -*-

"""This module provides the class Bundle, the instance document of the
command line.

A bundle is a JSON document

    {"format": "curved-hpl-bundle", "version": 1,
     "objects": {name: {"type": ..., ...}}, "reports": {name: report}}

whose objects are complexes, maps, homotopy equivalence data, filtered
complexes and transfers. Objects refer to their complexes by name.
Rationals are encoded as "num/den" strings, and the document is written with
sorted keys so that equal bundles are byte identical.
"""

import json
from typing import Callable, Dict, List, Mapping, Optional

from curved_hpl import bundle_errors, utils
from curved_hpl.complex import CurvedComplex
from curved_hpl.filtered import FilteredComplex, Poset
from curved_hpl.graded import GradedMap, blocks_of
from curved_hpl.homotopy import HEData, SHEData, ZHEData
from curved_hpl.perturb import Transfer
from curved_hpl.report import Report
from curved_hpl.scalar import Scalar

EQUIVALENCES = {'he': HEData, 'zhe': ZHEData, 'she': SHEData}
TRANSFER_MAPS = (('F', 'source', 'target'), ('G', 'target', 'source'),
                 ('H', 'source', 'source'), ('K', 'target', 'target'))

# complex references of each object type
REFERENCES = {
    'complex': (), 'map': ('source', 'target'), 'he': ('source', 'target'),
    'zhe': ('source', 'target'), 'she': ('source', 'target'), 'transfer': ('source', 'target'),
    'filtered': ()}


class Bundle:
    """A named store of serialized objects.

    Args:
        filename (str): name used in error messages.
    """
    FORMAT = 'curved-hpl-bundle'
    VERSION = 1

    def __init__(self, filename: str='<bundle>'):
        self.__filename = filename
        self.__objects: Dict[str, dict] = {}
        self.__reports: Dict[str, dict] = {}

    @property
    def filename(self) -> str:
        "The name of the document"
        return self.__filename

    def names(self, kind: str=None) -> List[str]:
        "The sorted names of the objects, of the given type if any"
        return sorted(name for name, record in self.__objects.items()
                      if kind is None or record['type'] == kind)

    def kind(self, name: str) -> str:
        "The type of an object"
        return self.__record(name)['type']

    def __contains__(self, name: str) -> bool:
        return name in self.__objects

    def __record(self, name: str, kind: Optional[str]=None) -> dict:
        if name not in self.__objects:
            raise bundle_errors.UnresolvedReference(name, kind)
        record = self.__objects[name]
        if kind is not None and record['type'] not in (kind if isinstance(kind, tuple) else (kind,)):
            raise bundle_errors.UnresolvedReference(name, kind)
        return record

    def __decode(self, name: str, decoder: Callable):
        try:
            return decoder(self.__record(name))
        except (KeyError, TypeError, ValueError) as exc:
            raise bundle_errors.MalformedBundle(
                self.__filename, f'cannot decode {name!r}: {exc!r}') from exc

    def add_complex(self, name: str, cplx: CurvedComplex):
        "Stores a complex"
        self.__objects[name] = {'type': 'complex', **cplx.to_dict()}

    def add_map(self, name: str, fmap: GradedMap, source: str, target: str):
        "Stores a map between two stored complexes"
        self.__objects[name] = {'type': 'map', 'source': source, 'target': target, **fmap.to_dict()}

    def add_equivalence(self, name: str, data: HEData, source: str, target: str):
        "Stores homotopy equivalence data between two stored complexes"
        kind = {ZHEData: 'zhe', SHEData: 'she'}.get(type(data), 'he')
        self.__objects[name] = {'type': kind, 'source': source, 'target': target, **data.to_dict()}

    def add_filtered(self, name: str, fcomplex: FilteredComplex):
        "Stores a filtered complex, its summands being stored as name.label"
        summands = {}
        for label, cplx in fcomplex.summands.items():
            summands[label] = f'{name}.{label}'
            self.add_complex(summands[label], cplx)
        self.__objects[name] = {
            'type': 'filtered',
            'poset': fcomplex.poset.to_dict(),
            'summands': summands,
            'curvature': fcomplex.curvature.to_records(),
            'blocks': [{'row': row, 'col': col, **part.to_dict()}
                       for (row, col), part in sorted(blocks_of(fcomplex.alpha).items())]}

    def add_transfer(self, name: str, transfer: Transfer, source: str, target: str):
        "Stores a transfer, source and target naming the untwisted complexes"
        record = {'type': 'transfer', 'mode': transfer.mode, 'source': source, 'target': target,
                  'alpha': transfer.alpha.to_dict(), 'beta': transfer.beta.to_dict(),
                  'zscalar': transfer.zscalar.to_records(), 'notes': list(transfer.notes)}
        for key, _, _ in TRANSFER_MAPS:
            fmap = getattr(transfer, key)
            if fmap is not None:
                record[key] = fmap.to_dict()
        self.__objects[name] = record

    def add_report(self, name: str, report: Report):
        "Stores a verification report"
        self.__reports[name] = report.to_dict()

    def report(self, name: str) -> dict:
        "A stored report"
        if name not in self.__reports:
            raise bundle_errors.UnresolvedReference(name, 'report')
        return self.__reports[name]

    @property
    def reports(self) -> Dict[str, dict]:
        "All the stored reports by name"
        return dict(self.__reports)

    def complex(self, name: str) -> CurvedComplex:
        "Decodes a complex"
        self.__record(name, 'complex')
        return self.__decode(name, CurvedComplex.from_dict)

    def map(self, name: str) -> GradedMap:
        "Decodes a map"
        record = self.__record(name, 'map')
        source, target = self.complex(record['source']), self.complex(record['target'])
        return self.__decode(
            name, lambda rec: GradedMap.from_dict(source.module, target.module, rec))

    def map_complexes(self, name: str):
        "The names of the source and target complexes of a map"
        record = self.__record(name, 'map')
        return record['source'], record['target']

    def equivalence(self, name: str) -> HEData:
        "Decodes homotopy equivalence data"
        record = self.__record(name, ('he', 'zhe', 'she'))
        source, target = self.complex(record['source']), self.complex(record['target'])
        cls = EQUIVALENCES[record['type']]
        return self.__decode(name, lambda rec: cls.from_dict(source, target, rec))

    def references(self, name: str) -> Dict[str, str]:
        "The complexes an object refers to"
        record = self.__record(name)
        if record['type'] == 'filtered':
            return dict(record['summands'])
        return {key: record[key] for key in REFERENCES[record['type']]}

    def filtered(self, name: str) -> FilteredComplex:
        "Decodes a filtered complex"
        record = self.__record(name, 'filtered')
        summands = {label: self.complex(ref) for label, ref in record['summands'].items()}
        def decode(rec):
            poset = Poset.from_dict(rec['poset'])
            parts = {}
            for blk in rec['blocks']:
                row, col = blk['row'], blk['col']
                parts[(row, col)] = GradedMap.from_dict(
                    summands[col].module, summands[row].module, blk)
            context = next(iter(summands.values())).context
            curvature = Scalar.from_records(context, rec.get('curvature', []))
            return FilteredComplex.from_blocks(poset, summands, parts, curvature)
        return self.__decode(name, decode)

    def transfer(self, name: str) -> Transfer:
        "Decodes a transfer"
        record = self.__record(name, 'transfer')
        complexes = {'source': self.complex(record['source']),
                     'target': self.complex(record['target'])}
        def decode(rec):
            xmod, ymod = complexes['source'].module, complexes['target'].module
            maps = {key: GradedMap.from_dict(complexes[src].module, complexes[tgt].module, rec[key])
                    for key, src, tgt in TRANSFER_MAPS if key in rec}
            return Transfer(
                rec['mode'], complexes['source'], complexes['target'],
                GradedMap.from_dict(xmod, xmod, rec['alpha']),
                GradedMap.from_dict(ymod, ymod, rec['beta']),
                Scalar.from_records(xmod.context, rec.get('zscalar', [])),
                maps['F'], maps['G'], maps['H'], maps.get('K'),
                tuple(rec.get('notes', [])))
        return self.__decode(name, decode)

    def check(self):
        """Checks that every reference resolves to a complex and that the
        complexes of an object share their context.

        Raises:
            UnresolvedReference, MalformedBundle
        """
        for name in self.names():
            contexts = set()
            for ref in self.references(name).values():
                record = self.__record(ref, 'complex')
                try:
                    contexts.add(json.dumps(record['module']['context'], sort_keys=True))
                except (KeyError, TypeError) as exc:
                    raise bundle_errors.MalformedBundle(
                        self.__filename, f'complex {ref!r} has no module context') from exc
            if len(contexts) > 1:
                raise bundle_errors.MalformedBundle(
                    self.__filename, f'the complexes of {name!r} have different contexts')

    def to_dict(self) -> dict:
        "The document"
        return {'format': self.FORMAT, 'version': self.VERSION,
                'objects': self.__objects, 'reports': self.__reports}

    def to_json(self) -> str:
        "The document as deterministic JSON text"
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + '\n'

    @classmethod
    def from_dict(cls, data: Mapping, filename: str='<bundle>') -> 'Bundle':
        "Reads a document, checking its references"
        if not isinstance(data, Mapping) or data.get('format') != cls.FORMAT:
            raise bundle_errors.MalformedBundle(filename, f'not a {cls.FORMAT} document')
        if data.get('version') != cls.VERSION:
            raise bundle_errors.MalformedBundle(filename, f"unsupported version {data.get('version')}")
        bundle = cls(filename)
        for name, record in data.get('objects', {}).items():
            if not isinstance(record, Mapping) or record.get('type') not in REFERENCES:
                raise bundle_errors.MalformedBundle(filename, f'object {name!r} has no valid type')
            bundle.__objects[name] = dict(record)
        bundle.__reports = dict(data.get('reports', {}))
        bundle.check()
        return bundle

    @classmethod
    def from_json(cls, text: str, filename: str='<bundle>') -> 'Bundle':
        "Parses a JSON document"
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise bundle_errors.MalformedBundle(filename, str(exc)) from exc
        return cls.from_dict(data, filename)

    @classmethod
    def load(cls, path: str) -> 'Bundle':
        "Reads a bundle file"
        return cls.from_json(utils.read(path), path)

    def dump(self, path: str):
        "Writes the bundle file"
        utils.write(path, self.to_json())
