#-*- coding: utf-8 -*-

"""This module provides the classes Poset, IdealSpec and FilteredComplex.

A FilteredComplex is a direct sum of complexes X_i indexed by a finite poset
I, twisted by a perturbation α which is strictly lower triangular: its
component α_ji from X_i to X_j vanishes unless i < j.

An IdealSpec names a nilpotent two-sided ideal of maps in which the
perturbations live, so that id + u is inverted by a finite Neumann series:

* adic: the ideal (z, ε), maps without (0, 0) component;
* triangular: maps whose blocks are all strictly lower triangular;
* sum: maps whose (0, 0) component is strictly lower triangular.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from curved_hpl import perturb_errors
from curved_hpl.complex import CurvedComplex, direct_sum, twist
from curved_hpl.graded import GradedMap, assemble, block
from curved_hpl.scalar import Scalar


class Poset:
    """Finite poset given by its elements and covering pairs (lower, upper).

    Raises:
        PosetError: on unknown elements, duplicates or cycles.
    """
    def __init__(self, elements: Sequence[str], covers: Iterable[Tuple[str, str]]=()):
        self.__elements = tuple(str(elt) for elt in elements)
        if len(set(self.__elements)) != len(self.__elements):
            raise perturb_errors.PosetError(f'duplicate elements in {self.__elements}')
        self.__covers = tuple(sorted({(str(low), str(up)) for low, up in covers}))
        for low, up in self.__covers:
            if low not in self.__elements or up not in self.__elements:
                raise perturb_errors.PosetError(f'unknown element in cover ({low}, {up})')
        above: Dict[str, set] = {elt: set() for elt in self.__elements}
        for low, up in self.__covers:
            above[low].add(up)
        changed = True
        while changed:
            changed = False
            for elt in self.__elements:
                reach = set(above[elt])
                for up in above[elt]:
                    reach |= above[up]
                if reach != above[elt]:
                    above[elt] = reach
                    changed = True
        for elt in self.__elements:
            if elt in above[elt]:
                raise perturb_errors.PosetError(f'cycle through {elt}')
        self.__above = {elt: frozenset(ups) for elt, ups in above.items()}

    @property
    def elements(self) -> Tuple[str, ...]:
        "The elements, in order"
        return self.__elements

    @property
    def covers(self) -> Tuple[Tuple[str, str], ...]:
        "The covering pairs (lower, upper)"
        return self.__covers

    def less(self, lower: str, upper: str) -> bool:
        "True if lower < upper strictly"
        return upper in self.__above[lower]

    @classmethod
    def chain(cls, elements: Sequence[str]) -> 'Poset':
        "The total order e0 < e1 < ..."
        return cls(elements, zip(elements, elements[1:]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.__elements == other.elements and self.__covers == other.covers

    def __hash__(self):
        return hash((self.__elements, self.__covers))

    def __repr__(self):
        return f'Poset({list(self.__elements)}, {list(self.__covers)})'

    def to_dict(self) -> dict:
        "Serialization as {elements, covers}"
        return {'elements': list(self.__elements), 'covers': [list(pair) for pair in self.__covers]}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'Poset':
        "Deserialization"
        return cls(data['elements'], [tuple(pair) for pair in data.get('covers', [])])


def triangularity_defect(fmap: GradedMap, poset: Poset) -> Optional[Tuple[str, str]]:
    """The first non zero block (row, col) with col not < row, None if fmap is
    strictly lower triangular.

    Raises:
        PosetError: if the modules are not decomposed along the poset.
    """
    for module in (fmap.source, fmap.target):
        if set(module.labels) != set(poset.elements):
            raise perturb_errors.PosetError(
                f'decomposition {list(module.labels)} does not match {list(poset.elements)}')
    for row in poset.elements:
        for col in poset.elements:
            if not poset.less(col, row) and not block(fmap, row, col).is_zero():
                return row, col
    return None

def constant_part(fmap: GradedMap) -> GradedMap:
    "The (0, 0) component"
    return GradedMap(fmap.source, fmap.target, fmap.degree,
                     {(0, 0): fmap.components[(0, 0)]} if (0, 0) in fmap.components else {})


@dataclass(frozen=True)
class IdealSpec:
    "A nilpotent ideal of maps: 'adic', 'triangular' or 'sum'"
    kind: str = 'adic'
    poset: Optional[Poset] = None

    KINDS = ('adic', 'triangular', 'sum')

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f'Unknown ideal kind {self.kind!r}')
        if self.kind == 'triangular' and self.poset is None:
            raise perturb_errors.PosetError('the triangular ideal needs a poset')

    @classmethod
    def adic(cls) -> 'IdealSpec':
        "The ideal (z, ε)"
        return cls('adic')

    @classmethod
    def triangular(cls, poset: Poset) -> 'IdealSpec':
        "Strictly lower triangular maps"
        return cls('triangular', poset)

    @classmethod
    def sum(cls, poset: Poset=None) -> 'IdealSpec':
        "(z, ε) + strictly lower triangular maps"
        return cls('sum', poset)

    def with_adic(self) -> 'IdealSpec':
        "The sum of this ideal and (z, ε)"
        return self if self.kind == 'adic' else IdealSpec.sum(self.poset)

    def defect(self, fmap: GradedMap) -> Optional[str]:
        "Why fmap is not in the ideal, None if it is"
        if self.kind == 'triangular':
            offending = triangularity_defect(fmap, self.poset)
        else:
            const = constant_part(fmap)
            if const.is_zero():
                return None
            if self.poset is None:
                return 'non zero constant component'
            offending = triangularity_defect(const, self.poset)
        if offending:
            return f"block from '{offending[1]}' to '{offending[0]}'"
        return None

    def contains(self, fmap: GradedMap) -> bool:
        "Membership test"
        return self.defect(fmap) is None


class FilteredComplex:
    """Poset indexed direct sum of complexes with a strictly lower triangular
    perturbation.

    Args:
        poset (Poset): the index poset.
        summands (Mapping[str, CurvedComplex]): X_i for each element i.
        alpha (GradedMap): degree 1 endomorphism of the sum, 0 by default.
        curvature (Scalar): curvature of the twisted complex, the common
            curvature of the summands by default.

    Raises:
        PosetError: if the summands do not match the poset.
        TriangularityError: if a block of alpha is not strictly lower triangular.
        MaurerCartanError: if alpha does not twist the sum.
    """
    def __init__(self, poset: Poset, summands: Mapping[str, CurvedComplex],
                 alpha: GradedMap=None, curvature: Scalar=None):
        if set(summands) != set(poset.elements):
            raise perturb_errors.PosetError(
                f'summands {sorted(summands)} do not match {list(poset.elements)}')
        self.__poset = poset
        self.__summands = {label: summands[label] for label in poset.elements}
        self.__total = direct_sum(list(self.__summands.values()), list(poset.elements)).complex
        module = self.__total.module
        alpha = GradedMap.zero(module, module, 1) if alpha is None else alpha.with_modules(module, module)
        offending = triangularity_defect(alpha, poset)
        if offending:
            raise perturb_errors.TriangularityError(*offending)
        self.__alpha = alpha
        self.__curvature = self.__total.curvature if curvature is None else curvature
        self.__twisted = twist(self.__total, alpha, self.__curvature)

    @classmethod
    def from_blocks(cls, poset: Poset, summands: Mapping[str, CurvedComplex],
                    parts: Mapping[Tuple[str, str], GradedMap],
                    curvature: Scalar=None) -> 'FilteredComplex':
        "Builds alpha from its blocks α_ji: X_i → X_j, keyed by (j, i)"
        for row, col in parts:
            if not poset.less(col, row):
                raise perturb_errors.TriangularityError(row, col)
        total = direct_sum([summands[label] for label in poset.elements], list(poset.elements)).complex
        alpha = assemble(total.module, total.module, 1, parts)
        return cls(poset, summands, alpha, curvature)

    @property
    def poset(self) -> Poset:
        "The index poset"
        return self.__poset

    @property
    def summands(self) -> Dict[str, CurvedComplex]:
        "label -> X_i"
        return dict(self.__summands)

    @property
    def alpha(self) -> GradedMap:
        "The perturbation"
        return self.__alpha

    @property
    def curvature(self) -> Scalar:
        "The curvature of the twisted complex"
        return self.__curvature

    @property
    def total(self) -> CurvedComplex:
        "The untwisted direct sum"
        return self.__total

    @property
    def twisted(self) -> CurvedComplex:
        "tw_α of the direct sum"
        return self.__twisted

    def block(self, row: str, col: str) -> GradedMap:
        "α_ji from X_col to X_row"
        return block(self.__alpha, row, col)

    @property
    def ideal(self) -> IdealSpec:
        "The triangular ideal of the poset"
        return IdealSpec.triangular(self.__poset)
