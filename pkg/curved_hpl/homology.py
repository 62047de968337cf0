#-*- coding: utf-8 -*-

"""Homology of plain complexes: uncurved, with a differential free of z and ε.

A complex depending on z or ε is first specialized at z = ε = 0. Its
curvature has degree 2, so it vanishes there and the (0, 0) component of δ
is a differential.
"""

from typing import Dict

from sympy.polys.matrices import DomainMatrix

from curved_hpl import blocks, complex_errors
from curved_hpl.complex import CurvedComplex
from curved_hpl.graded import GradedMap


def is_plain(cplx: CurvedComplex) -> bool:
    "True if w = 0 and δ only has a (0, 0) component"
    return cplx.curvature.is_zero() and set(cplx.delta.components) <= {(0, 0)}

def require_plain(cplx: CurvedComplex):
    "Raises NotPlain unless the complex is plain"
    if not is_plain(cplx):
        raise complex_errors.NotPlain(cplx)

def specialize(cplx: CurvedComplex) -> CurvedComplex:
    "The plain complex obtained by z = ε = 0"
    if is_plain(cplx):
        return cplx
    module = cplx.module
    return CurvedComplex(
        module, GradedMap(module, module, 1, {(0, 0): cplx.delta.components.get((0, 0), {})}))

def differential_blocks(cplx: CurvedComplex) -> Dict[int, DomainMatrix]:
    "degree p -> matrix of δ: X^p → X^(p+1), zero blocks omitted"
    require_plain(cplx)
    return dict(cplx.delta.components.get((0, 0), {}))

def homology_ranks(cplx: CurvedComplex) -> Dict[int, int]:
    """dim H^p = rank X^p - rank δ^p - rank δ^(p-1), zero ranks omitted, of
    the specialization of the complex at z = ε = 0.
    """
    diffs = differential_blocks(specialize(cplx))
    ranks = {p: blocks.rank(mat) for p, mat in diffs.items()}
    result = {}
    for degree, rank in cplx.module.ranks.items():
        dim = rank - ranks.get(degree, 0) - ranks.get(degree - 1, 0)
        if dim:
            result[degree] = dim
    return result

def euler_characteristic(cplx: CurvedComplex) -> int:
    "Σ (-1)^p rank X^p"
    return sum(rank if degree % 2 == 0 else -rank for degree, rank in cplx.module.ranks.items())
