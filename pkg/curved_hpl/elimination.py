#-*- coding: utf-8 -*-

"""Gaussian elimination of plain complexes.

Write δ^k: X^k → X^(k+1) as [[φ, b], [γ, e]] along a pivot φ (rows R of
X^(k+1), columns C of X^k, φ invertible). Removing R and C gives a complex Y
with δ_Y^k = e - γφ^-1 b, and a homotopy equivalence X ≃ Y:

* f = [0, id] in degree k and [-γφ^-1, id] in degree k+1,
* g = [-φ^-1 b; id] in degree k and [0; id] in degree k+1,
* h = [[φ^-1, 0], [0, 0]] from degree k+1 to degree k, k = 0,

f and g being the identity in the other degrees.
"""

import logging
from typing import Dict, List, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from curved_hpl import blocks, graded_errors
from curved_hpl.complex import CurvedComplex
from curved_hpl.graded import GradedMap, GradedModule
from curved_hpl.homology import differential_blocks
from curved_hpl.homotopy import HEData, compose_he

LOGGER = logging.getLogger(__name__)


def _select(total: int, indices: Sequence[int]) -> DomainMatrix:
    "The total × len(indices) matrix of the inclusion of the given coordinates"
    return DomainMatrix(
        [[QQ.one if row == index else QQ.zero for index in indices] for row in range(total)],
        (total, len(indices)), QQ)

def _check_indices(indices: List[int], size: int, what: str):
    if len(set(indices)) != len(indices):
        raise ValueError(f'Duplicate pivot {what}: {indices}')
    if any(index < 0 or index >= size for index in indices):
        raise ValueError(f'Pivot {what} {indices} out of range {size}')

def gaussian_elimination(cplx: CurvedComplex, degree: int, rows: Sequence[int],
                         cols: Sequence[int]) -> HEData:
    """Homotopy equivalence from X to the complex obtained by eliminating an
    invertible block of δ^degree.

    Args:
        rows: pivot coordinates in X^(degree+1).
        cols: pivot coordinates in X^degree.

    Raises:
        NotPlain: if X is curved or δ depends on z or ε.
        NotInvertible: if the pivot block is singular.
        ValueError: on invalid pivot coordinates.
    """
    rows, cols = list(rows), list(cols)
    if not rows or len(rows) != len(cols):
        raise ValueError('The pivot must be a non empty square block')
    module = cplx.module
    low, high = module.rank(degree), module.rank(degree + 1)
    _check_indices(cols, low, 'columns')
    _check_indices(rows, high, 'rows')
    diffs = differential_blocks(cplx)
    if degree not in diffs:
        raise graded_errors.NotInvertible(f'δ vanishes in degree {degree}')
    dmat = diffs[degree]
    phi = blocks.submatrix(dmat, rows, cols)
    if blocks.rank(phi) < len(rows):
        raise graded_errors.NotInvertible(f'singular pivot in degree {degree}')
    phi_inv = blocks.inverse(phi)
    rest_cols = [index for index in range(low) if index not in cols]
    rest_rows = [index for index in range(high) if index not in rows]
    sel_cols, sel_rows = _select(low, cols), _select(high, rows)
    keep_cols = _select(low, rest_cols) if rest_cols else None
    keep_rows = _select(high, rest_rows) if rest_rows else None

    ranks = dict(module.ranks)
    ranks[degree] = len(rest_cols)
    ranks[degree + 1] = len(rest_rows)
    ymod = GradedModule(ranks, module.context)

    ydelta: Dict[int, DomainMatrix] = {}
    for p, mat in diffs.items():
        if p == degree - 1:
            if keep_cols is not None:
                ydelta[p] = keep_cols.transpose().matmul(mat)
        elif p == degree:
            if keep_cols is not None and keep_rows is not None:
                bmat = sel_rows.transpose().matmul(dmat).matmul(keep_cols)
                gamma = keep_rows.transpose().matmul(dmat).matmul(sel_cols)
                emat = keep_rows.transpose().matmul(dmat).matmul(keep_cols)
                ydelta[p] = emat - gamma.matmul(phi_inv).matmul(bmat)
        elif p == degree + 1:
            if keep_rows is not None:
                ydelta[p] = mat.matmul(keep_rows)
        else:
            ydelta[p] = mat
    target = CurvedComplex(ymod, GradedMap(ymod, ymod, 1, {(0, 0): ydelta}))

    fplain, gplain = {}, {}
    for p, rank in module.ranks.items():
        if p == degree:
            if keep_cols is not None:
                bmat = sel_rows.transpose().matmul(dmat).matmul(keep_cols)
                fplain[p] = keep_cols.transpose()
                gplain[p] = keep_cols - sel_cols.matmul(phi_inv).matmul(bmat)
        elif p == degree + 1:
            if keep_rows is not None:
                gamma = keep_rows.transpose().matmul(dmat).matmul(sel_cols)
                fplain[p] = keep_rows.transpose() - gamma.matmul(phi_inv).matmul(sel_rows.transpose())
                gplain[p] = keep_rows
        else:
            fplain[p] = gplain[p] = blocks.eye(rank)
    fmap = GradedMap(module, ymod, 0, {(0, 0): fplain})
    gmap = GradedMap(ymod, module, 0, {(0, 0): gplain})
    hmap = GradedMap(module, module, -1, {
        (0, 0): {degree + 1: sel_cols.matmul(phi_inv).matmul(sel_rows.transpose())}})
    LOGGER.debug('eliminated a pivot of size %s in degree %s', len(rows), degree)
    return HEData(cplx, target, fmap, gmap, hmap, GradedMap.zero(ymod, ymod, -1))

def _first_pivot(cplx: CurvedComplex):
    for degree, mat in differential_blocks(cplx).items():
        for row, values in enumerate(blocks.rows_of(mat)):
            for col, value in enumerate(values):
                if value:
                    return degree, row, col
    return None

def minimal_reduction(cplx: CurvedComplex) -> HEData:
    """Homotopy equivalence from a plain complex to its homology, with zero
    differential, by successive eliminations of 1 × 1 pivots.

    Raises:
        NotPlain: if X is curved or δ depends on z or ε.
    """
    result = HEData.identity(cplx)
    pivot = _first_pivot(cplx)
    while pivot is not None:
        degree, row, col = pivot
        step = gaussian_elimination(result.target, degree, [row], [col])
        result = compose_he(result, step)
        pivot = _first_pivot(result.target)
    return result
