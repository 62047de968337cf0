#-*- coding: utf-8 -*-

"""This module provides the perturbation engine.

Given homotopy equivalence data between X and Y and a perturbation α of the
differential of X (a Maurer-Cartan element, possibly for a new curvature),
the transfer produces a perturbation β of Y and new equivalence data
between tw_α(X) and tw_β(Y). All inverses (id + αh)^-1 are finite Neumann
series, the perturbation living in a nilpotent ideal (see
`curved_hpl.filtered.IdealSpec`).

* `perturb_contraction`: a contraction of X stays a contraction of tw_α(X);
* `perturb_zhe`: transfer along a z-homotopy equivalence;
* `curved_perturb`: transfer along a strong homotopy equivalence, for the
  curvature w + z;
* `markl_perturb`: the uncurved case z = 0;
* `simple_perturb`: transfer along a plain homotopy equivalence;
* `poset_reduce`: summand-wise reduction of a filtered complex.
"""

import logging
from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Optional, Tuple

from curved_hpl import complex_errors, graded_errors, homotopy_errors, perturb_errors
from curved_hpl.complex import CurvedComplex, direct_sum, hom_diff, mc_residual, twist
from curved_hpl.filtered import FilteredComplex, IdealSpec
from curved_hpl.graded import GradedMap, assemble
from curved_hpl.homotopy import (
    HEData, SHEData, ZHEData, promote_he_to_she, substitute_complex, validate_he,
    validate_she, validate_zhe)
from curved_hpl.report import Report
from curved_hpl.scalar import Context, Scalar, check_substitution

LOGGER = logging.getLogger(__name__)

DEFAULT_CAP = 64

TRAILING_FACTOR_NOTE = (
    'β + εK computed as (z+ε)k + f∘α∘(id + hα)^-1∘g: the trailing factor is g(ε)')


@dataclass(frozen=True)
class Transfer:
    """Output of a perturbation.

    `source` and `target` are the untwisted complexes X and Y; the transferred
    data (F, G, H, K) go between tw_α(X) and tw_β(Y), both of curvature w + z.
    K is None for the z-homotopy transfer, which does not produce it.
    """
    mode: str
    source: CurvedComplex
    target: CurvedComplex
    alpha: GradedMap
    beta: GradedMap
    zscalar: Scalar
    F: GradedMap
    G: GradedMap
    H: GradedMap
    K: Optional[GradedMap] = None
    notes: Tuple[str, ...] = field(default=())

    @property
    def curvature(self) -> Scalar:
        "The curvature w + z of the twisted complexes"
        return self.source.curvature + self.zscalar

    @property
    def twisted_source(self) -> CurvedComplex:
        "tw_α(X)"
        return twist(self.source, self.alpha, self.curvature)

    @property
    def twisted_target(self) -> CurvedComplex:
        "tw_β(Y)"
        return twist(self.target, self.beta, self.curvature)

    def equivalence(self) -> HEData:
        """The transferred equivalence tw_α(X) ≃ tw_β(Y), an SHEData for the
        curved and Markl transfers."""
        if self.K is None:
            raise ValueError(f'The {self.mode} transfer has no K')
        cls = SHEData if self.mode in ('curved', 'markl') else HEData
        return cls(self.twisted_source, self.twisted_target, self.F, self.G, self.H, self.K)


def neumann_inverse(umap: GradedMap, ideal: IdealSpec=None, cap: int=DEFAULT_CAP) -> GradedMap:
    """(id + u)^-1 = Σ (-u)^n, the sum stopping at the first vanishing power.

    Without ideal, u is only required to be nilpotent.

    Raises:
        NotInIdeal: if u is not in the ideal.
        NeumannCapExceeded: if (-u)^cap is still non zero.
    """
    if umap.degree != 0:
        raise graded_errors.DegreeMismatch(0, umap.degree)
    if not umap.is_endomorphism():
        raise graded_errors.ShapeMismatch('the Neumann series needs an endomorphism')
    defect = None if ideal is None else ideal.defect(umap)
    if defect is not None:
        raise perturb_errors.NotInIdeal(ideal.kind, defect)
    minus_u = -umap
    result = term = GradedMap.identity(umap.source)
    for count in range(1, cap + 1):
        term = term @ minus_u
        if term.is_zero():
            LOGGER.debug('Neumann series of length %s', count)
            return result
        result = result + term
    raise perturb_errors.NeumannCapExceeded(cap)

def perturb_contraction(contraction: GradedMap, alpha: GradedMap, cplx: CurvedComplex,
                        ideal: IdealSpec=None, cap: int=DEFAULT_CAP) -> GradedMap:
    """The contraction h (id + αh)^-1 of tw_α(X), h being a contraction of X.

    Raises:
        NotAContraction: if d(h) != id.
        MaurerCartanError: if α does not twist X.
        NotInIdeal, NeumannCapExceeded: if id + αh cannot be inverted.
    """
    residual = hom_diff(contraction, cplx) - cplx.identity
    if not residual.is_zero():
        raise homotopy_errors.NotAContraction(residual)
    twist(cplx, alpha)
    return contraction @ neumann_inverse(alpha @ contraction, ideal, cap)

def perturb_zhe(data: ZHEData, alpha: GradedMap, ideal: IdealSpec=None,
                cap: int=DEFAULT_CAP) -> Transfer:
    """Transfer of α along a z-homotopy equivalence.

    F = f(id+αh)^-1, G = (id+hα)^-1 g, H = h(id+αh)^-1, β = zk + fα(id+hα)^-1 g.
    α must satisfy d(α) + α² = z (curvature w + z for tw_α(X)).

    Raises:
        InvalidEquivalence: if the data are not a z-homotopy equivalence.
        MaurerCartanError: if α or β do not twist for the curvature w + z.
        NotInIdeal, NeumannCapExceeded: on inversion failure.
    """
    report = validate_zhe(data)
    if not report.ok:
        raise homotopy_errors.InvalidEquivalence(report)
    zscalar = data.zscalar
    curvature = data.source.curvature + zscalar
    alpha = alpha.with_modules(data.source.module, data.source.module)
    twist(data.source, alpha, curvature)
    series_ideal = None if ideal is None else ideal.with_adic()
    inv_left = neumann_inverse(alpha @ data.h, series_ideal, cap)
    inv_right = neumann_inverse(data.h @ alpha, series_ideal, cap)
    beta = zscalar * data.k + data.f @ alpha @ inv_right @ data.g
    twist(data.target, beta, curvature)
    return Transfer('zhe', data.source, data.target, alpha, beta, zscalar,
                    data.f @ inv_left, inv_right @ data.g, data.h @ inv_left)

def _check_base(cplx: CurvedComplex):
    if cplx.delta.has_eps or cplx.curvature.has_eps:
        raise ValueError('the complexes of a strong homotopy equivalence must not depend on ε')

def curved_perturb(data: SHEData, alpha: GradedMap, zscalar: Scalar=None, ideal: IdealSpec=None,
                   cap: int=DEFAULT_CAP, mode: str='curved') -> Transfer:
    """Curved transfer of α along a strong homotopy equivalence.

    The series are first substituted by ε ↦ z + ε, then
    F = f(id+αh)^-1, G = (id+hα)^-1 g, H = h(id+αh)^-1 and
    β + εK = (z+ε)k + fα(id+hα)^-1 g, β being the ε⁰ part. The result lives in
    the context of α; the computation runs with one more ε order so that K
    is exact.

    Args:
        zscalar: the curvature increment z, of degree 2 and without ε; z by default.
        ideal: ideal containing α. Without it, only the nilpotence of αh is required.

    Raises:
        InvalidEquivalence: if the data are not a strong homotopy equivalence.
        TruncationError: if the ε order of the data is too small for the substitution.
        NotInIdeal: if α is not in the ideal.
        MaurerCartanError: if α or β do not twist for the curvature w + z.
    """
    report = validate_she(data)
    if not report.ok:
        raise homotopy_errors.InvalidEquivalence(report)
    context = alpha.context
    zscalar = Scalar.z(context) if zscalar is None else zscalar
    if zscalar.context != context or zscalar.has_eps or zscalar.constant_term():
        raise ValueError(f'{zscalar} is not a polynomial in z without constant term')
    if zscalar.degree not in (None, 2):
        raise graded_errors.DegreeMismatch(2, zscalar.degree)
    if alpha.has_eps:
        raise ValueError('the perturbation must not depend on ε')
    _check_base(data.source)
    _check_base(data.target)
    defect = None if ideal is None else ideal.defect(alpha)
    if defect is not None:
        raise perturb_errors.NotInIdeal(ideal.kind, defect)

    work = Context(context.z_order, context.eps_order + 1)
    zwork = zscalar.with_context(work)
    shift = zwork + Scalar.eps(work)
    check_substitution(data.context, shift, work)
    source = substitute_complex(data.source, shift)
    target = substitute_complex(data.target, shift)
    fmap, gmap, hmap, kmap = (fmap.substitute(shift) for fmap in (data.f, data.g, data.h, data.k))
    walpha = alpha.with_context(work)
    curvature = source.curvature + zwork
    twist(source, walpha, curvature)

    series_ideal = None if ideal is None else ideal.with_adic()
    inv_left = neumann_inverse(walpha @ hmap, series_ideal, cap)
    inv_right = neumann_inverse(hmap @ walpha, series_ideal, cap)
    rhs = shift * kmap + fmap @ walpha @ inv_right @ gmap
    beta = rhs.at_eps_zero()
    kbig = (rhs - beta).shift_eps(1)
    LOGGER.debug('%s transfer computed in %s', mode, work)
    return Transfer(
        mode, source.with_context(context), target.with_context(context), alpha,
        beta.with_context(context), zscalar,
        (fmap @ inv_left).with_context(context),
        (inv_right @ gmap).with_context(context),
        (hmap @ inv_left).with_context(context),
        kbig.with_context(context),
        (TRAILING_FACTOR_NOTE,))

def markl_perturb(data: SHEData, alpha: GradedMap, ideal: IdealSpec=None,
                  cap: int=DEFAULT_CAP) -> Transfer:
    """Uncurved transfer (z = 0) of α along a strong homotopy equivalence.

    The ε order of the data must exceed the ε order of α by at least one.
    """
    return curved_perturb(data, alpha, Scalar.zero(alpha.context), ideal, cap, mode='markl')

def simple_perturb(data: HEData, alpha: GradedMap, ideal: IdealSpec=None,
                   cap: int=DEFAULT_CAP) -> Transfer:
    """Transfer of an uncurved perturbation along a homotopy equivalence.

    F0 = f(id+αh)^-1, G0 = (id+hα)^-1 g, H0 = h(id+αh)^-1, β = fα(id+hα)^-1 g,
    and K0 is the ε⁰ part of the Markl transfer. The equivalence is promoted
    through the cone of g, which keeps h unchanged.

    Raises:
        InvalidEquivalence: if the data are not a homotopy equivalence.
        MaurerCartanError: if α does not twist X into a complex of the same curvature.
    """
    report = validate_he(data)
    if not report.ok:
        raise homotopy_errors.InvalidEquivalence(report)
    if any(fmap.has_eps for fmap in (data.f, data.g, data.h, data.k)):
        raise ValueError('homotopy equivalence data must not depend on ε')
    context = data.context
    alpha = alpha.with_modules(data.source.module, data.source.module)
    twist(data.source, alpha)
    she = promote_he_to_she(data.reversed(), eps_order=2).reversed()
    low = Context(context.z_order, 1)
    transfer = markl_perturb(she, alpha.with_context(low), ideal, cap)
    return Transfer(
        'simple', data.source, data.target, alpha,
        transfer.beta.with_context(context), Scalar.zero(context),
        *(fmap.with_context(context) for fmap in (transfer.F, transfer.G, transfer.H, transfer.K)))


class PosetReduction(NamedTuple):
    "A reduced filtered complex, the block diagonal equivalence and the transfer along it"
    reduced: FilteredComplex
    total: HEData
    transfer: Transfer

def total_equivalence(fcomplex: FilteredComplex, equivalences: Mapping[str, HEData]) -> HEData:
    """The block diagonal equivalence ⊕X_i ≃ ⊕Y_i of the summand equivalences.

    Raises:
        PosetError: if an equivalence is missing.
        InvalidEquivalence: if a summand equivalence is invalid.
    """
    labels = list(fcomplex.poset.elements)
    for label in labels:
        if label not in equivalences:
            raise perturb_errors.PosetError(f'no equivalence for the summand {label}')
        report = validate_he(equivalences[label])
        if not report.ok:
            report.title = f'{report.title} of summand {label}'
            raise homotopy_errors.InvalidEquivalence(report)
        if equivalences[label].source != fcomplex.summands[label]:
            raise graded_errors.ShapeMismatch(f'the equivalence of {label} starts elsewhere')
    source = fcomplex.total
    target = direct_sum([equivalences[label].target for label in labels], labels).complex
    def diagonal(name, src, tgt, degree):
        return assemble(src.module, tgt.module, degree, {
            (label, label): getattr(equivalences[label], name) for label in labels})
    return HEData(source, target,
                  diagonal('f', source, target, 0), diagonal('g', target, source, 0),
                  diagonal('h', source, source, -1), diagonal('k', target, target, -1))

def poset_reduce(fcomplex: FilteredComplex, equivalences: Mapping[str, HEData],
                 cap: int=DEFAULT_CAP) -> PosetReduction:
    """Reduces each summand X_i of a filtered complex along X_i ≃ Y_i.

    The perturbation is transferred along `total_equivalence` and the
    transferred β is again strictly lower triangular.

    Raises:
        PosetError: if an equivalence is missing.
        InvalidEquivalence: if a summand equivalence is invalid.
        TriangularityError: if β is not strictly lower triangular.
    """
    total = total_equivalence(fcomplex, equivalences)
    transfer = simple_perturb(total, fcomplex.alpha, fcomplex.ideal, cap)
    reduced = FilteredComplex(
        fcomplex.poset, {label: equivalences[label].target for label in fcomplex.poset.elements},
        transfer.beta)
    return PosetReduction(reduced, total, transfer)

def verify_transfer(transfer: Transfer) -> Report:
    """Re-evaluates every output equation of a transfer from its stored maps.

    The Maurer-Cartan equations of α and β are always checked, then:

    * zhe: F and G closed, d(H) = id - GF;
    * simple: the homotopy equivalence equations of (F, G, H, K);
    * curved and markl: d(F) = ε(FH - KF), d(G) = ε(GK - HG),
      d(H) = id - GF - εH², d(K) = id - FG - εK², β free of ε, and
      d(β + εK) + (β + εK)² = z·id + ε(id - FG) on Y.
    """
    report = Report(f'{transfer.mode} transfer')
    xcplx, ycplx = transfer.source, transfer.target
    curvature = transfer.curvature
    report.add('MC(α)', mc_residual(xcplx, transfer.alpha, curvature))
    report.add('MC(β)', mc_residual(ycplx, transfer.beta, curvature))
    report.notes.extend(transfer.notes)
    if not report.ok:
        return report
    xtw, ytw = transfer.twisted_source, transfer.twisted_target
    fmap, gmap, hmap = transfer.F, transfer.G, transfer.H
    try:
        if transfer.mode == 'zhe':
            report.add('d(F) = 0', hom_diff(fmap, xtw, ytw))
            report.add('d(G) = 0', hom_diff(gmap, ytw, xtw))
            report.add('d(H) = id - GF', hom_diff(hmap, xtw) - (xtw.identity - gmap @ fmap))
        elif transfer.mode == 'simple':
            report.extend(validate_he(transfer.equivalence()))
        else:
            eps = Scalar.eps(xcplx.context)
            kmap = transfer.K
            report.add('d(F) + βF - Fα = ε(FH - KF)',
                       hom_diff(fmap, xtw, ytw) - eps * (fmap @ hmap - kmap @ fmap))
            report.add('d(G) + αG - Gβ = ε(GK - HG)',
                       hom_diff(gmap, ytw, xtw) - eps * (gmap @ kmap - hmap @ gmap))
            report.add('d(H) + αH + Hα = id - GF - εH²',
                       hom_diff(hmap, xtw) - (xtw.identity - gmap @ fmap - eps * (hmap @ hmap)))
            report.add('d(K) + βK + Kβ = id - FG - εK²',
                       hom_diff(kmap, ytw) - (ytw.identity - fmap @ gmap - eps * (kmap @ kmap)))
            if transfer.beta.has_eps:
                report.fail('β free of ε', 'β has ε components')
            else:
                report.add('β free of ε', None)
            combined = transfer.beta + eps * kmap
            report.add('d(β+εK) + (β+εK)² = z·id + ε(id - FG)',
                       hom_diff(combined, ycplx) + combined @ combined
                       - GradedMap.scalar(ycplx.module, transfer.zscalar)
                       - eps * (ycplx.identity - fmap @ gmap))
    except (graded_errors.ShapeMismatch, graded_errors.DegreeMismatch,
            complex_errors.CurvatureMismatch) as exc:
        report.fail('shapes', str(exc))
    return report
