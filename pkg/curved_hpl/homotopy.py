#-*- coding: utf-8 -*-

"""This module provides the homotopy equivalence data and their validators.

Three strengths of homotopy equivalence X ≃ Y are handled, all given by
four maps f: X → Y, g: Y → X (degree 0) and h: X → X, k: Y → Y (degree -1):

* HEData: d(f) = d(g) = 0, d(h) = id - gf, d(k) = id - fg;
* ZHEData: the same equations deformed by a central scalar z of degree 2,
  d(f) = z(fh - kf), d(g) = z(gk - hg), d(h) = id - gf - zh², d(k) = id - fg - zk²;
* SHEData: the z-deformed equations with z replaced by the formal variable ε,
  the maps being series in ε truncated at the ε order of the context.

The constructive passages between them go through mapping cones: an HE
gives a contraction of cone(f) (`cone_contraction_from_he`), a contraction
lifts to a strong contraction (`catalan_lift`) and a strong contraction of
cone(f) gives an SHE (`she_from_cone_strong_contraction`).
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from curved_hpl import complex_errors, graded_errors, homotopy_errors, scalar_errors
from curved_hpl.complex import Cone, CurvedComplex, hom_diff
from curved_hpl.graded import GradedMap
from curved_hpl.report import Report
from curved_hpl.scalar import Context, Scalar, check_substitution

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class HEData:
    "Homotopy equivalence data X ≃ Y"
    source: CurvedComplex
    target: CurvedComplex
    f: GradedMap
    g: GradedMap
    h: GradedMap
    k: GradedMap

    @property
    def context(self) -> Context:
        "The scalar context"
        return self.source.context

    @classmethod
    def identity(cls, cplx: CurvedComplex) -> 'HEData':
        "X ≃ X with f = g = id and h = k = 0"
        ident = cplx.identity
        zero = GradedMap.zero(cplx.module, cplx.module, -1)
        return cls(cplx, cplx, ident, ident, zero, zero)

    def maps(self) -> dict:
        "The four maps by name"
        return {'f': self.f, 'g': self.g, 'h': self.h, 'k': self.k}

    def reversed(self) -> 'HEData':
        "Y ≃ X, (f, g, h, k) becoming (g, f, k, h)"
        return type(self)(self.target, self.source, self.g, self.f, self.k, self.h)

    def with_context(self, context: Context) -> 'HEData':
        "The same data over another context"
        return type(self)(self.source.with_context(context), self.target.with_context(context),
                          *(fmap.with_context(context) for fmap in (self.f, self.g, self.h, self.k)))

    def to_dict(self) -> dict:
        "Serialization of the maps (the complexes are serialized by the owner)"
        return {name: fmap.to_dict() for name, fmap in self.maps().items()}

    @classmethod
    def from_dict(cls, source: CurvedComplex, target: CurvedComplex, data) -> 'HEData':
        "Deserialization"
        xmod, ymod = source.module, target.module
        return cls(source, target,
                   GradedMap.from_dict(xmod, ymod, data['f']),
                   GradedMap.from_dict(ymod, xmod, data['g']),
                   GradedMap.from_dict(xmod, xmod, data['h']),
                   GradedMap.from_dict(ymod, ymod, data['k']))


@dataclass(frozen=True)
class SHEData(HEData):
    "Strong homotopy equivalence data, the maps being series in ε"

    def at_eps_zero(self) -> HEData:
        "The homotopy equivalence obtained by setting ε = 0"
        return HEData(self.source, self.target,
                      *(fmap.at_eps_zero() for fmap in (self.f, self.g, self.h, self.k)))


@dataclass(frozen=True)
class ZHEData(HEData):
    "z-homotopy equivalence data; zscalar is the central deformation parameter"
    zscalar: Scalar = None

    def reversed(self) -> 'ZHEData':
        return ZHEData(self.target, self.source, self.g, self.f, self.k, self.h, self.zscalar)

    def with_context(self, context: Context) -> 'ZHEData':
        base = HEData.with_context(
            HEData(self.source, self.target, self.f, self.g, self.h, self.k), context)
        return ZHEData(base.source, base.target, base.f, base.g, base.h, base.k,
                       self.zscalar.with_context(context))

    def to_dict(self) -> dict:
        data = HEData.to_dict(self)
        data['zscalar'] = self.zscalar.to_records()
        return data

    @classmethod
    def from_dict(cls, source, target, data) -> 'ZHEData':
        base = HEData.from_dict(source, target, data)
        return cls(base.source, base.target, base.f, base.g, base.h, base.k,
                   Scalar.from_records(source.context, data.get('zscalar', [])))


def _validate(title: str, data: HEData, deformation: Scalar) -> Report:
    report = Report(title)
    xcplx, ycplx = data.source, data.target
    for name, fmap, degree in (('f', data.f, 0), ('g', data.g, 0), ('h', data.h, -1), ('k', data.k, -1)):
        if fmap.degree != degree:
            report.fail(f'degree of {name}', f'expected {degree}, got {fmap.degree}')
    if report.failures():
        return report
    try:
        fmap, gmap, hmap, kmap = data.f, data.g, data.h, data.k
        report.add('d(f) = s(fh - kf)',
                   hom_diff(fmap, xcplx, ycplx) - deformation * (fmap @ hmap - kmap @ fmap))
        report.add('d(g) = s(gk - hg)',
                   hom_diff(gmap, ycplx, xcplx) - deformation * (gmap @ kmap - hmap @ gmap))
        report.add('d(h) = id - gf - sh²',
                   hom_diff(hmap, xcplx) - (xcplx.identity - gmap @ fmap - deformation * (hmap @ hmap)))
        report.add('d(k) = id - fg - sk²',
                   hom_diff(kmap, ycplx) - (ycplx.identity - fmap @ gmap - deformation * (kmap @ kmap)))
    except (graded_errors.ShapeMismatch, graded_errors.DegreeMismatch,
            complex_errors.CurvatureMismatch, scalar_errors.ContextMismatch) as exc:
        report.fail('shapes', str(exc))
    return report

def validate_he(data: HEData) -> Report:
    "Checks d(f) = d(g) = 0, d(h) = id - gf, d(k) = id - fg"
    return _validate('homotopy equivalence', data, Scalar.zero(data.context))

def validate_zhe(data: ZHEData) -> Report:
    "Checks the z-deformed equations, z being data.zscalar"
    return _validate('z-homotopy equivalence', data, data.zscalar)

def validate_she(data: HEData) -> Report:
    "Checks the ε-deformed equations modulo the ε order of the context"
    return _validate('strong homotopy equivalence', data, Scalar.eps(data.context))


class ConeContraction(NamedTuple):
    "A contraction H0 = [[-h', g], [m, k]] of cone(f) built from an HE"
    cone: Cone
    contraction: GradedMap
    h_corrected: GradedMap
    m: GradedMap

def cone_contraction_from_he(data: HEData) -> ConeContraction:
    """Contracting homotopy of cone(f) from homotopy equivalence data.

    With z = fh - kf, the homotopy h is corrected to h' = h - gz and the
    lower left block is m = kz, so that d(m) = fh' - kf.

    Raises:
        InvalidEquivalence: if the data are not a homotopy equivalence.
    """
    report = validate_he(data)
    if not report.ok:
        raise homotopy_errors.InvalidEquivalence(report)
    defect = data.f @ data.h - data.k @ data.f
    h_corrected = data.h - data.g @ defect
    mmap = data.k @ defect
    cone = Cone(data.f, data.source, data.target)
    return ConeContraction(cone, cone.join(h_corrected, data.g, mmap, data.k), h_corrected, mmap)

def he_from_cone_contraction(contraction: GradedMap, fmap: GradedMap, source: CurvedComplex,
                             target: CurvedComplex) -> HEData:
    """Homotopy equivalence data (f, g, h, k) read on the blocks [[-h, g], [m, k]]
    of a contraction of cone(f).

    Raises:
        NotAContraction: if d(H) != id on the cone.
    """
    cone = Cone(fmap, source, target)
    residual = hom_diff(contraction, cone.complex) - cone.complex.identity
    if not residual.is_zero():
        raise homotopy_errors.NotAContraction(residual)
    hmap, gmap, _, kmap = cone.split(contraction)
    return HEData(source, target, fmap, gmap, hmap, kmap)

def catalan(index: int) -> int:
    "The Catalan number C_n = binomial(2n, n) / (n + 1)"
    return comb(2 * index, index) // (index + 1)

def strong_residual(contraction: GradedMap, cplx: CurvedComplex) -> GradedMap:
    "d(h) + εh² - id"
    context = cplx.context
    return (hom_diff(contraction, cplx) + Scalar.eps(context) * (contraction @ contraction)
            - cplx.identity)

def catalan_lift(contraction: GradedMap, cplx: CurvedComplex) -> GradedMap:
    """The strong contraction h(ε) = Σ (-1)^n C_n ε^n h^(2n+1) of a contraction h.

    The sum stops at the ε order of the context or at the first vanishing power.

    Raises:
        NotAContraction: if d(h) != id.
    """
    residual = hom_diff(contraction, cplx) - cplx.identity
    if not residual.is_zero():
        raise homotopy_errors.NotAContraction(residual)
    context = cplx.context
    square = contraction @ contraction
    power = contraction
    result = contraction
    for index in range(1, context.eps_order):
        power = power @ square
        if power.is_zero():
            break
        coeff = catalan(index) if index % 2 == 0 else -catalan(index)
        result = result + Scalar.monomial(context, 0, index, coeff) * power
    return result

def she_from_cone_strong_contraction(contraction: GradedMap, fmap: GradedMap,
                                     source: CurvedComplex, target: CurvedComplex) -> SHEData:
    """SHE data from a strong contraction H(ε) = [[-h, g], [c, k]] of cone(f0).

    The first map of the SHE is f0 + εc.

    Raises:
        NotAContraction: if d(H) + εH² != id on the cone.
    """
    cone = Cone(fmap, source, target)
    residual = strong_residual(contraction, cone.complex)
    if not residual.is_zero():
        raise homotopy_errors.NotAContraction(residual)
    hmap, gmap, cmap, kmap = cone.split(contraction)
    return SHEData(source, target, fmap + Scalar.eps(source.context) * cmap, gmap, hmap, kmap)

def promote_he_to_she(data: HEData, eps_order: int=None) -> SHEData:
    """Lifts a homotopy equivalence to a strong homotopy equivalence.

    The ε = 0 part of the result is (f, g, h', k), h' being the corrected
    homotopy of `cone_contraction_from_he`.

    Args:
        eps_order: ε order of the result; the context of the data by default.
            The data must then be free of ε.

    Raises:
        InvalidEquivalence: if the data are not a homotopy equivalence.
    """
    if eps_order is not None and eps_order != data.context.eps_order:
        data = data.with_context(Context(data.context.z_order, eps_order))
    contraction = cone_contraction_from_he(data)
    lifted = catalan_lift(contraction.contraction, contraction.cone.complex)
    LOGGER.debug('promoted a homotopy equivalence to ε order %s', data.context.eps_order)
    return she_from_cone_strong_contraction(lifted, data.f, data.source, data.target)

def substitute_complex(cplx: CurvedComplex, eps_image: Scalar) -> CurvedComplex:
    "The complex obtained by z ↦ z, ε ↦ eps_image"
    context = eps_image.context
    return CurvedComplex(cplx.module.with_context(context),
                         cplx.delta.substitute(eps_image),
                         cplx.curvature.substitute(eps_image))

def specialize_she(data: HEData, context: Context=None) -> ZHEData:
    """The z-homotopy equivalence obtained by ε ↦ z.

    Args:
        context: target context, the context of the data by default.

    Raises:
        TruncationError: if the ε order of the data is smaller than the
            z order of the target.
    """
    context = data.context if context is None else context
    zscalar = Scalar.z(context)
    check_substitution(data.context, zscalar, context)
    return ZHEData(substitute_complex(data.source, zscalar),
                   substitute_complex(data.target, zscalar),
                   *(fmap.substitute(zscalar) for fmap in (data.f, data.g, data.h, data.k)),
                   zscalar=zscalar)

def compose_he(first: HEData, second: HEData) -> HEData:
    """X ≃ Z from X ≃ Y and Y ≃ Z.

    f = f'f, g = gg', h = h + gh'f, k = k' + f'kg'.
    """
    if first.target.module != second.source.module:
        raise graded_errors.ShapeMismatch('the equivalences are not composable')
    return HEData(
        first.source, second.target,
        second.f @ first.f,
        first.g @ second.g,
        first.h + first.g @ second.h @ first.f,
        second.k + second.f @ first.k @ second.g)
