#-*- coding: utf-8 -*-

"""This module provides the class CurvedComplex and the dg operations.

A CurvedComplex is a graded module with a degree 1 differential δ such that
δ² = w·id for a central scalar w (the curvature). Ordinary complexes are
the case w = 0.

The hom differential of a map f: X → Y of degree |f| is the super-commutator
d(f) = δ_Y∘f - (-1)^|f| f∘δ_X. It squares to zero when X and Y have the same
curvature, and it is only defined in that case.
"""

from typing import Dict, NamedTuple, Optional, Sequence, Tuple

from curved_hpl import complex_errors, graded_errors, scalar_errors
from curved_hpl.graded import (
    GradedMap, GradedModule, assemble, block, injection, projection, shift_iso,
    shift_iso_inverse)
from curved_hpl.scalar import Context, Scalar


class CurvedComplex:
    """Graded module with a differential squaring to a central scalar.

    Args:
        module (GradedModule): the underlying module.
        delta (GradedMap): degree 1 endomorphism of module.
        curvature (Scalar): w, 0 by default.

    Raises:
        MaurerCartanError: if delta ∘ delta != w·id.
    """
    def __init__(self, module: GradedModule, delta: GradedMap, curvature: Scalar=None):
        if delta.source != module or delta.target != module:
            raise graded_errors.ShapeMismatch('the differential is not an endomorphism of the module')
        if delta.degree != 1:
            raise graded_errors.DegreeMismatch(1, delta.degree)
        curvature = Scalar.zero(module.context) if curvature is None else curvature
        if curvature.context != module.context:
            raise scalar_errors.ContextMismatch(module.context, curvature.context)
        self.__module = module
        self.__delta = delta.with_modules(module, module)
        self.__curvature = curvature
        residual = square_residual(self.__delta, curvature)
        if not residual.is_zero():
            raise complex_errors.MaurerCartanError(residual)

    @property
    def module(self) -> GradedModule:
        "The underlying graded module"
        return self.__module

    @property
    def delta(self) -> GradedMap:
        "The differential"
        return self.__delta

    @property
    def curvature(self) -> Scalar:
        "The curvature w"
        return self.__curvature

    @property
    def context(self) -> Context:
        "The scalar context"
        return self.__module.context

    @property
    def identity(self) -> GradedMap:
        "id_X"
        return GradedMap.identity(self.__module)

    @classmethod
    def zero(cls, context: Context, curvature: Scalar=None) -> 'CurvedComplex':
        "The zero object"
        module = GradedModule({}, context)
        return cls(module, GradedMap.zero(module, module, 1), curvature)

    @classmethod
    def with_zero_differential(cls, module: GradedModule) -> 'CurvedComplex':
        "(M, 0)"
        return cls(module, GradedMap.zero(module, module, 1))

    def with_context(self, context: Context) -> 'CurvedComplex':
        """The same complex over another context.

        Raises:
            MaurerCartanError: if δ² = w·id does not survive, which happens when
                widening the orders of a differential depending on z or ε.
        """
        return CurvedComplex(self.__module.with_context(context),
                             self.__delta.with_context(context),
                             self.__curvature.with_context(context))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurvedComplex):
            return NotImplemented
        return (self.__module == other.module and self.__delta == other.delta
                and self.__curvature == other.curvature)

    __hash__ = None

    def __repr__(self):
        return f'CurvedComplex({self.__module}, curvature {self.__curvature})'

    def to_dict(self) -> dict:
        "Serialization as {module, delta, curvature}"
        return {'module': self.__module.to_dict(),
                'delta': self.__delta.to_dict(),
                'curvature': self.__curvature.to_records()}

    @classmethod
    def from_dict(cls, data) -> 'CurvedComplex':
        "Deserialization"
        module = GradedModule.from_dict(data['module'])
        return cls(module, GradedMap.from_dict(module, module, data['delta']),
                   Scalar.from_records(module.context, data.get('curvature', [])))


def square_residual(delta: GradedMap, curvature: Scalar) -> GradedMap:
    "δ∘δ - w·id"
    return delta @ delta - GradedMap.scalar(delta.source, curvature)

def hom_diff(fmap: GradedMap, source: CurvedComplex, target: CurvedComplex=None) -> GradedMap:
    """The hom differential δ_Y∘f - (-1)^|f| f∘δ_X.

    Args:
        fmap: a map X → Y.
        source: X.
        target: Y, X by default.

    Raises:
        CurvatureMismatch: if X and Y have different curvatures.
        ShapeMismatch: if fmap is not a map between the modules of X and Y.
    """
    target = source if target is None else target
    if fmap.source != source.module or fmap.target != target.module:
        raise graded_errors.ShapeMismatch(
            f'{fmap.source} -> {fmap.target} is not a map {source.module} -> {target.module}')
    if source.curvature != target.curvature:
        raise complex_errors.CurvatureMismatch(source.curvature, target.curvature)
    fmap = fmap.with_modules(source.module, target.module)
    sign = -1 if fmap.degree % 2 else 1
    return target.delta @ fmap - (fmap @ source.delta) * sign

def is_closed(fmap: GradedMap, source: CurvedComplex, target: CurvedComplex=None) -> bool:
    "True if d(f) = 0"
    return hom_diff(fmap, source, target).is_zero()

def is_null_homotopic_witness(fmap: GradedMap, homotopy: GradedMap, source: CurvedComplex,
                              target: CurvedComplex=None) -> bool:
    """True if d(homotopy) = fmap.

    Raises:
        DegreeMismatch: if the homotopy is not of degree |f| - 1.
    """
    if homotopy.degree != fmap.degree - 1:
        raise graded_errors.DegreeMismatch(fmap.degree - 1, homotopy.degree)
    return hom_diff(homotopy, source, target) == fmap.with_modules(homotopy.source, homotopy.target)

def suspend(cplx: CurvedComplex, shift: int) -> CurvedComplex:
    "X[n]: X[n]^k = X^(k+n), differential (-1)^n δ, same curvature"
    theta = shift_iso(cplx.module, shift)
    theta_inv = shift_iso_inverse(cplx.module, shift)
    delta = theta_inv @ cplx.delta @ theta
    if shift % 2:
        delta = -delta
    return CurvedComplex(theta.source, delta, cplx.curvature)


class Biproduct(NamedTuple):
    "A direct sum with its structure maps, indexed by label"
    complex: CurvedComplex
    injections: Dict[str, GradedMap]
    projections: Dict[str, GradedMap]

def direct_sum(parts: Sequence[CurvedComplex], labels: Sequence[str]=None) -> Biproduct:
    """Direct sum of complexes of the same curvature.

    The differential is block diagonal. The labels default to '0', '1', ...

    Raises:
        CurvatureMismatch: if the curvatures differ.
        ValueError: if there is no summand.
    """
    if not parts:
        raise ValueError('Empty direct sum')
    labels = [str(index) for index in range(len(parts))] if labels is None else list(labels)
    if len(labels) != len(parts):
        raise ValueError('One label per summand is expected')
    curvature = parts[0].curvature
    for part in parts[1:]:
        if part.curvature != curvature:
            raise complex_errors.CurvatureMismatch(curvature, part.curvature)
    module = GradedModule.direct_sum(list(zip(labels, [part.module for part in parts])))
    delta = assemble(module, module, 1, {
        (label, label): part.delta for label, part in zip(labels, parts)})
    total = CurvedComplex(module, delta, curvature)
    return Biproduct(
        total,
        {label: injection(module, label) for label in labels},
        {label: projection(module, label) for label in labels})

def mc_residual(cplx: CurvedComplex, alpha: GradedMap, curvature: Scalar=None) -> GradedMap:
    "(δ+α)² - w'·id, equal to d(α) + α² - (w' - w)·id"
    curvature = cplx.curvature if curvature is None else curvature
    return square_residual(cplx.delta + alpha.with_modules(cplx.module, cplx.module), curvature)

def twist(cplx: CurvedComplex, alpha: GradedMap, curvature: Scalar=None) -> CurvedComplex:
    """tw_α(X) = (X, δ+α) of curvature w' (X's curvature by default).

    Raises:
        DegreeMismatch: if α is not of degree 1.
        MaurerCartanError: if (δ+α)² != w'·id, with the residual.
    """
    if alpha.degree != 1:
        raise graded_errors.DegreeMismatch(1, alpha.degree)
    curvature = cplx.curvature if curvature is None else curvature
    return CurvedComplex(cplx.module, cplx.delta + alpha.with_modules(cplx.module, cplx.module),
                         curvature)


class Cone:
    """The mapping cone of a closed degree 0 map f: X → Y.

    The underlying module is X[1] ⊕ Y, with summands labelled 'source' and
    'target', and the differential is [[-δ_X, 0], [f, δ_Y]] written through
    θ: X[1] → X. Degree -1 endomorphisms of the cone correspond to quadruples
    (h, g, m, k), h: X → X, g: Y → X, m: X → Y, k: Y → Y, through the block
    matrix [[-h, g], [m, k]].
    """
    SOURCE = 'source'
    TARGET = 'target'

    def __init__(self, fmap: GradedMap, source: CurvedComplex, target: CurvedComplex):
        if fmap.degree != 0:
            raise graded_errors.DegreeMismatch(0, fmap.degree)
        residual = hom_diff(fmap, source, target)
        if not residual.is_zero():
            raise complex_errors.NotClosed(residual)
        self.__fmap = fmap
        self.__source = source
        self.__target = target
        self.__theta = shift_iso(source.module, 1)
        self.__theta_inv = shift_iso_inverse(source.module, 1)
        shifted = suspend(source, 1)
        module = GradedModule.direct_sum(
            [(self.SOURCE, shifted.module), (self.TARGET, target.module)])
        delta = assemble(module, module, 1, {
            (self.SOURCE, self.SOURCE): shifted.delta,
            (self.TARGET, self.TARGET): target.delta,
            (self.TARGET, self.SOURCE): fmap @ self.__theta})
        self.__complex = CurvedComplex(module, delta, source.curvature)

    @property
    def complex(self) -> CurvedComplex:
        "The cone as a curved complex"
        return self.__complex

    @property
    def fmap(self) -> GradedMap:
        "The closed map"
        return self.__fmap

    @property
    def source(self) -> CurvedComplex:
        "X"
        return self.__source

    @property
    def target(self) -> CurvedComplex:
        "Y"
        return self.__target

    def join(self, hmap: GradedMap, gmap: GradedMap, mmap: GradedMap, kmap: GradedMap) -> GradedMap:
        "The endomorphism [[-h, g], [m, k]] of the cone"
        module = self.__complex.module
        return assemble(module, module, hmap.degree, {
            (self.SOURCE, self.SOURCE): self.__theta_inv @ (-hmap) @ self.__theta,
            (self.SOURCE, self.TARGET): self.__theta_inv @ gmap,
            (self.TARGET, self.SOURCE): mmap @ self.__theta,
            (self.TARGET, self.TARGET): kmap})

    def split(self, endo: GradedMap) -> Tuple[GradedMap, GradedMap, GradedMap, GradedMap]:
        "The quadruple (h, g, m, k) of an endomorphism [[-h, g], [m, k]] of the cone"
        theta, theta_inv = self.__theta, self.__theta_inv
        hmap = -(theta @ block(endo, self.SOURCE, self.SOURCE) @ theta_inv)
        gmap = theta @ block(endo, self.SOURCE, self.TARGET)
        mmap = block(endo, self.TARGET, self.SOURCE) @ theta_inv
        kmap = block(endo, self.TARGET, self.TARGET)
        return (hmap.with_modules(self.__source.module, self.__source.module),
                gmap.with_modules(self.__target.module, self.__source.module),
                mmap.with_modules(self.__source.module, self.__target.module),
                kmap.with_modules(self.__target.module, self.__target.module))

def cone(fmap: GradedMap, source: CurvedComplex, target: CurvedComplex,
         alpha: Optional[GradedMap]=None, beta: Optional[GradedMap]=None) -> Cone:
    """Cone of f: tw_α(X) → tw_β(Y).

    Raises:
        NotClosed: if f is not closed between the twisted complexes.
        MaurerCartanError: if a twist is not Maurer-Cartan.
    """
    if alpha is not None:
        source = twist(source, alpha)
    if beta is not None:
        target = twist(target, beta)
    return Cone(fmap, source, target)
