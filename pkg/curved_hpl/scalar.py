#-*- coding: utf-8 -*-

"""This module provides the classes Context and Scalar.

A Scalar is an element of the truncated central algebra
Q[z,ε]/(z^Nz, ε^Nε) where z and ε have cohomological degree 2. The pair
(Nz, Nε) is the Context of the scalar. Every monomial z^i ε^j with i ≥ Nz or
j ≥ Nε is discarded, so the ideal (z, ε) is nilpotent and all the series of
the perturbation engine are finite sums.

Example:
    >>> from curved_hpl.scalar import Context, Scalar
    >>> ctx = Context(3, 3)
    >>> (Scalar.one(ctx) + Scalar.z(ctx)) * (Scalar.one(ctx) - Scalar.z(ctx) + Scalar.z(ctx) ** 2)
    1
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Tuple

from sympy import QQ

from curved_hpl import scalar_errors
from curved_hpl.blocks import num_den, qq

LOGGER = logging.getLogger(__name__)

Monomial = Tuple[int, int]

@dataclass(frozen=True)
class Context:
    "Truncation orders: z^z_order = 0 and ε^eps_order = 0."
    z_order: int = 4
    eps_order: int = 4

    def __post_init__(self):
        if self.z_order < 1 or self.eps_order < 1:
            raise scalar_errors.InvalidContext(self.z_order, self.eps_order)

    def keeps(self, i: int, j: int) -> bool:
        "True if z^i ε^j survives the truncation"
        return i < self.z_order and j < self.eps_order

    def monomials(self) -> Iterator[Monomial]:
        "All surviving monomials"
        for i in range(self.z_order):
            for j in range(self.eps_order):
                yield i, j

    def to_dict(self) -> dict:
        "Serialization"
        return {'z_order': self.z_order, 'eps_order': self.eps_order}

    @classmethod
    def from_dict(cls, data: Mapping) -> 'Context':
        "Deserialization"
        return cls(int(data['z_order']), int(data['eps_order']))


class Scalar:
    """Element of Q[z,ε]/(z^Nz, ε^Nε).

    Args:
        context (Context): the truncation context.
        coeffs (Mapping): (i, j) -> rational coefficient of z^i ε^j. Truncated
            monomials and zero coefficients are dropped.
    """
    def __init__(self, context: Context, coeffs: Mapping[Monomial, object]=None):
        self.__context = context
        clean = {}
        for (i, j), value in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f'Negative exponent in z^{i} ε^{j}')
            value = qq(value)
            if value and context.keeps(i, j):
                clean[(i, j)] = value
        self.__coeffs = MappingProxyType(dict(sorted(clean.items())))

    @property
    def context(self) -> Context:
        "The truncation context"
        return self.__context

    @property
    def coeffs(self) -> Mapping[Monomial, object]:
        "Read only (i, j) -> coefficient map, without zeros"
        return self.__coeffs

    @classmethod
    def zero(cls, context: Context) -> 'Scalar':
        "0"
        return cls(context)

    @classmethod
    def one(cls, context: Context) -> 'Scalar':
        "1"
        return cls(context, {(0, 0): 1})

    @classmethod
    def constant(cls, context: Context, value) -> 'Scalar':
        "A rational constant"
        return cls(context, {(0, 0): value})

    @classmethod
    def monomial(cls, context: Context, i: int, j: int, value=1) -> 'Scalar':
        "value·z^i ε^j"
        return cls(context, {(i, j): value})

    @classmethod
    def z(cls, context: Context) -> 'Scalar':
        "z"
        return cls.monomial(context, 1, 0)

    @classmethod
    def eps(cls, context: Context) -> 'Scalar':
        "ε"
        return cls.monomial(context, 0, 1)

    def is_zero(self) -> bool:
        "True if all coefficients vanish"
        return not self.__coeffs

    def constant_term(self):
        "The coefficient of z^0 ε^0"
        return self.__coeffs.get((0, 0), qq(0))

    @property
    def has_z(self) -> bool:
        "True if some monomial contains z"
        return any(i for i, _ in self.__coeffs)

    @property
    def has_eps(self) -> bool:
        "True if some monomial contains ε"
        return any(j for _, j in self.__coeffs)

    @property
    def degree(self):
        """Cohomological degree 2(i+j) of a homogeneous scalar, None for 0.

        Raises:
            ValueError: if the scalar is not homogeneous.
        """
        degrees = {2 * (i + j) for i, j in self.__coeffs}
        if len(degrees) > 1:
            raise ValueError(f'Scalar {self} is not homogeneous')
        return degrees.pop() if degrees else None

    def __check(self, other: 'Scalar'):
        if self.__context != other.context:
            raise scalar_errors.ContextMismatch(self.__context, other.context)

    def __coerce(self, other):
        if isinstance(other, Scalar):
            self.__check(other)
            return other
        if isinstance(other, (int, Fraction, QQ.dtype)) and not isinstance(other, bool):
            return Scalar.constant(self.__context, other)
        return None

    def __add__(self, other) -> 'Scalar':
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        coeffs: Dict[Monomial, object] = dict(self.__coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] = coeffs.get(key, qq(0)) + value
        return Scalar(self.__context, coeffs)

    __radd__ = __add__

    def __neg__(self) -> 'Scalar':
        return Scalar(self.__context, {key: -value for key, value in self.__coeffs.items()})

    def __sub__(self, other) -> 'Scalar':
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'Scalar':
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> 'Scalar':
        other = self.__coerce(other)
        if other is None:
            return NotImplemented
        coeffs: Dict[Monomial, object] = {}
        for (i, j), left in self.__coeffs.items():
            for (k, l), right in other.coeffs.items():
                if self.__context.keeps(i + k, j + l):
                    key = (i + k, j + l)
                    coeffs[key] = coeffs.get(key, qq(0)) + left * right
        return Scalar(self.__context, coeffs)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Scalar':
        if exponent < 0:
            raise ValueError('Negative power of a scalar')
        result = Scalar.one(self.__context)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.__context == other.context and dict(self.__coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.__context, tuple((key, num_den(val)) for key, val in self.__coeffs.items())))

    def __repr__(self):
        if not self.__coeffs:
            return '0'
        terms = []
        for (i, j), value in self.__coeffs.items():
            num, den = num_den(value)
            coef = str(num) if den == 1 else f'{num}/{den}'
            mono = ('z' if i == 1 else f'z^{i}' if i else '') + ('ε' if j == 1 else f'ε^{j}' if j else '')
            if mono and coef in ('1', '-1'):
                coef = coef[:-1]
            terms.append(f'{coef}{mono}')
        return ' + '.join(terms).replace('+ -', '- ')

    def with_context(self, context: Context) -> 'Scalar':
        "The same coefficients in another context (truncating)"
        return Scalar(context, self.__coeffs)

    def substitute(self, eps_image: 'Scalar', context: Context=None) -> 'Scalar':
        """Returns the image under z ↦ z, ε ↦ eps_image, in eps_image's context.

        The caller is responsible for the well definedness of the substitution
        (see `check_substitution`).
        """
        context = context or eps_image.context
        powers = eps_powers(eps_image, self.__context.eps_order)
        result = Scalar.zero(context)
        for (i, j), value in self.__coeffs.items():
            result = result + Scalar.monomial(context, i, 0, value) * powers[j]
        return result

    def to_records(self) -> List[dict]:
        "Serialization as a list of {i, j, num, den} records"
        records = []
        for (i, j), value in self.__coeffs.items():
            num, den = num_den(value)
            records.append({'i': i, 'j': j, 'num': num, 'den': den})
        return records

    @classmethod
    def from_records(cls, context: Context, records: List[Mapping]) -> 'Scalar':
        "Deserialization"
        coeffs: Dict[Monomial, object] = {}
        for rec in records:
            if int(rec['den']) <= 0:
                raise ValueError(f'Non positive denominator in {rec}')
            key = (int(rec['i']), int(rec['j']))
            coeffs[key] = coeffs.get(key, qq(0)) + qq(f"{rec['num']}/{rec['den']}")
        return cls(context, coeffs)


def eps_powers(eps_image: Scalar, count: int) -> List[Scalar]:
    "[eps_image^0, ..., eps_image^(count-1)]"
    powers = [Scalar.one(eps_image.context)]
    for _ in range(1, count):
        powers.append(powers[-1] * eps_image)
    return powers

def scalar_add(left: Scalar, right: Scalar) -> Scalar:
    "Coefficient-wise sum. Raises ContextMismatch."
    if left.context != right.context:
        raise scalar_errors.ContextMismatch(left.context, right.context)
    return left + right

def scalar_mul(left: Scalar, right: Scalar) -> Scalar:
    "Truncated convolution product. Raises ContextMismatch."
    if left.context != right.context:
        raise scalar_errors.ContextMismatch(left.context, right.context)
    return left * right

def binomial_substitute(scalar: Scalar, context: Context=None) -> Scalar:
    """Replaces ε by z + ε in a series in ε.

    ε^l is sent to Σ_{i+j=l} C(l,i) z^j ε^i in the target `context`. The map is a
    ring morphism only if (z + ε)^Nε(source) vanishes in the target, that is
    Nε(source) >= Nz(target) + Nε(target) - 1. The default target keeps the
    z order of the scalar and takes the largest ε order allowed.

    Raises:
        ZInSubstitution: if the scalar contains z.
        TruncationError: if the substitution is not defined on the target.
    """
    if scalar.has_z:
        raise scalar_errors.ZInSubstitution(scalar)
    source = scalar.context
    if context is None:
        context = Context(source.z_order, max(1, source.eps_order - source.z_order + 1))
    shift = Scalar.z(context) + Scalar.eps(context)
    check_substitution(source, shift, context)
    return scalar.substitute(shift, context)

def check_substitution(source: Context, eps_image: Scalar, target: Context=None):
    """Checks that z ↦ z, ε ↦ eps_image is a ring morphism from the source context.

    It is the case when z^Nz(source) and eps_image^Nε(source) vanish in the target.

    Raises:
        TruncationError: with the missing order in the message.
    """
    target = target or eps_image.context
    if eps_image.context != target:
        raise scalar_errors.ContextMismatch(eps_image.context, target)
    if source.z_order < target.z_order:
        raise scalar_errors.TruncationError(
            f'source z_order {source.z_order} < target z_order {target.z_order}')
    if eps_image.constant_term():
        raise scalar_errors.TruncationError(f'{eps_image} is not in the ideal (z, ε)')
    powers = eps_powers(eps_image, target.z_order + target.eps_order)
    nilpotency = next(
        (order for order, power in enumerate(powers) if power.is_zero()), len(powers))
    if source.eps_order < nilpotency:
        raise scalar_errors.TruncationError(
            f'({eps_image})^{source.eps_order} does not vanish in {target}; '
            f'source eps_order {nilpotency} is required')
    LOGGER.debug('substitution ε -> %s from %s to %s is well defined', eps_image, source, target)
