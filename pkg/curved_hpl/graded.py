#-*- coding: utf-8 -*-

"""This module provides the classes GradedModule and GradedMap.

A GradedModule is a free graded Q-module of finite support, extended by the
scalars of a Context. A GradedMap of degree d between two such modules is a
finite family of components indexed by the monomials z^i ε^j; the (i, j)
component is a plain map of degree d - 2(i+j), given by one rational matrix
per source degree. Composition is matrix multiplication with convolution of
the components. Scalars are central and even: no Koszul sign ever appears
here.

Modules may carry a decomposition into labelled summands. `block` extracts
the component of a map between two summands and `assemble` goes back.
"""

from types import MappingProxyType
from typing import Dict, Mapping, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from curved_hpl import blocks, graded_errors, scalar_errors
from curved_hpl.scalar import Context, Monomial, Scalar, eps_powers

PlainMap = Mapping[int, DomainMatrix]


class GradedModule:
    """Free graded module of finite support.

    Args:
        ranks (Mapping[int, int]): degree -> rank. Zero ranks are dropped.
        context (Context): the scalar context.
        summands (Sequence[Tuple[str, GradedModule]]): optional decomposition,
            in order. It is not part of the equality of modules.
    """
    def __init__(self, ranks: Mapping[int, int], context: Context,
                 summands: Sequence[Tuple[str, 'GradedModule']]=()):
        clean = {}
        for degree, rank in ranks.items():
            if rank < 0:
                raise ValueError(f'Negative rank {rank} in degree {degree}')
            if rank:
                clean[int(degree)] = int(rank)
        self.__ranks = MappingProxyType(dict(sorted(clean.items())))
        self.__context = context
        self.__summands = tuple(summands)
        if self.__summands:
            labels = [label for label, _ in self.__summands]
            if len(set(labels)) != len(labels):
                raise ValueError(f'Duplicate summand labels: {labels}')
            total: Dict[int, int] = {}
            for _, module in self.__summands:
                for degree, rank in module.ranks.items():
                    total[degree] = total.get(degree, 0) + rank
            if total != dict(self.__ranks):
                raise graded_errors.ShapeMismatch(
                    f'summand ranks {total} do not add up to {dict(self.__ranks)}')

    @property
    def ranks(self) -> Mapping[int, int]:
        "degree -> rank, without zeros"
        return self.__ranks

    @property
    def context(self) -> Context:
        "The scalar context"
        return self.__context

    @property
    def summands(self) -> Tuple[Tuple[str, 'GradedModule'], ...]:
        "The decomposition, empty if none"
        return self.__summands

    @property
    def labels(self) -> Tuple[str, ...]:
        "The labels of the summands"
        return tuple(label for label, _ in self.__summands)

    def rank(self, degree: int) -> int:
        "Rank in the given degree"
        return self.__ranks.get(degree, 0)

    @property
    def degrees(self) -> Tuple[int, ...]:
        "The support"
        return tuple(self.__ranks)

    def is_zero(self) -> bool:
        "True for the zero module"
        return not self.__ranks

    def shift(self, n: int) -> 'GradedModule':
        "M[n], with M[n]^k = M^(k+n)"
        return GradedModule(
            {degree - n: rank for degree, rank in self.__ranks.items()}, self.__context,
            [(label, module.shift(n)) for label, module in self.__summands])

    def with_context(self, context: Context) -> 'GradedModule':
        "The same module over another context"
        return GradedModule(
            self.__ranks, context,
            [(label, module.with_context(context)) for label, module in self.__summands])

    def summand(self, label: str) -> 'GradedModule':
        "The summand of the given label"
        for name, module in self.__summands:
            if name == label:
                return module
        raise graded_errors.UnknownSummand(label)

    def offset(self, label: str, degree: int) -> int:
        "Position of the first coordinate of the summand in the given degree"
        offset = 0
        for name, module in self.__summands:
            if name == label:
                return offset
            offset += module.rank(degree)
        raise graded_errors.UnknownSummand(label)

    @classmethod
    def direct_sum(cls, parts: Sequence[Tuple[str, 'GradedModule']]) -> 'GradedModule':
        "The direct sum of labelled modules of a common context"
        if not parts:
            raise ValueError('Empty direct sum')
        context = parts[0][1].context
        ranks: Dict[int, int] = {}
        for _, module in parts:
            if module.context != context:
                raise scalar_errors.ContextMismatch(context, module.context)
            for degree, rank in module.ranks.items():
                ranks[degree] = ranks.get(degree, 0) + rank
        return cls(ranks, context, parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedModule):
            return NotImplemented
        return self.__context == other.context and dict(self.__ranks) == dict(other.ranks)

    def __hash__(self):
        return hash((self.__context, tuple(self.__ranks.items())))

    def __repr__(self):
        ranks = ', '.join(f'{degree}: {rank}' for degree, rank in self.__ranks.items())
        return f'GradedModule({{{ranks}}})'

    def to_dict(self) -> dict:
        "Serialization"
        data = {
            'context': self.__context.to_dict(),
            'ranks': [{'degree': degree, 'rank': rank} for degree, rank in self.__ranks.items()]}
        if self.__summands:
            data['summands'] = [
                {'label': label,
                 'ranks': [{'degree': degree, 'rank': rank} for degree, rank in module.ranks.items()]}
                for label, module in self.__summands]
        return data

    @classmethod
    def from_dict(cls, data: Mapping) -> 'GradedModule':
        "Deserialization"
        context = Context.from_dict(data['context'])
        def ranks(records):
            return {int(rec['degree']): int(rec['rank']) for rec in records}
        summands = [(str(rec['label']), cls(ranks(rec['ranks']), context))
                    for rec in data.get('summands', [])]
        return cls(ranks(data['ranks']), context, summands)


class GradedMap:
    """Homogeneous morphism of degree `degree` from `source` to `target`.

    Args:
        components (Mapping): (i, j) -> {source degree p -> matrix}. The matrix
            of the (i, j) component at p maps source degree p to target degree
            p + degree - 2(i+j). Zero blocks are dropped, truncated monomials
            are discarded.

    Raises:
        ShapeMismatch: if a block does not have the shape dictated by the ranks.
        ContextMismatch: if source and target live in different contexts.
    """
    def __init__(self, source: GradedModule, target: GradedModule, degree: int,
                 components: Mapping[Monomial, PlainMap]=None):
        if source.context != target.context:
            raise scalar_errors.ContextMismatch(source.context, target.context)
        self.__source = source
        self.__target = target
        self.__degree = degree
        context = source.context
        clean = {}
        for (i, j), plain in (components or {}).items():
            if not context.keeps(i, j):
                continue
            kept = {}
            for p, mat in plain.items():
                shape = (target.rank(p + degree - 2 * (i + j)), source.rank(p))
                if tuple(mat.shape) != shape:
                    raise graded_errors.ShapeMismatch(
                        f'block z^{i} ε^{j} at degree {p} has shape {tuple(mat.shape)}, '
                        f'expected {shape}')
                if not blocks.is_zero(mat):
                    kept[p] = mat
            if kept:
                clean[(i, j)] = MappingProxyType(dict(sorted(kept.items())))
        self.__components = MappingProxyType(dict(sorted(clean.items())))

    @property
    def source(self) -> GradedModule:
        "The source module"
        return self.__source

    @property
    def target(self) -> GradedModule:
        "The target module"
        return self.__target

    @property
    def degree(self) -> int:
        "The cohomological degree"
        return self.__degree

    @property
    def context(self) -> Context:
        "The scalar context"
        return self.__source.context

    @property
    def components(self) -> Mapping[Monomial, PlainMap]:
        "(i, j) -> {p -> matrix}, without zero blocks"
        return self.__components

    def is_zero(self) -> bool:
        "True for the zero map"
        return not self.__components

    def is_endomorphism(self) -> bool:
        "True if source and target are equal"
        return self.__source == self.__target

    @property
    def has_z(self) -> bool:
        "True if a component with i > 0 is stored"
        return any(i for i, _ in self.__components)

    @property
    def has_eps(self) -> bool:
        "True if a component with j > 0 is stored"
        return any(j for _, j in self.__components)

    @classmethod
    def zero(cls, source: GradedModule, target: GradedModule, degree: int) -> 'GradedMap':
        "The zero map"
        return cls(source, target, degree)

    @classmethod
    def identity(cls, module: GradedModule) -> 'GradedMap':
        "id_M"
        return cls(module, module, 0, {
            (0, 0): {degree: blocks.eye(rank) for degree, rank in module.ranks.items()}})

    @classmethod
    def scalar(cls, module: GradedModule, value: Scalar) -> 'GradedMap':
        "value·id_M, value being 0 or of degree 2 (z, ε, curvatures)"
        return value * cls.identity(module)

    @classmethod
    def from_rows(cls, source: GradedModule, target: GradedModule, degree: int,
                  rows: Mapping[int, Sequence[Sequence]], i: int=0, j: int=0) -> 'GradedMap':
        "Map with a single (i, j) component given by rows of rationals per source degree"
        return cls(source, target, degree,
                   {(i, j): {p: blocks.matrix(mat) for p, mat in rows.items()}})

    def _check_parallel(self, other: 'GradedMap'):
        if self.__source != other.source or self.__target != other.target:
            raise graded_errors.ShapeMismatch(
                f'{self.__source} -> {self.__target} vs {other.source} -> {other.target}')
        if self.__degree != other.degree:
            raise graded_errors.DegreeMismatch(self.__degree, other.degree)

    def __add__(self, other: 'GradedMap') -> 'GradedMap':
        self._check_parallel(other)
        comps = {key: dict(plain) for key, plain in self.__components.items()}
        for key, plain in other.components.items():
            acc = comps.setdefault(key, {})
            for p, mat in plain.items():
                acc[p] = acc[p] + mat if p in acc else mat
        return GradedMap(self.__source, self.__target, self.__degree, comps)

    def __neg__(self) -> 'GradedMap':
        return GradedMap(self.__source, self.__target, self.__degree, {
            key: {p: -mat for p, mat in plain.items()}
            for key, plain in self.__components.items()})

    def __sub__(self, other: 'GradedMap') -> 'GradedMap':
        return self + (-other)

    def __mul__(self, value) -> 'GradedMap':
        if isinstance(value, Scalar):
            return self.__scalar_mul(value)
        value = blocks.qq(value)
        if not value:
            return GradedMap.zero(self.__source, self.__target, self.__degree)
        return GradedMap(self.__source, self.__target, self.__degree, {
            key: {p: blocks.scale(mat, value) for p, mat in plain.items()}
            for key, plain in self.__components.items()})

    __rmul__ = __mul__

    def __scalar_mul(self, value: Scalar) -> 'GradedMap':
        if value.context != self.context:
            raise scalar_errors.ContextMismatch(value.context, self.context)
        # the zero scalar acts as a degree 2 element, like z, ε and curvatures
        degree = self.__degree + (2 if value.degree is None else value.degree)
        comps: Dict[Monomial, Dict[int, DomainMatrix]] = {}
        for (a, b), coeff in value.coeffs.items():
            for (i, j), plain in self.__components.items():
                if not self.context.keeps(i + a, j + b):
                    continue
                acc = comps.setdefault((i + a, j + b), {})
                for p, mat in plain.items():
                    scaled = blocks.scale(mat, coeff)
                    acc[p] = acc[p] + scaled if p in acc else scaled
        return GradedMap(self.__source, self.__target, degree, comps)

    def __matmul__(self, other: 'GradedMap') -> 'GradedMap':
        return compose(self, other)

    def __pow__(self, exponent: int) -> 'GradedMap':
        if not self.is_endomorphism():
            raise graded_errors.ShapeMismatch('power of a map which is not an endomorphism')
        if exponent < 0:
            raise ValueError('Negative power of a map')
        result = GradedMap.identity(self.__source)
        for _ in range(exponent):
            result = compose(self, result)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        if (self.__source != other.source or self.__target != other.target
                or self.__degree != other.degree):
            return False
        if set(self.__components) != set(other.components):
            return False
        for key, plain in self.__components.items():
            other_plain = other.components[key]
            if set(plain) != set(other_plain):
                return False
            for p, mat in plain.items():
                if blocks.rows_of(mat) != blocks.rows_of(other_plain[p]):
                    return False
        return True

    __hash__ = None

    def __repr__(self):
        keys = ', '.join(f'z^{i}ε^{j}' for i, j in self.__components)
        return (f'GradedMap({self.__source} -> {self.__target}, '
                f'degree {self.__degree}, components [{keys}])')

    def with_context(self, context: Context) -> 'GradedMap':
        "Same components in another context, truncated if it is smaller"
        return GradedMap(self.__source.with_context(context), self.__target.with_context(context),
                         self.__degree, self.__components)

    def with_modules(self, source: GradedModule, target: GradedModule) -> 'GradedMap':
        "Same blocks between equal modules carrying other decompositions"
        return GradedMap(source, target, self.__degree, self.__components)

    def truncate_eps(self, order: int) -> 'GradedMap':
        "Drops the components with j >= order"
        return GradedMap(self.__source, self.__target, self.__degree, {
            (i, j): plain for (i, j), plain in self.__components.items() if j < order})

    def at_eps_zero(self) -> 'GradedMap':
        "The map at ε = 0"
        return self.truncate_eps(1)

    def shift_eps(self, power: int) -> 'GradedMap':
        "Division by ε^power of the components with j >= power, the others being dropped"
        return GradedMap(self.__source, self.__target, self.__degree - 2 * power, {
            (i, j - power): plain for (i, j), plain in self.__components.items() if j >= power})

    def eps_coefficient(self, power: int) -> 'GradedMap':
        "The coefficient of ε^power, of degree degree - 2·power"
        return self.shift_eps(power).at_eps_zero()

    def substitute(self, eps_image: Scalar, context: Context=None) -> 'GradedMap':
        """Image under z ↦ z, ε ↦ eps_image in the context of eps_image.

        eps_image must be 0 or homogeneous of degree 2. The well definedness of
        the substitution is checked by `check_substitution`, not here.
        """
        context = context or eps_image.context
        if eps_image.degree not in (None, 2):
            raise graded_errors.DegreeMismatch(2, eps_image.degree)
        powers = eps_powers(eps_image, self.context.eps_order)
        comps: Dict[Monomial, Dict[int, DomainMatrix]] = {}
        for (i, j), plain in self.__components.items():
            image = Scalar.monomial(context, i, 0) * powers[j]
            for key, coeff in image.coeffs.items():
                acc = comps.setdefault(key, {})
                for p, mat in plain.items():
                    scaled = blocks.scale(mat, coeff)
                    acc[p] = acc[p] + scaled if p in acc else scaled
        return GradedMap(self.__source.with_context(context), self.__target.with_context(context),
                         self.__degree, comps)

    def to_dict(self) -> dict:
        "Serialization (the modules are serialized by the owner)"
        return {
            'degree': self.__degree,
            'components': [
                {'i': i, 'j': j,
                 'blocks': [{'p': p, 'rows': blocks.to_strings(mat)} for p, mat in plain.items()]}
                for (i, j), plain in self.__components.items()]}

    @classmethod
    def from_dict(cls, source: GradedModule, target: GradedModule, data: Mapping) -> 'GradedMap':
        "Deserialization"
        comps: Dict[Monomial, Dict[int, DomainMatrix]] = {}
        for comp in data.get('components', []):
            acc = comps.setdefault((int(comp['i']), int(comp['j'])), {})
            for blk in comp['blocks']:
                acc[int(blk['p'])] = blocks.matrix(blk['rows'])
        return cls(source, target, int(data['degree']), comps)


def compose(left: GradedMap, right: GradedMap) -> GradedMap:
    """left ∘ right.

    Degrees add, the (i, j) components convolve with truncation and the
    blocks multiply.

    Raises:
        ShapeMismatch: if left.source differs from right.target.
    """
    if left.source != right.target:
        raise graded_errors.ShapeMismatch(
            f'cannot compose {left.source} -> {left.target} after {right.source} -> {right.target}')
    context = left.context
    comps: Dict[Monomial, Dict[int, DomainMatrix]] = {}
    for (k, l), rplain in right.components.items():
        for (i, j), lplain in left.components.items():
            if not context.keeps(i + k, j + l):
                continue
            acc = comps.setdefault((i + k, j + l), {})
            for p, rmat in rplain.items():
                lmat = lplain.get(p + right.degree - 2 * (k + l))
                if lmat is None:
                    continue
                prod = lmat.matmul(rmat)
                acc[p] = acc[p] + prod if p in acc else prod
    return GradedMap(right.source, left.target, left.degree + right.degree, comps)

def injection(module: GradedModule, label: str) -> GradedMap:
    "The inclusion of a summand"
    part = module.summand(label)
    return GradedMap(part, module, 0, {(0, 0): {
        degree: blocks.embedding(rank, module.rank(degree), module.offset(label, degree))
        for degree, rank in part.ranks.items()}})

def projection(module: GradedModule, label: str) -> GradedMap:
    "The projection onto a summand"
    part = module.summand(label)
    return GradedMap(module, part, 0, {(0, 0): {
        degree: blocks.embedding(rank, module.rank(degree), module.offset(label, degree)).transpose()
        for degree, rank in part.ranks.items()}})

def block(fmap: GradedMap, row: str, col: str) -> GradedMap:
    """The component of fmap from the summand `col` of its source to the
    summand `row` of its target.

    Raises:
        UnknownSummand: if a label is not in the decompositions.
    """
    return compose(projection(fmap.target, row), compose(fmap, injection(fmap.source, col)))

def assemble(source: GradedModule, target: GradedModule, degree: int,
             parts: Mapping[Tuple[str, str], GradedMap]) -> GradedMap:
    "The map with the given (row, col) blocks, missing blocks being zero"
    result = GradedMap.zero(source, target, degree)
    for (row, col), part in parts.items():
        result = result + compose(injection(target, row), compose(part, projection(source, col)))
    return result

def blocks_of(fmap: GradedMap) -> Dict[Tuple[str, str], GradedMap]:
    "All the non zero blocks of a map between decomposed modules"
    result = {}
    for row in fmap.target.labels:
        for col in fmap.source.labels:
            part = block(fmap, row, col)
            if not part.is_zero():
                result[(row, col)] = part
    return result

def shift_iso(module: GradedModule, n: int) -> GradedMap:
    "θ: M[n] → M, the degree n map with identity blocks"
    return GradedMap(module.shift(n), module, n, {
        (0, 0): {degree - n: blocks.eye(rank) for degree, rank in module.ranks.items()}})

def shift_iso_inverse(module: GradedModule, n: int) -> GradedMap:
    "The inverse of θ: M → M[n], of degree -n"
    return GradedMap(module, module.shift(n), -n, {
        (0, 0): {degree: blocks.eye(rank) for degree, rank in module.ranks.items()}})
