#-*- coding: utf-8 -*-

"""Seeded random instances.

Every instance only depends on the seed and on the generator settings. The
complexes are built from pieces whose homotopy type is known, then hidden by
a random change of basis:

* a plain complex is φ(M ⊕ cone(id_V)), M with zero differential;
* a homotopy equivalence goes from X = φ(Y ⊕ cone(id_V)) to Y;
* a filtered instance has summands X_i ≃ (M_i, 0) and a strictly lower
  triangular Maurer-Cartan perturbation;
* a curved instance is a strong homotopy equivalence X = Y ⊕ C ≃ Y of
  contractible complexes with a perturbation α = z·a + b, b strictly lower
  triangular or 0, satisfying d(α) + α² = z.

The equivalences of the filtered and curved instances go through
`Generator.skew` unless asked otherwise, so that the side conditions fail and
the strong equivalences have ε components.
"""

import logging
import random
from fractions import Fraction
from typing import Dict, List, NamedTuple, Tuple

from curved_hpl import blocks
from curved_hpl.complex import CurvedComplex, direct_sum, hom_diff
from curved_hpl.filtered import FilteredComplex, IdealSpec, Poset
from curved_hpl.graded import GradedMap, GradedModule, assemble, injection, projection
from curved_hpl.homotopy import (
    HEData, SHEData, ZHEData, catalan_lift, cone_contraction_from_he, promote_he_to_she,
    specialize_she)
from curved_hpl.perturb import neumann_inverse
from curved_hpl.scalar import Context, Scalar

LOGGER = logging.getLogger(__name__)

ENTRIES = (-2, -1, 1, 2, Fraction(1, 2), Fraction(-1, 2))


class Contractible(NamedTuple):
    "cone(id_V) with its contraction"
    complex: CurvedComplex
    contraction: GradedMap

class FilteredInstance(NamedTuple):
    "A filtered complex and an equivalence X_i ≃ Y_i per summand"
    fcomplex: FilteredComplex
    equivalences: Dict[str, HEData]

class CurvedInstance(NamedTuple):
    "Input of the curved transfer: she, a curved Maurer-Cartan α and its ideal"
    she: SHEData
    alpha: GradedMap
    ideal: IdealSpec

    def zhe(self) -> ZHEData:
        "The z-homotopy equivalence obtained by ε ↦ z, in the context of α"
        return specialize_she(self.she, self.alpha.context)


class Generator:
    """Seeded generator.

    Args:
        seed (int): the seed of the `random.Random` instance.
        context (Context): context of the instances.
        max_rank (int): bound on the rank of each degree of the generated complexes.
        max_span (int): bound on the number of degrees.
        she_eps_order (int): ε order of the strong homotopy equivalences.
    """
    def __init__(self, seed: int, context: Context=None, max_rank: int=4, max_span: int=6,
                 she_eps_order: int=6):
        if max_rank < 1 or max_span < 2:
            raise ValueError(f'Invalid shape parameters: max_rank {max_rank}, max_span {max_span}')
        self.__rng = random.Random(seed)
        self.__context = context or Context()
        self.__max_rank = max_rank
        self.__max_span = max_span
        self.__she_eps_order = she_eps_order

    @property
    def context(self) -> Context:
        "The context of the instances"
        return self.__context

    def entry(self, density: float=0.5):
        "A small random rational, 0 with probability 1 - density"
        if self.__rng.random() < density:
            return self.__rng.choice(ENTRIES)
        return 0

    def window(self) -> List[int]:
        "A random list of consecutive degrees"
        low = self.__rng.randint(-2, 1)
        return list(range(low, low + self.__rng.randint(2, self.__max_span)))

    def __contractible_ranks(self, window: List[int], used: Dict[int, int]) -> Dict[int, int]:
        # V^d lands in the degrees d and d - 1 of cone(id_V)
        ranks = {}
        for degree in window[1:]:
            if (used[degree] < self.__max_rank and used[degree - 1] < self.__max_rank
                    and self.__rng.random() < 0.6):
                ranks[degree] = 1
                used[degree] += 1
                used[degree - 1] += 1
        return ranks

    def __free_ranks(self, window: List[int], used: Dict[int, int], most: int=2) -> Dict[int, int]:
        ranks = {}
        for degree in window:
            rank = self.__rng.randint(0, max(0, min(most, self.__max_rank - used[degree])))
            ranks[degree] = rank
            used[degree] += rank
        return ranks

    def module(self, ranks: Dict[int, int]) -> GradedModule:
        "The module of the given ranks in the context of the generator"
        return GradedModule(ranks, self.__context)

    def random_map(self, source: GradedModule, target: GradedModule, degree: int,
                   density: float=0.5) -> GradedMap:
        "A random map with a (0, 0) component only"
        plain = {}
        for p, rank in source.ranks.items():
            trank = target.rank(p + degree)
            if trank:
                plain[p] = blocks.matrix(
                    [[self.entry(density) for _ in range(rank)] for _ in range(trank)])
        return GradedMap(source, target, degree, {(0, 0): plain})

    def unitriangular(self, module: GradedModule) -> Tuple[GradedMap, GradedMap]:
        "A random lower unitriangular automorphism φ and its inverse"
        plain = {
            p: blocks.matrix([[1 if row == col else (self.entry() if col < row else 0)
                               for col in range(rank)] for row in range(rank)])
            for p, rank in module.ranks.items()}
        return (GradedMap(module, module, 0, {(0, 0): plain}),
                GradedMap(module, module, 0,
                          {(0, 0): {p: blocks.inverse(mat) for p, mat in plain.items()}}))

    def contractible(self, ranks: Dict[int, int]) -> Contractible:
        "cone(id_V) for V of the given ranks"
        vcplx = CurvedComplex.with_zero_differential(self.module(ranks))
        built = cone_contraction_from_he(HEData.identity(vcplx))
        return Contractible(built.cone.complex, built.contraction)

    def __hidden_sum(self, ycplx: CurvedComplex, window: List[int],
                     used: Dict[int, int]) -> HEData:
        # X = φ(Y ⊕ C) ≃ Y
        cpart = self.contractible(self.__contractible_ranks(window, used))
        base = direct_sum([ycplx, cpart.complex], ['Y', 'C']).complex
        module = base.module
        phi, phi_inv = self.unitriangular(module)
        xcplx = CurvedComplex(module, phi @ base.delta @ phi_inv)
        hmap = assemble(module, module, -1, {('C', 'C'): cpart.contraction})
        return HEData(xcplx, ycplx,
                      projection(module, 'Y') @ phi_inv,
                      phi @ injection(module, 'Y'),
                      phi @ hmap @ phi_inv,
                      GradedMap.zero(ycplx.module, ycplx.module, -1))

    def closed_map(self, cplx: CurvedComplex, degree: int) -> GradedMap:
        "A random closed endomorphism of the given degree, a boundary unless δ = 0"
        module = cplx.module
        if cplx.delta.is_zero():
            return self.random_map(module, module, degree)
        return hom_diff(self.random_map(module, module, degree - 1), cplx)

    def skew(self, data: HEData) -> HEData:
        """The equivalence with h + g·c·f and k + c', c and c' random closed maps
        of degree -1 on Y. The side conditions fh = 0 and kf = 0 then fail in
        general, and the promoted strong equivalence has ε components.
        """
        ycplx = data.target
        extra_h = data.g @ self.closed_map(ycplx, -1) @ data.f
        return HEData(data.source, data.target, data.f, data.g,
                      data.h + extra_h, data.k + self.closed_map(ycplx, -1))

    def plain_complex(self, window: List[int]=None, used: Dict[int, int]=None) -> CurvedComplex:
        "φ(M ⊕ cone(id_V)), M of zero differential"
        window = self.window() if window is None else window
        used = {degree: 0 for degree in window} if used is None else used
        mcplx = CurvedComplex.with_zero_differential(self.module(self.__free_ranks(window, used)))
        return self.__hidden_sum(mcplx, window, used).source

    def homotopy_equivalence(self) -> HEData:
        "X ≃ Y, Y a random plain complex and X = φ(Y ⊕ cone(id_V))"
        window = self.window()
        used = {degree: 0 for degree in window}
        ycplx = self.plain_complex(window, used)
        return self.__hidden_sum(ycplx, window, used)

    def poset(self, size: int, chain: bool=False) -> Poset:
        "Random poset on x0, x1, ... refining the order of the indices"
        elements = [f'x{index}' for index in range(size)]
        if chain:
            return Poset.chain(elements)
        covers = [(low, up) for index, low in enumerate(elements) for up in elements[index + 1:]
                  if self.__rng.random() < 0.5]
        return Poset(elements, covers)

    def filtered_instance(self, size: int=3, chain: bool=False,
                          skew: bool=True) -> FilteredInstance:
        """A filtered complex with summands X_i = φ_i(M_i ⊕ cone(id_V_i)) and
        α = ψ^-1(δ + α_c)ψ - δ, ψ = id + n with n strictly lower triangular and
        α_c a single closed block factoring through the M_i. With `skew`, the
        summand equivalences go through `skew`.
        """
        poset = self.poset(size, chain)
        window = self.window()
        equivalences = {}
        for label in poset.elements:
            used = {degree: 0 for degree in window}
            mcplx = CurvedComplex.with_zero_differential(
                self.module(self.__free_ranks(window, used, most=1)))
            data = self.__hidden_sum(mcplx, window, used)
            equivalences[label] = self.skew(data) if skew else data
        labels = list(poset.elements)
        total = direct_sum([equivalences[label].source for label in labels], labels).complex
        module = total.module
        pairs = [(low, up) for low in labels for up in labels if poset.less(low, up)]
        closed = {}
        if pairs:
            low, up = self.__rng.choice(pairs)
            rho = self.random_map(equivalences[low].target.module,
                                  equivalences[up].target.module, 1)
            closed[(up, low)] = equivalences[up].g @ rho @ equivalences[low].f
        nilpotent = assemble(module, module, 0, {
            (up, low): self.random_map(equivalences[low].source.module,
                                       equivalences[up].source.module, 0)
            for low, up in pairs if self.__rng.random() < 0.5})
        ideal = IdealSpec.triangular(poset)
        phi = GradedMap.identity(module) + nilpotent
        phi_inv = neumann_inverse(nilpotent, ideal)
        alpha = phi_inv @ (total.delta + assemble(module, module, 1, closed)) @ phi - total.delta
        summands = {label: equivalences[label].source for label in labels}
        LOGGER.debug('filtered instance on %s', poset)
        return FilteredInstance(FilteredComplex(poset, summands, alpha), equivalences)

    def curved_instance(self, skew: bool=True, ideal: str='sum') -> CurvedInstance:
        """X = Y ⊕ C ≃ Y, both contractible, skewed or not, promoted to a strong
        homotopy equivalence, with α = ψ^-1(δ + z·h(z))ψ - δ where h(ε) is the strong
        contraction of X and ψ = id + n, n from Y to C.

        With ideal 'adic', ψ = id and α = z·h(z) lies in (z, ε). With 'sum', α
        lies in (z, ε) + the maps from Y to C.
        """
        if ideal not in ('adic', 'sum'):
            raise ValueError(f'No curved instance in the {ideal!r} ideal')
        context = self.__context
        window = self.window()
        used = {degree: 0 for degree in window}
        ypart = self.contractible(self.__contractible_ranks(window, used))
        cpart = self.contractible(self.__contractible_ranks(window, used))
        xcplx = direct_sum([ypart.complex, cpart.complex], ['Y', 'C']).complex
        module = xcplx.module
        ymod = ypart.complex.module
        he = HEData(xcplx, ypart.complex,
                    projection(module, 'Y'), injection(module, 'Y'),
                    assemble(module, module, -1, {('C', 'C'): cpart.contraction}),
                    GradedMap.zero(ymod, ymod, -1))
        if skew:
            he = self.skew(he)
        she_order = max(self.__she_eps_order, context.z_order + context.eps_order)
        she = promote_he_to_she(he, eps_order=she_order)

        lift_context = Context(context.z_order, context.z_order)
        contraction = assemble(module, module, -1, {
            ('Y', 'Y'): ypart.contraction, ('C', 'C'): cpart.contraction})
        lifted = catalan_lift(contraction.with_context(lift_context),
                              xcplx.with_context(lift_context))
        zscalar = Scalar.z(context)
        curved_part = zscalar * lifted.substitute(zscalar)
        if ideal == 'adic':
            return CurvedInstance(she, curved_part, IdealSpec.adic())
        nilpotent = assemble(module, module, 0, {
            ('C', 'Y'): self.random_map(ymod, cpart.complex.module, 0)})
        phi = GradedMap.identity(module) + nilpotent
        phi_inv = GradedMap.identity(module) - nilpotent
        alpha = phi_inv @ (xcplx.delta + curved_part) @ phi - xcplx.delta
        return CurvedInstance(she, alpha, IdealSpec.sum(Poset.chain(['Y', 'C'])))
