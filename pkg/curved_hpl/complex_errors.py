"""This module provides the errors for the complex module."""

class CurvatureMismatch(Exception):
    """The hom differential needs complexes of the same curvature."""
    def __init__(self, source, target):
        self.source = source
        self.target = target
        Exception.__init__(self, f'Curvature mismatch: {source} != {target}')

class MaurerCartanError(Exception):
    """The twisted differential does not square to the curvature.

    The residual (δ+α)² - w·id is kept in the `residual` attribute.
    """
    def __init__(self, residual):
        self.residual = residual
        components = ', '.join(f'z^{i}ε^{j}' for i, j in residual.components)
        Exception.__init__(self, f'Maurer-Cartan equation violated, residual components: {components}')

class NotClosed(Exception):
    """The map should be closed for the hom differential."""
    def __init__(self, residual):
        self.residual = residual
        Exception.__init__(self, f'Map is not closed: {residual}')

class NotPlain(Exception):
    """An uncurved complex with a differential free of z and ε was expected."""
    def __init__(self, cplx):
        self.cplx = cplx
        Exception.__init__(self, f'Not a plain complex: {cplx}')
