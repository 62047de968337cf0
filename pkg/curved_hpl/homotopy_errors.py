"""This module provides the errors for the homotopy module."""

class InvalidEquivalence(Exception):
    """The homotopy equivalence data do not satisfy their equations.

    The failing report is kept in the `report` attribute.
    """
    def __init__(self, report):
        self.report = report
        names = ', '.join(check.name for check in report.failures())
        Exception.__init__(self, f'Invalid {report.title}: {names}')

class NotAContraction(Exception):
    """The map is not a (strong) contracting homotopy."""
    def __init__(self, residual):
        self.residual = residual
        components = ', '.join(f'z^{i}ε^{j}' for i, j in residual.components)
        Exception.__init__(self, f'Not a contracting homotopy, residual components: {components}')
