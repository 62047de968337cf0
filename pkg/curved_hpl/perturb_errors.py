"""This module provides the errors for the filtered and perturb modules."""

class NotInIdeal(Exception):
    """The perturbation is not in the ideal used for the Neumann inversion."""
    def __init__(self, kind, detail):
        self.kind = kind
        Exception.__init__(self, f'Not in the {kind} ideal: {detail}')

class NeumannCapExceeded(Exception):
    """The Neumann series did not terminate: the map is not nilpotent."""
    def __init__(self, cap):
        self.cap = cap
        Exception.__init__(self, f'Neumann series still running after {cap} terms')

class TriangularityError(Exception):
    """A block of the perturbation breaks the strict triangularity."""
    def __init__(self, row, col):
        self.row = row
        self.col = col
        Exception.__init__(
            self, f"Block from '{col}' to '{row}' is not strictly lower triangular")

class PosetError(Exception):
    """Invalid poset or poset indexed data."""
    def __init__(self, msg):
        Exception.__init__(self, f'Poset error: {msg}')
