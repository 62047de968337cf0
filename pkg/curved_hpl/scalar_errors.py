"""This module provides the errors for the scalar module."""

class InvalidContext(Exception):
    """The truncation orders must be at least 1."""
    def __init__(self, z_order, eps_order):
        self.z_order = z_order
        self.eps_order = eps_order
        Exception.__init__(
            self, f'Invalid truncation orders: z_order={z_order}, eps_order={eps_order}')

class ContextMismatch(Exception):
    """Both operands must live in the same truncation context."""
    def __init__(self, left, right):
        self.left = left
        self.right = right
        Exception.__init__(self, f'Context mismatch: {left} != {right}')

class ZInSubstitution(Exception):
    """The binomial substitution only applies to series in ε."""
    def __init__(self, scalar):
        self.scalar = scalar
        Exception.__init__(self, f'Scalar contains z: {scalar}')

class TruncationError(Exception):
    """The truncation orders are too small for the requested operation."""
    def __init__(self, msg):
        Exception.__init__(self, f'Insufficient truncation: {msg}')
