"""This module provides the errors for the graded module."""

class ShapeMismatch(Exception):
    """Blocks, modules or maps of incompatible shapes."""
    def __init__(self, msg):
        Exception.__init__(self, f'Shape mismatch: {msg}')

class DegreeMismatch(Exception):
    """A map of another degree was expected."""
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        Exception.__init__(self, f'Degree mismatch: expected {expected}, got {got}')

class UnknownSummand(Exception):
    """The label is not a summand of the module decomposition."""
    def __init__(self, label):
        self.label = label
        Exception.__init__(self, f'Unknown summand: {label!r}')

class NotInvertible(Exception):
    """The map has no inverse."""
    def __init__(self, msg):
        Exception.__init__(self, f'Not invertible: {msg}')
