"""This module provides the errors for the bundle module."""

class UnresolvedReference(Exception):
    """The bundle has no object of that name."""
    def __init__(self, name, expected=None):
        self.name = name
        self.expected = expected
        kind = f' of type {expected}' if expected else ''
        Exception.__init__(self, f'Unresolved reference: no object{kind} named {name!r}')

class MalformedBundle(Exception):
    """The bundle document is malformed.

    The faulty part is indicated in the error message.
    """
    def __init__(self, filename, msg):
        self.filename = filename
        Exception.__init__(self, f'Malformed bundle: {filename}\n{msg}')
