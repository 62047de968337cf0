"""This module provides the errors for the config module."""

class MissingConfigFile(Exception):
    """The config file has not been found."""
    def __init__(self, filename):
        self.filename = filename
        Exception.__init__(self, f'Missing config file: {filename}')

class MalformedConfigFile(Exception):
    """The config file is malformed.

    The faulty parameters are indicated in the error message.
    """
    def __init__(self, filename, msg, param):
        self.filename = filename
        self.param = param
        Exception.__init__(
            self,
            f"Malformed config file: {filename}\n{msg}: {param}")
