#-*- coding: utf-8 -*-

"""This module provides the class Settings.

Settings gathers the truncation orders, the Neumann safety cap and the
generator bounds used by the engine and the command line.

Example:
    >>> from curved_hpl.config import Settings
    >>> settings = Settings.load()
    >>> settings.context
    Context(z_order=4, eps_order=4)

Note:
    The config file is searched in the `CURVED_HPL_CONF_DIR` directory if the
    variable is set, then in `/etc/curved_hpl`. The file format is as follows:

        | [truncation]
        | z_order = 4
        | eps_order = 4
        | she_eps_order = 6
        | [neumann]
        | cap = 64
        | [generate]
        | max_rank = 4
        | max_span = 6
"""

import os
from configparser import ConfigParser
from dataclasses import dataclass, replace
from os import environ

from curved_hpl import config_errors
from curved_hpl.scalar import Context

CONF_DIR = os.path.abspath(environ.get('CURVED_HPL_CONF_DIR', '/etc/curved_hpl'))
CONF_FILE = 'curved_hpl.ini'

# section of each setting in the config file
SECTIONS = {
    'z_order': 'truncation',
    'eps_order': 'truncation',
    'she_eps_order': 'truncation',
    'cap': 'neumann',
    'max_rank': 'generate',
    'max_span': 'generate',
}

@dataclass(frozen=True)
class Settings:
    "Engine settings. All values are positive integers."
    z_order: int = 4
    eps_order: int = 4
    she_eps_order: int = 6
    cap: int = 64
    max_rank: int = 4
    max_span: int = 6

    @property
    def context(self) -> Context:
        "The default truncation context"
        return Context(self.z_order, self.eps_order)

    def override(self, **kwargs) -> 'Settings':
        "Returns a copy with the non None values of kwargs replaced"
        return replace(self, **{key: val for key, val in kwargs.items() if val is not None})

    @classmethod
    def load(cls, config_file: str=None) -> 'Settings':
        """Load the settings.

        Args:
            config_file (str): name of the file in CONF_DIR (or a path). When it
                is None, `curved_hpl.ini` is used if present, the defaults otherwise.

        Raises:
            MissingConfigFile: If an explicitly named **config_file** is not found.
            MalformedConfigFile: If a value is not a positive integer.
        """
        explicit = config_file is not None
        file_ = os.path.join(CONF_DIR, config_file or CONF_FILE)
        config = ConfigParser()
        if not config.read([file_]):
            if explicit:
                raise config_errors.MissingConfigFile(file_)
            return cls()
        values = {}
        for name, section in SECTIONS.items():
            if not config.has_option(section, name):
                continue
            try:
                value = config.getint(section, name)
            except ValueError as exc:
                raise config_errors.MalformedConfigFile(
                    file_, 'Not an integer', f'{section}.{name}') from exc
            if value < 1:
                raise config_errors.MalformedConfigFile(
                    file_, 'Not a positive integer', f'{section}.{name}')
            values[name] = value
        return cls(**values)
