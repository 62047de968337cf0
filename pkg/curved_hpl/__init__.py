"""curved_hpl package

Exact homological perturbation over the truncated algebra Q[z,ε]/(z^Nz, ε^Nε).
"""

import os

version_file = os.path.join(os.path.dirname(__file__), 'version.txt')
with open(version_file, encoding='utf-8') as version:
    __version__ = version.read().strip()
