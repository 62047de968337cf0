import os

os.environ.setdefault(
    'CURVED_HPL_CONF_DIR', os.path.join(os.path.dirname(os.path.abspath(__file__)), 'config'))
