# Import all files in this folder to register the commands

import os
import importlib
import glob

# `common.py` holds the registry and must be imported first
from . import common

for f in sorted(glob.glob(os.path.join(os.path.dirname(__file__), "*.py"))):
    if not os.path.isfile(f) or f.endswith('__init__.py'):
        continue

    name = os.path.basename(f)[:-3]
    if name != 'common':
        importlib.import_module(f'.{name}', package=__name__)

    del name
del f

del os, glob, importlib

from .common import (Command, Report, register_command, registered_commands,
                     create_command)
