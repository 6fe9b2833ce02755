from .linalg import *
from .algebra import *
from .category import *
from .entwining import *
from .frobsep import *
from .galois import *
from .dsl import *
from .commands import Command, Report, create_command, register_command, registered_commands

# star imports also carry submodule names; keep the subpackages bound
from . import linalg, algebra, category, entwining, frobsep, galois, dsl, commands, errors, utils

from .errors import EntwineError, ShapeError, UnknownObjectError, VerificationError
from .utils import (Verdict, VERSION, DEFAULT_SEED, DEFAULT_TRIALS, SEED_ENV,
                    GRID_MAX_PARAMETERS, SAMPLE_RANGE_FACTOR, EXHAUSTIVE_LIMIT)

__version__ = VERSION
