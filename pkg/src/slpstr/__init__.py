"""String algorithms on straight-line programs, without decompression."""

from .slp import Slp, Terminal, Concat, parse_slp, serialize, expand, substring_slp, analyze
from .progressions import EMPTY, UNDEFINED, Prog
from .fcpm import build_ap_table, decide, count, first_occurrence, check_at, equal_slp

__version__ = "0.1.0"
