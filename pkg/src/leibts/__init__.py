"""Exact computations with Leibniz triple systems over the rationals.

The main entry points:

* :mod:`leibts.algebra` -- structure-constant tables and identity checkers
* :mod:`leibts.envelope` -- the universal Leibniz envelope and its involution
* :mod:`leibts.ideals` -- ideals and their envelope companions
* :mod:`leibts.radicals` -- series, radicals, Levi check, theorem suite
* :mod:`leibts.representations` -- representations and modules
* :mod:`leibts.fileformat` and :mod:`leibts.cli` -- text files and the command line
"""

from .algebra import (
    BinaryTable,
    TripleTable,
    ValidationReport,
    check_derived_identities,
    check_leibniz,
    check_leibts,
    check_lie_triple,
    leibts_from_leibniz,
)
from .envelope import Envelope, build_envelope, compute_K, theta
from .errors import (
    InputError,
    LeibtsError,
    ParseError,
    PreconditionError,
    UnsupportedInputError,
    VerificationError,
)
from .fileformat import parse, serialize
from .linalg import Mat, Subspace, span
from .radicals import (
    RadicalBundle,
    kernel_ideal,
    nilpotent_radical,
    run_theorem_suite,
    solvable_radical,
)
from .representations import RepTriple, check_representation

__version__ = "0.1.0"

__all__ = [
    "BinaryTable",
    "Envelope",
    "InputError",
    "LeibtsError",
    "Mat",
    "ParseError",
    "PreconditionError",
    "RadicalBundle",
    "RepTriple",
    "Subspace",
    "TripleTable",
    "UnsupportedInputError",
    "ValidationReport",
    "VerificationError",
    "build_envelope",
    "check_derived_identities",
    "check_leibniz",
    "check_leibts",
    "check_lie_triple",
    "check_representation",
    "compute_K",
    "kernel_ideal",
    "leibts_from_leibniz",
    "nilpotent_radical",
    "parse",
    "run_theorem_suite",
    "serialize",
    "solvable_radical",
    "span",
    "theta",
]
