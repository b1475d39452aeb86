"""Connection tableau prover for first-order logic.

Pipeline: :mod:`tptp` parses problems, :mod:`clausify` builds the indexed
clause matrix, :mod:`engine` searches for a connection proof,
:mod:`proof` serializes and independently checks the resulting trace, and
:mod:`bench` / :mod:`cli` wrap it all for the command line.
"""

from .clausify import CONJ, DEF, NODEF, POS, Matrix, build_matrix, matrix_from_clauses
from .engine import SearchLimits, SearchOutcome, StrategySet, prove_at_limit, solve
from .proof import ProofTrace, check_proof, parse_trace, serialize_trace
from .tptp import parse_file, parse_problem

__all__ = [
    "CONJ", "DEF", "NODEF", "POS", "Matrix", "build_matrix", "matrix_from_clauses",
    "SearchLimits", "SearchOutcome", "StrategySet", "prove_at_limit", "solve",
    "ProofTrace", "check_proof", "parse_trace", "serialize_trace",
    "parse_file", "parse_problem",
]
