"""Directed Oberwolfach factorizations OP*(t1, t2) with t1 in {4, 6}.

The main entry points are :func:`dirop.solver.solve`, which returns a verified
certificate, and :func:`dirop.verify.verify_factorization`, the independent
checker.
"""

from .digraph import Arc, Vertex
from .solver import Certificate, SolveRequest, normalize, solve
from .verify import VerifyOutcome, oracle_search, verify_factorization

__version__ = "0.1.0"

__all__ = ["Arc", "Vertex", "Certificate", "SolveRequest", "normalize", "solve",
           "VerifyOutcome", "oracle_search", "verify_factorization", "__version__"]
