"""Exact Hankel determinants of shifted central binomial sequences.

Modules: exactmat (exact linear algebra), structured (matrix families),
lucas (Lucas and characteristic polynomials), favard (J-fraction data),
proof_engine (closed forms and the mu-induction lemmas), conjecture
(d' experiments), claims and cli (verification sweeps).
"""

from .exactmat import ExactMatrix, det_bareiss
from .proof_engine import closed_form, d_r_direct

__all__ = ["ExactMatrix", "closed_form", "d_r_direct", "det_bareiss"]
__version__ = "0.1.0"
