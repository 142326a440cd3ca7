"""Borel orbits of square-zero matrices in the symplectic nilradical.

Orbits are indexed by symmetric link patterns on the points -n..n.
"""

from .errors import DomainError, ParseError, SqzeroError
from .slp import LinkPattern, SymmetricLinkPattern, enumerate_slp, format_pattern, parse
from .rank import closure_set, covers, hasse, leq, rank_matrix
from .dims import orbit_dim_formula, orbit_dim_oracle
from .normal import classify, normalize, verify_normalization
from .boundary import c_of, d_of, n_of, verify_witness
from .orbital import TwoColumnSDT, lp_of, parse_sdt, format_sdt, sdt_of

__all__ = [
    "DomainError", "ParseError", "SqzeroError",
    "LinkPattern", "SymmetricLinkPattern", "enumerate_slp", "format_pattern", "parse",
    "closure_set", "covers", "hasse", "leq", "rank_matrix",
    "orbit_dim_formula", "orbit_dim_oracle",
    "classify", "normalize", "verify_normalization",
    "c_of", "d_of", "n_of", "verify_witness",
    "TwoColumnSDT", "lp_of", "parse_sdt", "format_sdt", "sdt_of",
]
