"""Words, finite monoids, equational reasoning and permutability checks."""

from .catalog import Identity, IdentitySystem, parse_identity, variety_basis
from .monoid import FiniteMonoid, build_sw, satisfies
from .perm import handle, product_member, relate, run_case
from .words import EMPTY, Letter, ParseError, Word, format_word, parse_word

__all__ = ["EMPTY", "FiniteMonoid", "Identity", "IdentitySystem", "Letter", "ParseError", "Word",
           "build_sw", "format_word", "handle", "parse_identity", "parse_word", "product_member",
           "relate", "run_case", "satisfies", "variety_basis"]
__version__ = "0.1.0"
