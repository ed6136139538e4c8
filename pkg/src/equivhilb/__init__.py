"""Exact equivariant Hilbert series of hierarchical-model filtrations via finite automata."""

from .automaton import Dfa, accepts, build_automaton, minimize, to_dot
from .language import Tau, Zeta, enumerate_Ln, is_in_L, parse_word
from .model import ModelSpec, hilbert_series, parse_model, reduce, validate
from .poly import MultiPoly, VarSet, poly_gcd
from .ratfunc import RatFunc, coeff_extract, ratfunc_normalize, series_expand
from .transfer import equiv_hilbert, generating_function

__all__ = [
    "Dfa", "accepts", "build_automaton", "minimize", "to_dot",
    "Tau", "Zeta", "enumerate_Ln", "is_in_L", "parse_word",
    "ModelSpec", "hilbert_series", "parse_model", "reduce", "validate",
    "MultiPoly", "VarSet", "poly_gcd",
    "RatFunc", "coeff_extract", "ratfunc_normalize", "series_expand",
    "equiv_hilbert", "generating_function",
]
