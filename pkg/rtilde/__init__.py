"""
R-tilde polynomials of Coxeter systems: descent recursion, Hecke algebra
inversion, light-leaf enumeration with Soergel graph rendering, and the
closed formulas of type A.
"""
from rtilde.coxeter import CoxeterGroup, CoxeterMatrix, Element, format_word, parse_word
from rtilde.errors import RTildeError
from rtilde.hecke import hecke_rtilde, rtilde_recursive
from rtilde.lightleaves import LightLeaf, diagrammatic_rtilde, iter_leaves, leaves
from rtilde.poly import IntPolynomial, LaurentPolynomial
from rtilde.symmetric import SymmetricGroup, build_group

__version__ = "1.0.0"

__all__ = [
    "CoxeterGroup", "CoxeterMatrix", "Element", "IntPolynomial", "LaurentPolynomial", "LightLeaf",
    "RTildeError", "SymmetricGroup", "build_group", "diagrammatic_rtilde", "format_word",
    "hecke_rtilde", "iter_leaves", "leaves", "parse_word", "rtilde_recursive",
]
