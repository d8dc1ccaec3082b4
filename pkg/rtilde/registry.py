"""
Named computation registries.

``group_registry`` resolves group shorthands (A3, I2(5), Sym4) through regex
patterns, ``method_registry`` holds the four ways ``compute`` can obtain an
R-tilde polynomial, and ``closed_registry`` the closed-formula families of the
``closed`` command.
"""
import inspect
import logging
import re
from typing import Any, Callable, Dict, List, Optional, Tuple

from rtilde.closedforms.configurations import PointConfiguration, config_to_element, general_rtilde_e
from rtilde.closedforms.fibonacci import fibonacci_from_paths, modified_fibonacci_from_paths, power_word_rtilde
from rtilde.closedforms.pagliacci import clr_degree, clr_words, pagliacci_rtilde
from rtilde.closedforms.ud_words import is_ud_word, transposition_rtilde, ud_rtilde
from rtilde.coxeter import CoxeterGroup, CoxeterMatrix, Element, Word, dihedral_matrix, type_a_matrix
from rtilde.errors import CoxeterMatrixError, PreconditionError
from rtilde.hecke import hecke_rtilde, rtilde_recursive
from rtilde.lightleaves import diagrammatic_rtilde, word_rtilde_recursive
from rtilde.poly import IntPolynomial

logger = logging.getLogger(__name__)


class MethodRegistry:
    def __init__(self, name: str):
        self.name = name
        self.functions: Dict[str, Dict[str, Any]] = {}
        self.patterns: Dict[str, List[re.Pattern]] = {}

    def register(self, func: Optional[Callable] = None, *, name: Optional[str] = None):
        """Register a function under its own name or an explicit one."""
        def decorator(f: Callable) -> Callable:
            key = name or f.__name__
            self.functions[key] = {
                "function": f,
                "description": inspect.getdoc(f) or "",
            }
            return f

        if func is not None:
            return decorator(func)
        return decorator

    def register_patterns(self, function_name: str, patterns: List[str]) -> None:
        """Register regex patterns whose named groups become the function's arguments"""
        if function_name not in self.functions:
            raise ValueError(f"Function {function_name} not registered in {self.name}")
        compiled = [re.compile(pattern, re.IGNORECASE) for pattern in patterns]
        self.patterns[function_name] = compiled
        logger.debug(f"Registered {len(compiled)} patterns for {self.name}.{function_name}")

    def find_pattern_handler(self, text: str) -> Optional[Tuple[str, Dict[str, Any]]]:
        """Find the function whose pattern matches the whole text"""
        for function_name, patterns in self.patterns.items():
            for pattern in patterns:
                match = pattern.fullmatch(text.strip())
                if match:
                    return function_name, match.groupdict()
        return None

    def names(self) -> List[str]:
        return list(self.functions)

    def description(self, function_name: str) -> str:
        return self.functions[function_name]["description"]

    def call(self, function_name: str, **kwargs: Any) -> Any:
        """Call a registered function with keyword arguments"""
        if function_name not in self.functions:
            raise ValueError(f"Function {function_name} not registered in {self.name}")
        return self.functions[function_name]["function"](**kwargs)


# group shorthands

group_registry = MethodRegistry("groups")


@group_registry.register
def type_a(n: str) -> CoxeterMatrix:
    """A_n: the symmetric group on n + 1 letters."""
    return type_a_matrix(int(n))


@group_registry.register
def dihedral(m: str) -> CoxeterMatrix:
    """I2(m): the dihedral group of order 2m; I2(inf) is infinite."""
    return dihedral_matrix(None if m.lower() in ("inf", "0") else int(m))


@group_registry.register
def symmetric(n: str) -> CoxeterMatrix:
    """Sym_n: the symmetric group on n letters."""
    if int(n) < 2:
        raise CoxeterMatrixError(f"Sym{n} has no generators")
    return type_a_matrix(int(n) - 1)


group_registry.register_patterns("type_a", [r"A(?P<n>\d+)"])
group_registry.register_patterns("dihedral", [r"I2\((?P<m>\d+|inf)\)", r"I2_(?P<m>\d+|inf)"])
group_registry.register_patterns("symmetric", [r"Sym(?P<n>\d+)", r"S_(?P<n>\d+)"])


def resolve_group_name(text: str) -> CoxeterMatrix:
    handler = group_registry.find_pattern_handler(text)
    if handler is None:
        raise CoxeterMatrixError(f"unknown group {text!r}; use A<n>, I2(<m>) or Sym<n>")
    function_name, arguments = handler
    return group_registry.call(function_name, **arguments)


# computation methods: (group, u, word) -> polynomial, or None when not applicable

method_registry = MethodRegistry("methods")


@method_registry.register
def diagrammatic(group: CoxeterGroup, u: Element, word: Word) -> Optional[IntPolynomial]:
    """Sum of t^deg over the light leaves of the word with top u."""
    return diagrammatic_rtilde(group, u, word)


@method_registry.register
def recursive(group: CoxeterGroup, u: Element, word: Word) -> Optional[IntPolynomial]:
    """Descent recursion on the element, or on the word when it is not reduced."""
    if group.is_reduced(word):
        return rtilde_recursive(group, u, group.canonicalize(word))
    return word_rtilde_recursive(group, u, word)


@method_registry.register
def hecke(group: CoxeterGroup, u: Element, word: Word) -> Optional[IntPolynomial]:
    """Coefficient extraction from the inverse of a standard basis element."""
    if not group.is_reduced(word):
        return None
    return hecke_rtilde(group, u, group.canonicalize(word))


@method_registry.register
def closed(group: CoxeterGroup, u: Element, word: Word) -> Optional[IntPolynomial]:
    """The first applicable closed formula: power word, UD word, or 321-avoiding 2-repeating v at u = e."""
    if word and len(set(word)) == 1:
        return power_word_rtilde(group, u, len(word), word[0])
    if not group.matrix.is_type_a():
        return None
    if is_ud_word(word) is not None:
        return ud_rtilde(group, u, word)[0]
    if u.is_identity() and group.is_reduced(word):
        v = group.canonicalize(word)
        check = getattr(group, "is_321_avoiding_2_repeating", None)
        if check is not None and group.is_fully_commutative(v) and check(v):
            return general_rtilde_e(group, v)
    return None


# closed-formula families for the closed command; each returns output lines

closed_registry = MethodRegistry("closed")


def _need(value: Any, flag: str, family: str) -> Any:
    if value is None:
        raise PreconditionError(f"closed {family} needs {flag}")
    return value


@closed_registry.register(name="ud")
def closed_ud(group: CoxeterGroup, u: Optional[Element] = None, word: Optional[Word] = None, **_: Any) -> List[str]:
    """t^c (t^2+1)^d over an up-and-down word, with the case of every letter."""
    word = _need(word, "--v", "ud")
    poly, table = ud_rtilde(group, u or group.identity(), word)
    return [str(poly), f"cases: {table.format() or '-'}", f"c={table.c} d2={table.d2_count}"]


@closed_registry.register(name="power")
def closed_power(group: CoxeterGroup, u: Optional[Element] = None, n: Optional[int] = None, s: int = 1, **_: Any) -> List[str]:
    """F_n at u = e and F_{n-1} at u = s over the word s^n."""
    n = _need(n, "--n", "power")
    return [str(power_word_rtilde(group, u or group.identity(), n, s - 1))]


@closed_registry.register(name="fibonacci")
def closed_fibonacci(n: Optional[int] = None, **_: Any) -> List[str]:
    """F_n and the modified Fibonacci polynomial, both summed over Fibonacci tree paths."""
    n = _need(n, "--n", "fibonacci")
    return [f"F_{n} = {fibonacci_from_paths(n)}", f"modified F_{n} = {modified_fibonacci_from_paths(n)}"]


@closed_registry.register(name="pagliacci")
def closed_pagliacci(n: Optional[int] = None, **_: Any) -> List[str]:
    """R-tilde(e, v_n) = t^(n-2) F_{n-2} for v_n = 3 4 ... n 1 2."""
    return [str(pagliacci_rtilde(_need(n, "--n", "pagliacci")))]


@closed_registry.register(name="clr")
def closed_clr(n: Optional[int] = None, **_: Any) -> List[str]:
    """The CLR words indexing the light leaves of v_n with top e, with their degrees."""
    n = _need(n, "--n", "clr")
    return [f"{word or '-'} deg={clr_degree(word)}" for word in clr_words(n)]


@closed_registry.register(name="general")
def closed_general(
    group: CoxeterGroup,
    v: Optional[Element] = None,
    config: Optional[PointConfiguration] = None,
    **_: Any,
) -> List[str]:
    """R-tilde(e, v) for 321-avoiding 2-repeating v, given as an element or a point configuration."""
    if config is not None:
        v = config_to_element(group, config)
    v = _need(v, "--v or --config", "general")
    return [str(general_rtilde_e(group, v))]


@closed_registry.register(name="transposition")
def closed_transposition(
    group: CoxeterGroup,
    u: Optional[Element] = None,
    v: Optional[Element] = None,
    a: Optional[int] = None,
    b: Optional[int] = None,
    **_: Any,
) -> List[str]:
    """R-tilde(u, v) for u <= v <= (a, b) through a UD reduced expression of v."""
    poly, table = transposition_rtilde(
        group,
        u or group.identity(),
        _need(v, "--v", "transposition"),
        _need(a, "--a", "transposition"),
        _need(b, "--b", "transposition"),
    )
    return [str(poly), f"cases: {table.format() or '-'}"]
