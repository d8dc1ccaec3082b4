"""
The permutation v_n = 3 4 ... n 1 2, its reduced word s2 s1 s3 s2 ... s_{n-1} s_{n-2},
and the light leaves of that word with top e, indexed by CLR words.
"""
import itertools
import logging
from typing import List, Tuple

from rtilde.closedforms.configurations import PointConfiguration
from rtilde.closedforms.fibonacci import FibPath, Step
from rtilde.coxeter import CoxeterGroup, Element, Word
from rtilde.errors import PreconditionError
from rtilde.poly import IntPolynomial, fibonacci

logger = logging.getLogger(__name__)


def _require(n: int) -> None:
    if n < 3:
        raise PreconditionError(f"v_n is defined for n >= 3, got {n}")


def pagliacci_word(n: int) -> Word:
    _require(n)
    word: List[int] = []
    for k in range(2, n):
        word.extend([k - 1, k - 2])
    return tuple(word)


def pagliacci_permutation(n: int) -> Tuple[int, ...]:
    _require(n)
    return tuple(range(3, n + 1)) + (1, 2)


def pagliacci_element(group: CoxeterGroup, n: int) -> Element:
    word = pagliacci_word(n)
    if n - 1 > group.rank:
        raise PreconditionError(f"v_{n} does not live in {group.name}")
    return group.canonicalize(word)


def pagliacci_rtilde(n: int) -> IntPolynomial:
    """R-tilde(e, v_n) = t^(n-2) F_{n-2}."""
    _require(n)
    return fibonacci(n - 2).scale_by_t_power(n - 2)


# CLR words: L and R pick a side, C is the forced step after an L

def clr_words(n: int) -> List[str]:
    """All valid CLR words of length n - 3, in lexicographic order."""
    _require(n)
    candidates = ("".join(letters) for letters in itertools.product("CLR", repeat=n - 3))
    return [word for word in candidates if is_clr_word(word)]


def is_clr_word(word: str) -> bool:
    if any(letter not in "CLR" for letter in word):
        return False
    if word and word[0] == "C":
        return False
    for k, letter in enumerate(word):
        if letter == "L" and k + 1 < len(word) and word[k + 1] != "C":
            return False
        if letter == "C" and (k == 0 or word[k - 1] != "L"):
            return False
    return True


def clr_to_path(word: str) -> FibPath:
    if not is_clr_word(word):
        raise PreconditionError(f"{word!r} is not a CLR word")
    return FibPath(tuple(Step(letter) for letter in word))


def clr_degree(word: str) -> int:
    """Degree of the light leaf indexed by a CLR word: 2 + 2 (length - #L)."""
    path = clr_to_path(word)
    return 2 + 2 * (len(path.steps) - path.lam)


def clr_polynomial(n: int) -> IntPolynomial:
    return IntPolynomial.from_exponents(clr_degree(word) for word in clr_words(n))


def pagliacci_configuration(n: int) -> PointConfiguration:
    """Admissible configuration whose word is the reduced word of v_n."""
    _require(n)
    points = [(0, 0)]
    for k in range(2, n - 1):
        points.extend([(k - 3, 1 - k), (k - 1, 1 - k)])
    points.append((n - 4, 2 - n))
    return PointConfiguration(frozenset(points))