"""
Symmetric group backend.

Permutations are one-line tuples of 1..n.  Generators act on the left:
the word s_{a1} ... s_{ak} is the permutation s_{a1} o ... o s_{ak}, so right
multiplication by s_i swaps the entries in positions i and i+1, and s_i is a
left descent when the value i+1 appears before the value i.
"""
import itertools
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from rtilde.coxeter import CoxeterGroup, Element, Word, type_a_matrix
from rtilde.errors import InvalidPermutationError, PreconditionError
from rtilde.memory import BaseMemoStore

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


def validate_permutation(perm: Sequence[int], n: Optional[int] = None) -> Permutation:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise InvalidPermutationError(f"{perm} is not a permutation of 1..{len(perm)}")
    if n is not None and len(perm) != n:
        raise InvalidPermutationError(f"{perm} has size {len(perm)}, expected {n}")
    return perm


def parse_permutation(text: str) -> Permutation:
    """Parse ``p:4321`` or ``p:3,4,5,6,7,8,9,10,1,2`` (commas once letters exceed 9)."""
    body = text.strip()
    if body.startswith("p:"):
        body = body[2:]
    if not body:
        raise InvalidPermutationError(f"empty permutation {text!r}")
    tokens = body.split(",") if "," in body else list(body)
    try:
        perm = tuple(int(token) for token in tokens)
    except ValueError as e:
        raise InvalidPermutationError(f"invalid permutation {text!r}") from e
    return validate_permutation(perm)


def format_permutation(perm: Sequence[int]) -> str:
    if len(perm) > 9:
        return "p:" + ",".join(str(v) for v in perm)
    return "p:" + "".join(str(v) for v in perm)


def word_to_perm(word: Iterable[int], n: int) -> Permutation:
    """The permutation s_{a1} o ... o s_{ak} in one-line notation."""
    perm = list(range(1, n + 1))
    for a in word:
        perm[a], perm[a + 1] = perm[a + 1], perm[a]
    return tuple(perm)


def perm_to_word(perm: Sequence[int]) -> Word:
    """Lexicographically least reduced word: peel the smallest left descent each time."""
    current = list(perm)
    position = {v: k for k, v in enumerate(current)}
    word = []
    while True:
        for i in range(1, len(current)):
            if position[i + 1] < position[i]:
                break
        else:
            return tuple(word)
        word.append(i - 1)
        # s_i o w exchanges the values i and i+1
        pi, pj = position[i], position[i + 1]
        current[pi], current[pj] = i + 1, i
        position[i], position[i + 1] = pj, pi


def inversions(perm: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


def is_321_avoiding(perm: Sequence[int]) -> bool:
    """No i < j < k with p(i) > p(j) > p(k).

    Equivalently, no reduced word of the permutation contains a factor
    s_i s_{i+1} s_i or s_{i+1} s_i s_{i+1} (the element is fully commutative).
    """
    # each entry needs a larger entry before it and a smaller one after it to be a middle
    running_max = 0
    suffix_min = [0] * len(perm)
    smallest = len(perm) + 1
    for k in range(len(perm) - 1, -1, -1):
        suffix_min[k] = smallest
        smallest = min(smallest, perm[k])
    for k, value in enumerate(perm):
        if running_max > value > suffix_min[k]:
            return False
        running_max = max(running_max, value)
    return True


class SymmetricGroup(CoxeterGroup):
    """S_n with permutation arithmetic; generators s_1..s_{n-1} are 0..n-2."""

    backend = "symmetric"

    def __init__(self, n: int, store: Optional[BaseMemoStore] = None):
        if n < 2:
            raise InvalidPermutationError(f"the symmetric group backend needs n >= 2, got {n}")
        super().__init__(type_a_matrix(n - 1), store)
        self.n = n
        self._words: Dict[Permutation, Word] = {}

    @property
    def name(self) -> str:
        return f"S{self.n}"

    def _element(self, word: Word) -> Element:
        return Element(word, backend=self.backend, one_line=word_to_perm(word, self.n))

    def _from_perm(self, perm: Permutation) -> Element:
        word = self._words.get(perm)
        if word is None:
            word = perm_to_word(perm)
            self._words[perm] = word
        return Element(word, backend=self.backend, one_line=perm)

    def _from_reduced(self, reduced: Word) -> Element:
        return self._from_perm(word_to_perm(reduced, self.n))

    def perm_to_element(self, perm: Sequence[int]) -> Element:
        return self._from_perm(validate_permutation(perm, self.n))

    def element_to_perm(self, u: Element) -> Permutation:
        if u.one_line is not None and len(u.one_line) == self.n:
            return u.one_line
        return word_to_perm(u.word, self.n)

    def canonicalize(self, word: Iterable[int]) -> Element:
        word = self.validate_word(word)
        return self._from_perm(word_to_perm(word, self.n))

    def multiply(self, u: Element, s: int) -> Element:
        perm = list(self.element_to_perm(u))
        perm[s], perm[s + 1] = perm[s + 1], perm[s]
        return self._from_perm(tuple(perm))

    def is_descent(self, u: Element, s: int) -> bool:
        perm = self.element_to_perm(u)
        return perm[s] > perm[s + 1]

    def inverse(self, u: Element) -> Element:
        perm = self.element_to_perm(u)
        inv = [0] * self.n
        for k, value in enumerate(perm):
            inv[value - 1] = k + 1
        return self._from_perm(tuple(inv))

    def elements(self, max_length: Optional[int] = None) -> List[Element]:
        result = [self._from_perm(p) for p in itertools.permutations(range(1, self.n + 1))]
        if max_length is not None:
            result = [x for x in result if x.length <= max_length]
        return sorted(result, key=lambda x: (x.length, x.word))

    # fully commutative elements

    def is_fully_commutative(self, u: Element) -> bool:
        return is_321_avoiding(self.element_to_perm(u))

    def letter_multiplicities(self, v: Element) -> Dict[int, int]:
        """n_v(i) for every generator; only defined for 321-avoiding elements."""
        if not self.is_fully_commutative(v):
            raise PreconditionError(
                f"{v} is not 321-avoiding, so letter multiplicities depend on the reduced word"
            )
        counts = {s: 0 for s in range(self.rank)}
        for s in v.word:
            counts[s] += 1
        return counts

    def is_2_repeating(self, v: Element) -> bool:
        return all(count <= 2 for count in self.letter_multiplicities(v).values())

    def is_321_avoiding_2_repeating(self, v: Element) -> bool:
        return self.is_fully_commutative(v) and self.is_2_repeating(v)


def build_group(matrix, backend: str = "auto", store: Optional[BaseMemoStore] = None) -> CoxeterGroup:
    """Pick a backend for a matrix: permutations for type A unless 'generic' is forced."""
    if backend not in ("auto", "generic", "symmetric"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "symmetric" or (backend == "auto" and matrix.is_type_a()):
        if not matrix.is_type_a():
            raise InvalidPermutationError(f"{matrix.name} is not of type A")
        return SymmetricGroup(matrix.rank + 1, store=store)
    return CoxeterGroup(matrix, store=store)
