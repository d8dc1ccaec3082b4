"""
R-tilde polynomials over "up and down" words in type A.

A UD word is an increasing run of letters, a unique maximal letter (the peak)
and a decreasing run: s_{i1} < ... < s_{ir} < s_t > s_{j1} > ... > s_{jq}.
Every letter occurs once or twice.  The light leaves of such a word never need
a braid move of order three, so each letter contributes independently and the
polynomial is t^c (t^2 + 1)^d.
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple, Union

from rtilde.coxeter import CoxeterGroup, Element, Word, format_word
from rtilde.errors import MethodDisagreementError, PreconditionError
from rtilde.poly import IntPolynomial

logger = logging.getLogger(__name__)

T_SQUARED_PLUS_ONE = IntPolynomial((1, 0, 1))


@dataclass(frozen=True)
class UDWord:
    ascending: Word
    peak: Optional[int]
    descending: Word

    @property
    def word(self) -> Word:
        if self.peak is None:
            return ()
        return self.ascending + (self.peak,) + self.descending

    def __len__(self) -> int:
        return len(self.word)

    def multiplicity(self, letter: int) -> int:
        return self.word.count(letter)

    def occurrences(self) -> Dict[int, List[int]]:
        """Positions of each letter in the word, left to right."""
        found: Dict[int, List[int]] = {}
        for position, letter in enumerate(self.word):
            found.setdefault(letter, []).append(position)
        return found


def is_ud_word(word: Sequence[int]) -> Optional[UDWord]:
    """Split a word into ascending run, peak and descending run; None if it is not UD."""
    word = tuple(word)
    if not word:
        return UDWord((), None, ())
    peak = max(word)
    if word.count(peak) != 1:
        return None
    index = word.index(peak)
    ascending, descending = word[:index], word[index + 1:]
    if any(a >= b for a, b in zip(ascending, ascending[1:])):
        return None
    if any(a <= b for a, b in zip(descending, descending[1:])):
        return None
    return UDWord(ascending, peak, descending)


class CaseLabel(str, Enum):
    A1 = "A1"
    A2 = "A2"
    B1 = "B1"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    D1 = "D1"
    D2 = "D2"


EXPONENTS = {
    CaseLabel.A1: 1,
    CaseLabel.A2: 0,
    CaseLabel.B1: 0,
    CaseLabel.C1: 1,
    CaseLabel.C2: 1,
    CaseLabel.C3: 1,
    CaseLabel.D1: 2,
}


@dataclass(frozen=True)
class CaseTable:
    """Per-letter cases, letters in decreasing order."""
    assignments: Tuple[Tuple[int, CaseLabel], ...] = ()

    @property
    def c(self) -> int:
        return sum(EXPONENTS.get(label, 0) for _, label in self.assignments)

    @property
    def d2_count(self) -> int:
        return sum(1 for _, label in self.assignments if label is CaseLabel.D2)

    def as_dict(self) -> Dict[int, CaseLabel]:
        return dict(self.assignments)

    def polynomial(self) -> IntPolynomial:
        return T_SQUARED_PLUS_ONE ** self.d2_count * IntPolynomial.monomial(self.c)

    def format(self) -> str:
        return " ".join(f"s{letter + 1}:{label.value}" for letter, label in self.assignments)


# How a letter's occurrences survive in the top sequence
_NONE, _SINGLE, _ASC, _DESC, _BOTH = "none", "single", "asc", "desc", "both"


def find_ud_subword(group: CoxeterGroup, ud: UDWord, u: Element) -> Optional[Tuple[Word, Dict[int, str]]]:
    """A subword of ``ud`` that is a reduced expression of u, with the kept occurrences per letter.

    Letters outside the support of u are erased.  A letter of u occurring twice
    in the word keeps its second occurrence when s_{i+1} is not in u; otherwise
    one or both occurrences are kept, and canonicalize decides which choice
    spells u.
    """
    support = set(u.word)
    occurrences = ud.occurrences()
    if not support <= set(occurrences):
        return None

    letters = sorted(occurrences, reverse=True)
    options: List[List[Tuple[str, Tuple[int, ...]]]] = []
    for letter in letters:
        positions = occurrences[letter]
        if letter not in support:
            options.append([(_NONE, ())])
        elif len(positions) == 1:
            options.append([(_SINGLE, (positions[0],))])
        elif letter + 1 not in support:
            options.append([(_DESC, (positions[1],))])
        else:
            options.append([
                (_ASC, (positions[0],)),
                (_DESC, (positions[1],)),
                (_BOTH, tuple(positions)),
            ])

    matches = []
    for choice in itertools.product(*options):
        kept = sorted(p for _, positions in choice for p in positions)
        if len(kept) != u.length:
            continue
        subword = tuple(ud.word[p] for p in kept)
        if group.canonicalize(subword) == u:
            matches.append((subword, {letter: tag for letter, (tag, _) in zip(letters, choice)}))
    if not matches:
        return None
    if len(matches) > 1:
        logger.warning(f"{len(matches)} subwords of {format_word(ud.word)} spell {u}; using the first")
    return matches[0]


def _classify(letter: int, count: int, tag: str, support: set) -> CaseLabel:
    if count == 1:
        return CaseLabel.A2 if tag == _SINGLE else CaseLabel.A1
    if tag == _BOTH:
        return CaseLabel.B1
    if tag == _ASC:
        return CaseLabel.C1
    if tag == _DESC:
        return CaseLabel.C2 if letter + 1 in support else CaseLabel.C3
    return CaseLabel.D1 if letter + 1 in support else CaseLabel.D2


def ud_rtilde(group: CoxeterGroup, u: Element, word: Union[UDWord, Sequence[int]]) -> Tuple[IntPolynomial, CaseTable]:
    """The polynomial t^c (t^2 + 1)^d over a UD word, with the case of every letter.

    Returns the zero polynomial and an empty table when no light leaf has top u.
    """
    if not group.matrix.is_type_a():
        raise PreconditionError(f"UD-word formulas are stated for symmetric groups, not {group.name}")
    ud = word if isinstance(word, UDWord) else is_ud_word(word)
    if ud is None:
        raise PreconditionError(f"{format_word(tuple(word))} is not an up-and-down word")
    group.validate_word(ud.word)

    found = find_ud_subword(group, ud, u)
    if found is None:
        logger.debug(f"No light leaf of {format_word(ud.word)} has top {u}")
        return IntPolynomial.zero(), CaseTable()

    _, tags = found
    support = set(u.word)
    occurrences = ud.occurrences()
    table = CaseTable(tuple(
        (letter, _classify(letter, len(occurrences[letter]), tags[letter], support))
        for letter in sorted(occurrences, reverse=True)
    ))
    expected_degree = len(ud) - u.length
    if table.c + 2 * table.d2_count != expected_degree:
        logger.error(f"Case table {table.format()} does not account for l(v) - l(u) = {expected_degree}")
        raise MethodDisagreementError(
            f"case table of u={u} over {format_word(ud.word)} has the wrong degree",
            {"cases": table.format(), "degree": table.c + 2 * table.d2_count, "expected": expected_degree},
        )
    return table.polynomial(), table


def transposition_word(a: int, b: int) -> Word:
    """Reduced UD word s_a s_{a+1} ... s_{b-1} ... s_{a+1} s_a of the transposition (a, b), 1-based a < b."""
    if not 1 <= a < b:
        raise PreconditionError(f"a transposition needs 1 <= a < b, got ({a}, {b})")
    up = tuple(range(a - 1, b - 1))
    return up + tuple(reversed(up[:-1]))


def transposition_rtilde(
    group: CoxeterGroup,
    u: Element,
    v: Element,
    a: int,
    b: int,
) -> Tuple[IntPolynomial, CaseTable]:
    """R-tilde for u <= v <= (a, b), through a UD reduced expression of v."""
    word = transposition_word(a, b)
    if b - 1 > group.rank:
        raise PreconditionError(f"the transposition ({a}, {b}) is not in {group.name}")
    top = group.canonicalize(word)
    if not group.bruhat_leq(v, top):
        raise PreconditionError(f"{v} is not below the transposition ({a}, {b})")
    found = find_ud_subword(group, is_ud_word(word), v)
    if found is None:
        raise PreconditionError(f"no UD reduced expression of {v} inside {format_word(word)}")
    logger.debug(f"UD expression of {v} below ({a}, {b}): {format_word(found[0])}")
    return ud_rtilde(group, u, found[0])
