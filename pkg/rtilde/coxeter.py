"""
Coxeter systems: matrices, canonical elements, braid moves and the generic backend.

Generators are 0-based internally.  A word is a tuple of generator indices.
Every element is represented by its canonical word: the lexicographically least
reduced expression.  The generic backend solves the word problem with Tits'
algorithm (braid-orbit search plus deletion of ``ss``), which works for every
Coxeter matrix including infinite entries.
"""
import hashlib
import logging
import re
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

from rtilde.errors import CoxeterMatrixError, InvalidWordError, NotADescentError
from rtilde.memory import BaseMemoStore
from rtilde.stores import get_memo_store

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of orders m_st; None encodes infinity."""
    entries: Tuple[Tuple[Optional[int], ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n == 0:
            raise CoxeterMatrixError("a Coxeter matrix needs at least one generator")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise CoxeterMatrixError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, m in enumerate(row):
                if m != rows[j][i]:
                    raise CoxeterMatrixError(f"matrix is not symmetric at ({i + 1}, {j + 1})")
                if i == j and m != 1:
                    raise CoxeterMatrixError(f"diagonal entry ({i + 1}, {i + 1}) must be 1")
                if i != j and m is not None and m < 2:
                    raise CoxeterMatrixError(f"entry ({i + 1}, {j + 1}) must be >= 2 or infinity")

    @property
    def rank(self) -> int:
        return len(self.entries)

    def m(self, s: int, t: int) -> Optional[int]:
        return self.entries[s][t]

    def is_type_a(self) -> bool:
        """True for the Coxeter matrix of a symmetric group with the standard ordering."""
        for i in range(self.rank):
            for j in range(self.rank):
                if i == j:
                    continue
                expected = 3 if abs(i - j) == 1 else 2
                if self.entries[i][j] != expected:
                    return False
        return True

    @property
    def is_finite(self) -> Optional[bool]:
        """True for the named finite families, None when unknown."""
        if self.is_type_a():
            return True
        if self.rank == 2 and self.entries[0][1] is not None:
            return True
        if self.rank == 2:
            return False
        return None

    def fingerprint(self) -> str:
        text = ";".join(",".join("0" if m is None else str(m) for m in row) for row in self.entries)
        return hashlib.sha1(text.encode("utf-8")).hexdigest()[:16]

    def to_text(self) -> str:
        lines = [f"rank {self.rank}"]
        for row in self.entries:
            lines.append(" ".join("0" if m is None else str(m) for m in row))
        return "\n".join(lines) + "\n"


def type_a_matrix(n: int) -> CoxeterMatrix:
    """Coxeter matrix of A_n, i.e. of the symmetric group on n + 1 letters."""
    if n < 1:
        raise CoxeterMatrixError(f"A_n needs n >= 1, got {n}")
    entries = tuple(
        tuple(1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n))
        for i in range(n)
    )
    return CoxeterMatrix(entries, name=f"A{n}")


def dihedral_matrix(m: Optional[int]) -> CoxeterMatrix:
    """Coxeter matrix of I_2(m); m None is the infinite dihedral group."""
    if m is not None and m < 2:
        raise CoxeterMatrixError(f"I2(m) needs m >= 2, got {m}")
    label = "inf" if m is None else str(m)
    return CoxeterMatrix(((1, m), (m, 1)), name=f"I2({label})")


def parse_matrix_text(text: str) -> CoxeterMatrix:
    """Parse the plain-text matrix format: ``rank N`` then N rows, 0 meaning infinity."""
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise CoxeterMatrixError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or header[0].lower() != "rank":
        raise CoxeterMatrixError(f"expected 'rank N' on the first line, got {lines[0]!r}")
    try:
        rank = int(header[1])
        rows = [[int(token) for token in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise CoxeterMatrixError(f"non-integer entry in matrix file: {e}") from e
    if len(rows) != rank:
        raise CoxeterMatrixError(f"expected {rank} rows, got {len(rows)}")
    entries = tuple(tuple(None if m == 0 else m for m in row) for row in rows)
    return CoxeterMatrix(entries, name=f"matrix(rank {rank})")


def read_matrix_file(path: Union[str, Path]) -> CoxeterMatrix:
    return parse_matrix_text(Path(path).read_text(encoding="utf-8"))


def parse_word(text: str, rank: Optional[int] = None) -> Word:
    """Parse whitespace (or comma) separated 1-based generator indices; ``e`` is the empty word."""
    stripped = text.strip()
    if stripped in ("", "e"):
        return ()
    tokens = re.split(r"[\s,]+", stripped)
    word = []
    for token in tokens:
        token = token[1:] if token.startswith("s") else token
        if not token.isdigit():
            raise InvalidWordError(f"invalid generator {token!r} in word {text!r}")
        letter = int(token) - 1
        if letter < 0 or (rank is not None and letter >= rank):
            raise InvalidWordError(f"generator s{letter + 1} out of range for rank {rank}")
        word.append(letter)
    return tuple(word)


def format_word(word: Sequence[int], compact: bool = True) -> str:
    """Render a word 1-based: ``s1s2s1`` (compact) or ``1 2 1``; the empty word is ``e``."""
    if not word:
        return "e"
    if compact:
        return "".join(f"s{s + 1}" for s in word)
    return " ".join(str(s + 1) for s in word)


@dataclass(frozen=True)
class Element:
    """A group element, identified by its canonical (lex-least reduced) word."""
    word: Word
    backend: str = field(default="generic", compare=False)
    one_line: Optional[Tuple[int, ...]] = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __str__(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class BraidMove:
    """Replace the alternating factor s t s ... (m letters) at ``position`` by t s t ..."""
    position: int
    s: int
    t: int
    m: int

    def apply(self, word: Word) -> Word:
        end = self.position + self.m
        expected = tuple(self.s if k % 2 == 0 else self.t for k in range(self.m))
        if word[self.position:end] != expected:
            raise ValueError(f"braid move {self} does not match {format_word(word)}")
        replacement = tuple(self.t if k % 2 == 0 else self.s for k in range(self.m))
        return word[:self.position] + replacement + word[end:]


def apply_plan(word: Word, plan: Iterable[BraidMove]) -> Word:
    for move in plan:
        word = move.apply(word)
    return word


# A braid plan policy returns moves turning a reduced word into one ending in s
PlanPolicy = Callable[["CoxeterGroup", Word, int], Tuple[BraidMove, ...]]


class CoxeterGroup:
    """Generic Coxeter group backend."""

    backend = "generic"

    def __init__(self, matrix: CoxeterMatrix, store: Optional[BaseMemoStore] = None):
        self.matrix = matrix
        self.rank = matrix.rank
        self._store = store if store is not None else get_memo_store(f"canon:{matrix.fingerprint()}")
        self._orbits: Dict[Word, FrozenSet[Word]] = {}
        self._canonical_of: Dict[Word, Word] = {}
        self._products: Dict[Tuple[Word, int], Word] = {}
        self._plans: Dict[Tuple[Word, int], Tuple[BraidMove, ...]] = {}
        self._bruhat: Dict[Tuple[Word, Word], bool] = {}

    @property
    def name(self) -> str:
        return self.matrix.name or f"rank {self.rank}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name})"

    # words and elements

    def validate_word(self, word: Iterable[int]) -> Word:
        word = tuple(word)
        for s in word:
            if not isinstance(s, int) or s < 0 or s >= self.rank:
                raise InvalidWordError(f"letter {s!r} out of range for rank {self.rank}")
        return word

    def identity(self) -> Element:
        return self._element(())

    def generator(self, s: int) -> Element:
        return self.canonicalize((s,))

    def _element(self, word: Word) -> Element:
        return Element(word, backend=self.backend)

    def canonicalize(self, word: Iterable[int]) -> Element:
        """Return the element represented by an arbitrary word."""
        word = self.validate_word(word)
        key = ",".join(map(str, word))
        cached = self._store.get(key)
        if cached is not None:
            return self._element(tuple(cached))
        x = self.identity()
        for s in word:
            x = self.multiply(x, s)
        self._store.set(key, list(x.word))
        return x

    def element(self, word: Iterable[int]) -> Element:
        return self.canonicalize(word)

    def is_reduced(self, word: Iterable[int]) -> bool:
        word = self.validate_word(word)
        return self.canonicalize(word).length == len(word)

    def length(self, u: Element) -> int:
        return u.length

    # braid moves and reduced expressions

    def braid_moves(self, word: Word) -> Iterator[BraidMove]:
        """All braid moves applicable to a word, in order of position."""
        for position in range(len(word) - 1):
            s, t = word[position], word[position + 1]
            if s == t:
                continue
            m = self.matrix.m(s, t)
            if m is None or position + m > len(word):
                continue
            if all(word[position + k] == (s if k % 2 == 0 else t) for k in range(m)):
                yield BraidMove(position, s, t, m)

    def _orbit(self, reduced: Word) -> FrozenSet[Word]:
        canonical = self._canonical_of.get(reduced)
        if canonical is not None:
            return self._orbits[canonical]
        seen: Set[Word] = {reduced}
        queue = deque([reduced])
        while queue:
            current = queue.popleft()
            for move in self.braid_moves(current):
                nxt = move.apply(current)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        orbit = frozenset(seen)
        canonical = min(orbit)
        self._orbits[canonical] = orbit
        for w in orbit:
            self._canonical_of[w] = canonical
        return orbit

    def _from_reduced(self, reduced: Word) -> Element:
        self._orbit(reduced)
        return self._element(self._canonical_of[reduced])

    def reduced_expressions(self, u: Element) -> FrozenSet[Word]:
        """Every reduced word of u (braid-move closure of its canonical word)."""
        return self._orbit(u.word)

    def multiply(self, u: Element, s: int) -> Element:
        """Right multiplication u * s."""
        key = (u.word, s)
        cached = self._products.get(key)
        if cached is not None:
            return self._element(cached)
        result = None
        for w in sorted(self._orbit(u.word)):
            if w and w[-1] == s:
                result = self._from_reduced(w[:-1])
                break
        if result is None:
            result = self._from_reduced(u.word + (s,))
        self._products[key] = result.word
        return result

    def left_multiply(self, s: int, u: Element) -> Element:
        return self.inverse(self.multiply(self.inverse(u), s))

    def inverse(self, u: Element) -> Element:
        return self.canonicalize(tuple(reversed(u.word)))

    def is_descent(self, u: Element, s: int) -> bool:
        """True iff l(us) < l(u)."""
        return self.multiply(u, s).length < u.length

    def right_descents(self, u: Element) -> Tuple[int, ...]:
        return tuple(s for s in range(self.rank) if self.is_descent(u, s))

    # braid plans

    def braid_plan(self, word: Iterable[int], s: int) -> Tuple[BraidMove, ...]:
        """Shortest braid-move sequence turning a reduced word into one ending in s.

        Among shortest plans the lexicographically least sequence of (m, position)
        keys wins, so commutations are preferred over higher braid relations.
        """
        word = self.validate_word(word)
        key = (word, s)
        cached = self._plans.get(key)
        if cached is not None:
            return cached
        if word and word[-1] == s:
            self._plans[key] = ()
            return ()
        if not self.is_descent(self.canonicalize(word), s):
            raise NotADescentError(f"s{s + 1} is not a right descent of {format_word(word)}")
        plan = _shortest_plan(self, word, s, lambda mv: (mv.m, mv.position))
        self._plans[key] = plan
        return plan

    # Bruhat order

    def bruhat_leq(self, u: Element, v: Element) -> bool:
        """u <= v in Bruhat order, by the lifting recursion."""
        key = (u.word, v.word)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        if u.length > v.length:
            result = False
        elif u.is_identity():
            result = True
        elif u.length == v.length:
            result = u == v
        else:
            s = v.word[-1]
            vs = self.multiply(v, s)
            us = self.multiply(u, s)
            if us.length < u.length:
                result = self.bruhat_leq(us, vs)
            else:
                result = self.bruhat_leq(u, vs)
        self._bruhat[key] = result
        return result

    def bruhat_leq_by_subwords(self, u: Element, v: Element) -> bool:
        """u <= v iff some subword of a fixed reduced word of v is a reduced word of u."""
        if u.length > v.length:
            return False
        return u in self.bruhat_interval(v)

    def bruhat_interval(self, w: Element) -> Set[Element]:
        """All x <= w: the products of the subwords of a reduced word of w."""
        below: Set[Element] = {self.identity()}
        for s in w.word:
            below |= {self.multiply(x, s) for x in below}
        return below

    # enumeration

    def elements(self, max_length: Optional[int] = None) -> List[Element]:
        """Elements by increasing length, canonical-word order inside a length."""
        if max_length is None and self.matrix.is_finite is not True:
            raise CoxeterMatrixError(
                f"{self.name} is not known to be finite; pass an explicit length cap"
            )
        result: List[Element] = []
        level: Set[Element] = {self.identity()}
        length = 0
        while level and (max_length is None or length <= max_length):
            ordered = sorted(level, key=lambda x: x.word)
            result.extend(ordered)
            nxt: Set[Element] = set()
            for x in ordered:
                for s in range(self.rank):
                    y = self.multiply(x, s)
                    if y.length > x.length:
                        nxt.add(y)
            level = nxt
            length += 1
        logger.debug(f"Enumerated {len(result)} elements of {self.name}")
        return result


def _shortest_plan(group: CoxeterGroup, word: Word, s: int, order) -> Tuple[BraidMove, ...]:
    """Breadth-first search over the braid orbit, moves tried in the given order."""
    parents: Dict[Word, Optional[Tuple[Word, BraidMove]]] = {word: None}
    queue = deque([word])
    while queue:
        current = queue.popleft()
        for move in sorted(group.braid_moves(current), key=order):
            nxt = move.apply(current)
            if nxt in parents:
                continue
            parents[nxt] = (current, move)
            if nxt[-1] == s:
                plan = []
                node = nxt
                while parents[node] is not None:
                    previous, mv = parents[node]
                    plan.append(mv)
                    node = previous
                return tuple(reversed(plan))
            queue.append(nxt)
    raise NotADescentError(f"no reduced word of {format_word(word)} ends in s{s + 1}")


def default_plan(group: CoxeterGroup, word: Word, s: int) -> Tuple[BraidMove, ...]:
    return group.braid_plan(word, s)


def reversed_shortest_plan(group: CoxeterGroup, word: Word, s: int) -> Tuple[BraidMove, ...]:
    """Alternative valid policy: shortest plan preferring large m and rightmost moves."""
    if word and word[-1] == s:
        return ()
    if not group.is_descent(group.canonicalize(word), s):
        raise NotADescentError(f"s{s + 1} is not a right descent of {format_word(word)}")
    return _shortest_plan(group, word, s, lambda mv: (-mv.m, -mv.position))
