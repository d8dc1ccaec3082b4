"""
Point configurations in the cone T = {(i, j) : j <= 0, |i| <= |j|, i = j mod 2}
and R-tilde(e, v) for 321-avoiding 2-repeating permutations.

The point (i, j) carries the letter s_{1-j}, i.e. the 0-based generator -j.
A configuration is admissible when

1. no row (fixed j) holds three points;
2. two points in a row are at distance 2;
3. for such a pair (i, j), (i + 2, j), both (i + 1, j + 1) and (i + 1, j - 1) are present.

Its word is read column by column, left to right, top to bottom inside a column.
"""
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Tuple, Union

from rtilde.coxeter import CoxeterGroup, Element, Word
from rtilde.errors import ConfigurationError, PreconditionError
from rtilde.poly import IntPolynomial, modified_fibonacci, product

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


def in_cone(point: Point) -> bool:
    i, j = point
    return j <= 0 and abs(i) <= abs(j) and (i - j) % 2 == 0


def letter_of(point: Point) -> int:
    return -point[1]


@dataclass(frozen=True)
class PointConfiguration:
    points: FrozenSet[Point]

    def __post_init__(self):
        object.__setattr__(self, "points", frozenset(tuple(p) for p in self.points))
        outside = sorted(p for p in self.points if not in_cone(p))
        if outside:
            raise ConfigurationError(f"points outside the cone: {outside}")

    def __len__(self) -> int:
        return len(self.points)

    def rows(self) -> Dict[int, List[int]]:
        """Column indices i of the points in each row j."""
        rows: Dict[int, List[int]] = {}
        for i, j in self.points:
            rows.setdefault(j, []).append(i)
        return {j: sorted(columns) for j, columns in rows.items()}

    def reading_order(self) -> List[Point]:
        return sorted(self.points, key=lambda p: (p[0], -p[1]))

    def to_text(self) -> str:
        return "".join(f"{i} {j}\n" for i, j in self.reading_order())


def config_is_admissible(config: PointConfiguration) -> bool:
    for j, columns in config.rows().items():
        if len(columns) > 2:
            return False
        if len(columns) == 2:
            i1, i2 = columns
            if i2 - i1 != 2:
                return False
            if (i1 + 1, j + 1) not in config.points or (i1 + 1, j - 1) not in config.points:
                return False
    return True


def config_to_word(config: PointConfiguration) -> Word:
    if not config_is_admissible(config):
        raise ConfigurationError("configuration is not admissible")
    return tuple(letter_of(p) for p in config.reading_order())


def config_to_element(group: CoxeterGroup, config: PointConfiguration) -> Element:
    word = config_to_word(config)
    if word and max(word) >= group.rank:
        raise ConfigurationError(f"configuration uses s{max(word) + 1}, outside {group.name}")
    return group.canonicalize(word)


def require_fc_2_repeating(group: CoxeterGroup, v: Element) -> None:
    check = getattr(group, "is_321_avoiding_2_repeating", None)
    if check is None:
        raise PreconditionError(f"321-avoiding permutations need the symmetric group backend, not {group.name}")
    if not group.is_fully_commutative(v):
        raise PreconditionError(f"{v} is not 321-avoiding")
    if not check(v):
        raise PreconditionError(f"{v} is not 2-repeating")


def heap_of(group: CoxeterGroup, v: Element) -> PointConfiguration:
    """An admissible configuration whose word is a reduced expression of v.

    Each letter occurrence x of the canonical word sits in row j = -x.  Its
    column is the least solution of: i >= -x; a later occurrence of a
    neighbouring letter lies at least one column further right; the two
    occurrences of a letter lie exactly two columns apart.
    """
    require_fc_2_repeating(group, v)
    word = v.word
    columns = [-x for x in word]
    # (a, b, w): columns[b] >= columns[a] + w
    constraints: List[Tuple[int, int, int]] = []
    for a in range(len(word)):
        for b in range(a + 1, len(word)):
            if abs(word[a] - word[b]) == 1:
                constraints.append((a, b, 1))
            elif word[a] == word[b]:
                constraints.extend([(a, b, 2), (b, a, -2)])

    for _ in range(len(word) + 1):
        changed = False
        for a, b, w in constraints:
            if columns[b] < columns[a] + w:
                columns[b] = columns[a] + w
                changed = True
        if not changed:
            break
    else:
        raise ConfigurationError(f"the column constraints of {v} have no solution")

    points = [(i, -x) for i, x in zip(columns, word)]
    if any(i > x for i, x in zip(columns, word)):
        raise ConfigurationError(f"the heap of {v} leaves the cone")
    config = PointConfiguration(frozenset(points))
    if len(config) != len(points) or not config_is_admissible(config):
        raise ConfigurationError(f"the heap of {v} is not admissible")
    if group.canonicalize(config_to_word(config)) != v:
        raise ConfigurationError(f"the heap of {v} reads as a different element")
    logger.debug(f"Heap of {v}: {sorted(points)}")
    return config


@dataclass(frozen=True)
class ChainDecomposition:
    """Letters occurring once, and maximal runs of consecutive letters occurring twice."""
    singles: Tuple[int, ...]
    chains: Tuple[Tuple[int, ...], ...]

    @property
    def n1(self) -> int:
        return len(self.singles)

    @property
    def kappa(self) -> int:
        return len(self.chains)

    @property
    def lambdas(self) -> Tuple[int, ...]:
        return tuple(len(chain) for chain in self.chains)

    def format(self) -> str:
        chains = " ".join("{" + ",".join(str(x + 1) for x in chain) + "}" for chain in self.chains)
        return f"n1={self.n1} kappa={self.kappa} chains={chains or '-'}"


def chain_stats(group: CoxeterGroup, v: Element) -> ChainDecomposition:
    require_fc_2_repeating(group, v)
    counts = group.letter_multiplicities(v)
    singles = tuple(sorted(x for x, c in counts.items() if c == 1))
    doubles = sorted(x for x, c in counts.items() if c == 2)
    chains: List[Tuple[int, ...]] = []
    for x in doubles:
        if chains and chains[-1][-1] == x - 1:
            chains[-1] = chains[-1] + (x,)
        else:
            chains.append((x,))
    return ChainDecomposition(singles, tuple(chains))


def general_rtilde_e(group: CoxeterGroup, v: Element) -> IntPolynomial:
    """R-tilde(e, v) = t^{n1} times the product of the modified Fibonacci polynomials of the chain sizes."""
    stats = chain_stats(group, v)
    result = product([modified_fibonacci(size) for size in stats.lambdas]).scale_by_t_power(stats.n1)
    logger.debug(f"{v}: {stats.format()} -> {result}")
    return result


def parse_configuration(text: str) -> PointConfiguration:
    """Read ``i j`` integer pairs, one per line; ``#`` starts a comment."""
    points: List[Point] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ConfigurationError(f"line {number}: expected 'i j', got {raw!r}")
        try:
            points.append((int(tokens[0]), int(tokens[1])))
        except ValueError as e:
            raise ConfigurationError(f"line {number}: non-integer coordinate in {raw!r}") from e
    if len(set(points)) != len(points):
        raise ConfigurationError("configuration lists a point twice")
    return PointConfiguration(frozenset(points))


def read_configuration(path: Union[str, Path]) -> PointConfiguration:
    return parse_configuration(Path(path).read_text(encoding="utf-8"))


def configuration_from_columns(columns: Iterable[Tuple[int, Iterable[int]]]) -> PointConfiguration:
    """Build a configuration from (column, 1-based letters) pairs."""
    return PointConfiguration(frozenset((i, 1 - letter) for i, letters in columns for letter in letters))