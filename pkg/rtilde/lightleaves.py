"""
Light leaves of a word and the diagrammatic R-tilde polynomial.

The tree over a word v = s_1 ... s_k is grown letter by letter from the root
(state e).  At a node with state x and next letter s:

* if l(xs) > l(x) the node has two children: Dot (state x, degree + 1) and
  Through (state xs);
* if l(xs) < l(x) it has one child: Merge (state xs), which first brings the
  current top sequence to a reduced word ending in s with braid moves.

Only the step sequence is needed to compute polynomials; geometry lives in
``rtilde.diagrams``.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from rtilde.coxeter import BraidMove, CoxeterGroup, Element, PlanPolicy, Word, apply_plan, default_plan, format_word
from rtilde.poly import IntPolynomial, T

logger = logging.getLogger(__name__)


class StepKind(str, Enum):
    DOT = "D"
    THROUGH = "T"
    MERGE = "M"


@dataclass(frozen=True)
class LeafStep:
    kind: StepKind
    letter: int
    plan: Tuple[BraidMove, ...] = ()

    @property
    def high_valent_moves(self) -> int:
        return sum(1 for move in self.plan if move.m >= 3)


@dataclass(frozen=True)
class LightLeaf:
    """A root-to-leaf path: one step per letter of the bottom word."""
    word: Word
    steps: Tuple[LeafStep, ...]
    top: Element
    top_word: Word
    degree: int

    @property
    def high_valent_count(self) -> int:
        return sum(step.high_valent_moves for step in self.steps)

    @property
    def code(self) -> str:
        return "".join(step.kind.value for step in self.steps)

    def serialize(self) -> str:
        return f"steps={self.code} top={format_word(self.top_word)} deg={self.degree}"


@dataclass
class LeafNode:
    depth: int
    state: Element
    top_word: Word
    degree: int
    step: Optional[LeafStep] = None
    children: List["LeafNode"] = field(default_factory=list)

    def is_leaf(self) -> bool:
        return not self.children


@dataclass
class LeafTree:
    word: Word
    root: LeafNode

    def nodes(self) -> Iterator[LeafNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def leaf_nodes(self) -> List[LeafNode]:
        return [node for node in self.nodes() if node.is_leaf()]

    def __len__(self) -> int:
        return sum(1 for _ in self.nodes())


def _children(
    group: CoxeterGroup,
    state: Element,
    top_word: Word,
    degree: int,
    s: int,
    plan_policy: PlanPolicy,
) -> List[Tuple[LeafStep, Element, Word, int]]:
    """Successor (step, state, top word, degree) tuples, Dot before Through."""
    nxt = group.multiply(state, s)
    if nxt.length > state.length:
        return [
            (LeafStep(StepKind.DOT, s), state, top_word, degree + 1),
            (LeafStep(StepKind.THROUGH, s), nxt, top_word + (s,), degree),
        ]
    plan = plan_policy(group, top_word, s)
    moved = apply_plan(top_word, plan)
    return [(LeafStep(StepKind.MERGE, s, plan), nxt, moved[:-1], degree)]


def build_tree(group: CoxeterGroup, word: Iterable[int], plan_policy: Optional[PlanPolicy] = None) -> LeafTree:
    """Materialize the whole tree; only sensible for short words."""
    word = group.validate_word(word)
    policy = plan_policy or default_plan
    root = LeafNode(depth=0, state=group.identity(), top_word=(), degree=0)
    frontier = [root]
    for depth, s in enumerate(word, start=1):
        next_frontier = []
        for node in frontier:
            for step, state, top_word, degree in _children(group, node.state, node.top_word, node.degree, s, policy):
                child = LeafNode(depth=depth, state=state, top_word=top_word, degree=degree, step=step)
                node.children.append(child)
                next_frontier.append(child)
        frontier = next_frontier
    logger.debug(f"Built tree for {format_word(word)} with {len(frontier)} leaves")
    return LeafTree(word=word, root=root)


def iter_leaves(group: CoxeterGroup, word: Iterable[int], plan_policy: Optional[PlanPolicy] = None) -> Iterator[LightLeaf]:
    """Depth-first walk over the tree, yielding leaves without materializing it."""
    word = group.validate_word(word)
    policy = plan_policy or default_plan
    stack: List[Tuple[int, Element, Word, int, Tuple[LeafStep, ...]]] = [(0, group.identity(), (), 0, ())]
    while stack:
        depth, state, top_word, degree, steps = stack.pop()
        if depth == len(word):
            yield LightLeaf(word=word, steps=steps, top=state, top_word=top_word, degree=degree)
            continue
        children = _children(group, state, top_word, degree, word[depth], policy)
        for step, nxt, nxt_word, nxt_degree in reversed(children):
            stack.append((depth + 1, nxt, nxt_word, nxt_degree, steps + (step,)))


def leaves(
    group: CoxeterGroup,
    word: Iterable[int],
    u: Element,
    plan_policy: Optional[PlanPolicy] = None,
) -> List[LightLeaf]:
    """The light leaves of ``word`` whose top sequence is a reduced expression of u."""
    found = [leaf for leaf in iter_leaves(group, word, plan_policy) if leaf.top == u]
    logger.info(f"{len(found)} light leaves over {u}")
    return found


def leaf_polynomials(
    group: CoxeterGroup,
    word: Iterable[int],
    plan_policy: Optional[PlanPolicy] = None,
) -> Dict[Element, IntPolynomial]:
    """All nonzero diagrammatic polynomials of a word at once, keyed by top element."""
    degrees: Dict[Element, Counter] = {}
    for leaf in iter_leaves(group, word, plan_policy):
        degrees.setdefault(leaf.top, Counter())[leaf.degree] += 1
    return {u: IntPolynomial.from_exponents(counts.elements()) for u, counts in degrees.items()}


def diagrammatic_rtilde(
    group: CoxeterGroup,
    u: Element,
    word: Iterable[int],
    plan_policy: Optional[PlanPolicy] = None,
) -> IntPolynomial:
    """Sum of t^deg over the light leaves of ``word`` with top u."""
    counts = Counter(leaf.degree for leaf in iter_leaves(group, word, plan_policy) if leaf.top == u)
    return IntPolynomial.from_exponents(counts.elements())


def word_rtilde_recursive(group: CoxeterGroup, u: Element, word: Iterable[int]) -> IntPolynomial:
    """The diagrammatic polynomial by erasing the rightmost letter.

    R~_{u,w} = R~_{us,w'}                if l(us) < l(u)
             = R~_{us,w'} + t R~_{u,w'}   otherwise
    where w' is w without its last letter; R~_{u,empty} is 1 for u = e, else 0.
    """
    word = group.validate_word(word)
    memo: Dict[Tuple[Word, int], IntPolynomial] = {}

    def recurse(x: Element, k: int) -> IntPolynomial:
        if k == 0:
            return IntPolynomial.one() if x.is_identity() else IntPolynomial.zero()
        if x.length > k:
            return IntPolynomial.zero()
        key = (x.word, k)
        if key in memo:
            return memo[key]
        s = word[k - 1]
        xs = group.multiply(x, s)
        if xs.length < x.length:
            result = recurse(xs, k - 1)
        else:
            result = recurse(xs, k - 1) + T * recurse(x, k - 1)
        memo[key] = result
        return result

    return recurse(u, len(word))


def high_valent_count(leaf: LightLeaf) -> int:
    """Braid moves with m >= 3 used by the Merge steps of a leaf."""
    return leaf.high_valent_count


def serialize_leaves(leaves_: Iterable[LightLeaf]) -> List[str]:
    """One ``steps=... top=... deg=...`` line per leaf, sorted by step code."""
    return [leaf.serialize() for leaf in sorted(leaves_, key=lambda leaf: (leaf.code, leaf.top_word))]
