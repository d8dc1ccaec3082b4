"""
Fibonacci trees, their path statistics and the R-tilde polynomials of powers s^n.

FT_1 is a root with a left and a right child.  FT_{n+1} grows FT_n by one
generation: a leaf that is a left child gets a single (central) child, every
other leaf gets a left and a right child.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from rtilde.coxeter import CoxeterGroup, Element
from rtilde.poly import IntPolynomial, fibonacci

logger = logging.getLogger(__name__)


class Step(str, Enum):
    LEFT = "L"
    RIGHT = "R"
    CENTRAL = "C"


@dataclass(frozen=True)
class FibPath:
    steps: Tuple[Step, ...]

    @property
    def rho(self) -> int:
        """Number of right steps."""
        return sum(1 for step in self.steps if step is Step.RIGHT)

    @property
    def lam(self) -> int:
        """Number of left steps."""
        return sum(1 for step in self.steps if step is Step.LEFT)

    @property
    def last(self) -> Optional[Step]:
        return self.steps[-1] if self.steps else None

    def __str__(self) -> str:
        return "".join(step.value for step in self.steps)


@dataclass
class FibNode:
    step: Optional[Step]
    depth: int
    children: List["FibNode"] = field(default_factory=list)


@dataclass
class FibTree:
    n: int
    root: FibNode

    def leaves(self) -> List[FibNode]:
        found, stack = [], [self.root]
        while stack:
            node = stack.pop()
            if node.children:
                stack.extend(reversed(node.children))
            else:
                found.append(node)
        return found

    def generation_sizes(self) -> List[int]:
        sizes = Counter()
        stack = [self.root]
        while stack:
            node = stack.pop()
            sizes[node.depth] += 1
            stack.extend(node.children)
        return [sizes[d] for d in range(1, self.n + 1)]

    def paths(self) -> List[FibPath]:
        """Root-to-leaf paths, left subtrees first."""
        found: List[FibPath] = []

        def walk(node: FibNode, prefix: Tuple[Step, ...]) -> None:
            if not node.children:
                found.append(FibPath(prefix))
                return
            for child in node.children:
                walk(child, prefix + (child.step,))

        walk(self.root, ())
        return found


def build_fib_tree(n: int) -> FibTree:
    if n < 1:
        raise ValueError(f"Fibonacci trees start at n = 1, got {n}")
    root = FibNode(step=None, depth=0)
    frontier = [root]
    for depth in range(1, n + 1):
        next_frontier = []
        for node in frontier:
            if node.step is Step.LEFT:
                node.children = [FibNode(Step.CENTRAL, depth)]
            else:
                node.children = [FibNode(Step.LEFT, depth), FibNode(Step.RIGHT, depth)]
            next_frontier.extend(node.children)
        frontier = next_frontier
    return FibTree(n=n, root=root)


def fib_paths(n: int) -> List[FibPath]:
    return build_fib_tree(n).paths()


def restricted_fib_paths(n: int) -> List[FibPath]:
    """Paths whose last step is not a left step."""
    return [p for p in fib_paths(n) if p.last is not Step.LEFT]


def fibonacci_from_paths(n: int) -> IntPolynomial:
    """F_n as the sum of t^rho over the restricted paths."""
    return IntPolynomial.from_exponents(p.rho for p in restricted_fib_paths(n))


def modified_fibonacci_from_paths(n: int) -> IntPolynomial:
    """The modified Fibonacci polynomial as the sum of t^(2(n - lambda)) over all paths."""
    return IntPolynomial.from_exponents(2 * (n - p.lam) for p in fib_paths(n))


def power_word_rtilde(group: CoxeterGroup, u: Element, n: int, s: int) -> IntPolynomial:
    """R-tilde over the word s^n: F_n at u = e, F_{n-1} at u = s, zero elsewhere."""
    if n < 0:
        raise ValueError(f"the exponent of a power word must be >= 0, got {n}")
    group.validate_word((s,))
    if u.is_identity():
        return fibonacci(n)
    if u == group.generator(s) and n >= 1:
        return fibonacci(n - 1)
    return IntPolynomial.zero()
