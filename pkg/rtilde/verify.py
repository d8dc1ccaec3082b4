"""
Cross-method verification over a whole group, optionally on a process pool.

For every pair (u, v) the descent recursion is compared with the light-leaf
sum over the canonical word of v, the word recursion and (for finite groups)
the Hecke algebra.  Each nonzero result must be monic of degree l(v) - l(u),
with exponents of one parity, and nonzero exactly when u <= v.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, List, Optional, Sequence, Tuple, TypeVar

from tqdm import tqdm

from rtilde.config import settings
from rtilde.coxeter import CoxeterGroup, CoxeterMatrix, Element, format_word
from rtilde.hecke import hecke_rtilde, rtilde_recursive
from rtilde.lightleaves import diagrammatic_rtilde, leaf_polynomials, word_rtilde_recursive
from rtilde.poly import IntPolynomial
from rtilde.symmetric import build_group

logger = logging.getLogger(__name__)

Item = TypeVar("Item")

DEFAULT_MAX_LENGTH = 4

# Group rebuilt once per worker process
_worker_group: Optional[CoxeterGroup] = None


def _init_worker(matrix: CoxeterMatrix, backend: str) -> None:
    global _worker_group
    _worker_group = build_group(matrix, backend)


def _call_in_worker(job: Tuple[Callable, Any]) -> Any:
    func, item = job
    return func(_worker_group, item)


def parallel_map(
    func: Callable[[CoxeterGroup, Item], Any],
    items: Sequence[Item],
    group: CoxeterGroup,
    workers: int = 1,
    desc: str = "pairs",
) -> List[Any]:
    """Apply func(group, item) to every item, keeping input order."""
    progress = dict(total=len(items), desc=desc, disable=not settings.compute.progress)
    if workers <= 1 or len(items) < 2:
        return [func(group, item) for item in tqdm(items, **progress)]
    logger.info(f"Starting {workers} workers for {len(items)} {desc}")
    chunksize = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(
        max_workers=workers,
        initializer=_init_worker,
        initargs=(group.matrix, group.backend),
    ) as pool:
        jobs = [(func, item) for item in items]
        return list(tqdm(pool.map(_call_in_worker, jobs, chunksize=chunksize), **progress))


def check_pair(group: CoxeterGroup, pair: Tuple[Element, Element]) -> List[str]:
    """Mismatch descriptions for one pair; empty when everything agrees."""
    u, v = pair
    label = f"u={u} v={v}"
    problems: List[str] = []
    expected = rtilde_recursive(group, u, v)

    results = {
        "diagrammatic": diagrammatic_rtilde(group, u, v.word),
        "word-recursive": word_rtilde_recursive(group, u, v.word),
    }
    if group.matrix.is_finite:
        results["hecke"] = hecke_rtilde(group, u, v)
    for method, value in results.items():
        if value != expected:
            problems.append(f"{label}: recursive={expected} {method}={value}")

    below = group.bruhat_leq(u, v)
    if below != (not expected.is_zero()):
        problems.append(f"{label}: bruhat_leq={below} but R~={expected}")
    if expected:
        if not expected.is_monic() or expected.degree != v.length - u.length:
            problems.append(f"{label}: R~={expected} is not monic of degree {v.length - u.length}")
        if any((k - expected.degree) % 2 for k, _ in expected.terms()):
            problems.append(f"{label}: R~={expected} mixes exponent parities")
    return problems


def check_reduced_words(group: CoxeterGroup, v: Element) -> List[str]:
    """The light-leaf polynomials of every reduced word of v agree with the recursion."""
    problems: List[str] = []
    below = sorted(group.bruhat_interval(v), key=lambda x: (x.length, x.word))
    for word in sorted(group.reduced_expressions(v)):
        polys = leaf_polynomials(group, word)
        for u in below:
            expected = rtilde_recursive(group, u, v)
            found = polys.get(u, IntPolynomial.zero())
            if found != expected:
                problems.append(f"u={u} v={v} word={format_word(word)}: recursive={expected} diagrammatic={found}")
        stray = [u for u in polys if u not in below]
        if stray:
            problems.append(f"v={v} word={format_word(word)}: leaves with tops {stray} outside the interval")
    return problems


@dataclass
class VerifyReport:
    group_name: str
    pairs_checked: int = 0
    words_checked: int = 0
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def lines(self) -> List[str]:
        status = "OK" if self.ok else "FAILED"
        summary = f"{status} {self.group_name}: {self.pairs_checked} pairs"
        if self.words_checked:
            summary += f", {self.words_checked} elements over all reduced words"
        summary += f", {len(self.mismatches)} mismatches"
        return sorted(self.mismatches) + [summary]


def verify_group(
    group: CoxeterGroup,
    max_length: Optional[int] = DEFAULT_MAX_LENGTH,
    all_pairs: bool = False,
    all_words: bool = False,
    workers: Optional[int] = None,
) -> VerifyReport:
    """Run the cross-method checks over all elements up to a length (or all of them)."""
    workers = settings.compute.workers if workers is None else workers
    elements = group.elements(None if all_pairs else max_length)
    pairs = [(u, v) for v in elements for u in elements]
    logger.info(f"Verifying {len(pairs)} pairs of {group.name} with {workers} worker(s)")

    report = VerifyReport(group_name=group.name, pairs_checked=len(pairs))
    for problems in parallel_map(check_pair, pairs, group, workers, desc="pairs"):
        report.mismatches.extend(problems)
    if all_words:
        report.words_checked = len(elements)
        for problems in parallel_map(check_reduced_words, elements, group, workers, desc="elements"):
            report.mismatches.extend(problems)
    if not report.ok:
        logger.error(f"{len(report.mismatches)} mismatches in {group.name}")
    return report
