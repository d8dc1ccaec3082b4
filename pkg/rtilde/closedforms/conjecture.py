"""
Scan of the intervals below a 321-avoiding 2-repeating permutation w: every
R-tilde(u, v) with u <= v <= w is tested for the shape t^a times a product of
modified Fibonacci polynomials.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from tqdm import tqdm

from rtilde.closedforms.configurations import require_fc_2_repeating
from rtilde.config import settings
from rtilde.coxeter import CoxeterGroup, Element, format_word
from rtilde.hecke import rtilde_recursive
from rtilde.poly import IntPolynomial, modified_fibonacci

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _stripped_modified_fibonacci(c: int) -> Tuple[int, IntPolynomial]:
    """(e, G) with modified_fibonacci(c) = t^e G and G(0) != 0."""
    f = modified_fibonacci(c)
    e = f.valuation
    return e, f.scale_by_t_power(-e)


def factor_modified_fibonacci(p: IntPolynomial) -> Optional[Tuple[int, List[int]]]:
    """Greedy factorization p = t^a * prod modified_fibonacci(c_i), c_i decreasing.

    Returns (a, [c_1, c_2, ...]) or None when the greedy division gets stuck.
    """
    if p.is_zero() or not p.is_monic():
        return None
    a = p.valuation
    q = p.scale_by_t_power(-a)
    cs: List[int] = []
    c = q.degree
    while q != IntPolynomial.one() and c >= 1:
        e, g = _stripped_modified_fibonacci(c)
        if g.degree <= q.degree:
            quotient, remainder = q.divmod_monic(g)
            if remainder.is_zero():
                q = quotient
                cs.append(c)
                a -= e
                continue
        c -= 1
    if q != IntPolynomial.one():
        return None
    return a, cs


@dataclass(frozen=True)
class ScanEntry:
    u: Element
    v: Element
    poly: IntPolynomial
    a: Optional[int]
    cs: Optional[Tuple[int, ...]]

    @property
    def status(self) -> str:
        return "factored" if self.cs is not None else "candidate"

    def format(self) -> str:
        coeffs = "[" + ",".join(str(c) for c in self.poly.coefficients) + "]"
        if self.cs is None:
            tail = "a=- cs=-"
        else:
            tail = f"a={self.a} cs=[{','.join(str(c) for c in self.cs)}]"
        return f"u={format_word(self.u.word)} v={format_word(self.v.word)} poly={coeffs} status={self.status} {tail}"


def scan_pair(group: CoxeterGroup, pair: Tuple[Element, Element]) -> ScanEntry:
    u, v = pair
    poly = rtilde_recursive(group, u, v)
    factored = factor_modified_fibonacci(poly)
    if factored is None:
        logger.info(f"No factorization found for R~[{u}, {v}] = {poly}")
        return ScanEntry(u, v, poly, None, None)
    a, cs = factored
    return ScanEntry(u, v, poly, a, tuple(cs))


def scan_pairs(group: CoxeterGroup, w: Element) -> List[Tuple[Element, Element]]:
    """All u <= v <= w, ordered by (v, u) length then canonical word."""
    require_fc_2_repeating(group, w)
    below = sorted(group.bruhat_interval(w), key=lambda x: (x.length, x.word))
    return [(u, v) for v in below for u in below if group.bruhat_leq(u, v)]


def conjecture_scan(group: CoxeterGroup, w: Element) -> List[ScanEntry]:
    pairs = scan_pairs(group, w)
    logger.info(f"Scanning {len(pairs)} pairs below {w}")
    entries = [
        scan_pair(group, pair)
        for pair in tqdm(pairs, desc="scan", disable=not settings.compute.progress)
    ]
    candidates = sum(1 for entry in entries if entry.cs is None)
    if candidates:
        logger.warning(f"{candidates} of {len(entries)} pairs below {w} did not factor")
    return entries


def format_report(entries: List[ScanEntry]) -> str:
    return "".join(entry.format() + "\n" for entry in entries)
