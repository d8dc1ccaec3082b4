"""
Hecke algebra in the standard basis, R-polynomials and the R-tilde recursion.

Relations: H_s^2 = 1 + (t^-1 - t) H_s and H_s^-1 = H_s + (t - t^-1).
The R-polynomials are the coefficients of (H_{v^-1})^-1 = sum_u R_{u,v} H_u.
"""
import logging
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Union

from rtilde.config import settings
from rtilde.coxeter import CoxeterGroup, Element
from rtilde.errors import SupportOverflowError
from rtilde.memory import BaseMemoStore
from rtilde.poly import IntPolynomial, LaurentPolynomial, T, express_in_t_minus_tinv
from rtilde.stores import get_memo_store

logger = logging.getLogger(__name__)

TINV_MINUS_T = LaurentPolynomial(((-1, 1), (1, -1)))
T_MINUS_TINV = LaurentPolynomial(((-1, -1), (1, 1)))


class HeckeElement:
    """A finite combination sum_u c_u H_u with Laurent polynomial coefficients."""

    def __init__(self, group: CoxeterGroup, terms: Optional[Mapping[Element, LaurentPolynomial]] = None):
        self.group = group
        self.terms: Dict[Element, LaurentPolynomial] = {
            u: c for u, c in (terms or {}).items() if c
        }

    @classmethod
    def basis(cls, group: CoxeterGroup, u: Element) -> "HeckeElement":
        return cls(group, {u: LaurentPolynomial.one()})

    @classmethod
    def identity(cls, group: CoxeterGroup) -> "HeckeElement":
        return cls.basis(group, group.identity())

    def coefficient(self, u: Element) -> LaurentPolynomial:
        return self.terms.get(u, LaurentPolynomial.zero())

    def support(self) -> List[Element]:
        return sorted(self.terms, key=lambda x: (x.length, x.word))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Element, LaurentPolynomial]]:
        for u in self.support():
            yield u, self.terms[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for u, c in other.terms.items():
            out[u] = out.get(u, LaurentPolynomial.zero()) + c
        return HeckeElement(self.group, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(LaurentPolynomial.one() * -1)

    def scale(self, c: Union[LaurentPolynomial, int]) -> "HeckeElement":
        return HeckeElement(self.group, {u: coeff * c for u, coeff in self.terms.items()})

    def mul_by_generator(self, s: int) -> "HeckeElement":
        """Right multiplication by H_s."""
        out: Dict[Element, LaurentPolynomial] = {}
        for u, c in self.terms.items():
            us = self.group.multiply(u, s)
            out[us] = out.get(us, LaurentPolynomial.zero()) + c
            if us.length < u.length:
                out[u] = out.get(u, LaurentPolynomial.zero()) + c * TINV_MINUS_T
        return HeckeElement(self.group, out)

    def mul_by_generator_inverse(self, s: int) -> "HeckeElement":
        """Right multiplication by H_s^-1 = H_s + (t - t^-1)."""
        return self.mul_by_generator(s) + self.scale(T_MINUS_TINV)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) H[{u}]" for u, c in self)


@lru_cache(maxsize=4096)
def inverse_of_standard_basis(group: CoxeterGroup, v: Element, support_cap: int) -> HeckeElement:
    """(H_{v^-1})^-1 as the product of H_s^-1 over a reduced word of v, left to right."""
    h = HeckeElement.identity(group)
    for s in v.word:
        h = h.mul_by_generator_inverse(s)
        if len(h) > support_cap:
            raise SupportOverflowError(
                f"expansion of (H_{{v^-1}})^-1 for v = {v} exceeded {support_cap} basis elements"
            )
    logger.debug(f"Inverted H_{{v^-1}} for v = {v}: {len(h)} terms")
    return h


def r_polynomial(group: CoxeterGroup, u: Element, v: Element, support_cap: Optional[int] = None) -> LaurentPolynomial:
    """R_{u,v}(t), the coefficient of H_u in (H_{v^-1})^-1."""
    cap = settings.compute.support_cap if support_cap is None else support_cap
    return inverse_of_standard_basis(group, v, cap).coefficient(u)


def hecke_rtilde(group: CoxeterGroup, u: Element, v: Element, support_cap: Optional[int] = None) -> IntPolynomial:
    """R-tilde recovered from the Hecke algebra by inverting t -> t - t^-1."""
    return express_in_t_minus_tinv(r_polynomial(group, u, v, support_cap))


# Descent selection for the recursion; every choice gives the same polynomial
DescentPolicy = Callable[[CoxeterGroup, Element], int]

DESCENT_POLICIES: Dict[str, DescentPolicy] = {
    "rightmost": lambda group, v: v.word[-1],
    "smallest": lambda group, v: min(group.right_descents(v)),
    "largest": lambda group, v: max(group.right_descents(v)),
}


def rtilde_recursive(
    group: CoxeterGroup,
    u: Element,
    v: Element,
    descent_policy: Optional[str] = None,
    store: Optional[BaseMemoStore] = None,
) -> IntPolynomial:
    """R-tilde by the recursion on a right descent s of v.

    R~_{u,v} = R~_{us,vs}                 if l(us) < l(u)
             = R~_{us,vs} + t R~_{u,vs}    otherwise
    with R~_{u,e} = 1 for u = e and 0 otherwise.  The recursion holds for every
    u, so u not below v gives 0 without a separate Bruhat test.
    """
    policy_name = descent_policy or settings.compute.descent_policy
    if policy_name not in DESCENT_POLICIES:
        raise ValueError(f"unknown descent policy {policy_name!r}; choose from {sorted(DESCENT_POLICIES)}")
    choose = DESCENT_POLICIES[policy_name]
    memo = store if store is not None else get_memo_store(
        f"rtilde:{group.matrix.fingerprint()}:{policy_name}"
    )

    def recurse(x: Element, y: Element) -> IntPolynomial:
        if y.is_identity():
            return IntPolynomial.one() if x.is_identity() else IntPolynomial.zero()
        if x.length > y.length:
            return IntPolynomial.zero()
        if x == y:
            return IntPolynomial.one()
        key = f"{','.join(map(str, x.word))}|{','.join(map(str, y.word))}"
        cached = memo.get(key)
        if cached is not None:
            return IntPolynomial(tuple(cached))
        s = choose(group, y)
        ys = group.multiply(y, s)
        xs = group.multiply(x, s)
        if xs.length < x.length:
            result = recurse(xs, ys)
        else:
            result = recurse(xs, ys) + T * recurse(x, ys)
        memo.set(key, list(result.coefficients))
        return result

    result = recurse(u, v)
    logger.debug(f"R~[{u}, {v}] = {result} (policy {policy_name})")
    return result
