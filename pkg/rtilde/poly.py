"""
Exact integer polynomials in t and Laurent polynomials in t, t^-1.

R-tilde polynomials live in Z[t]; Hecke algebra coefficients and R-polynomials
live in Z[t, t^-1].  The two are linked by the substitution t -> t - t^-1.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from rtilde.errors import NormalizationError, NotInSpanError

logger = logging.getLogger(__name__)

# Degree of the zero polynomial; compares below every integer
ZERO_DEGREE = -math.inf

Degree = Union[int, float]


def _format_terms(terms: Iterable[Tuple[int, int]], var: str = "t") -> str:
    """Render (exponent, coefficient) pairs, highest exponent first."""
    pieces = []
    for exponent, coeff in terms:
        magnitude = abs(coeff)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = var if exponent == 1 else f"{var}^{exponent}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class IntPolynomial:
    """A polynomial with integer coefficients; coefficients[k] is the coefficient of t^k."""
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coeffs))

    # construction

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError(f"IntPolynomial cannot hold t^{exponent}")
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "IntPolynomial":
        """Sum of t^e over a multiset of exponents."""
        counts: Dict[int, int] = {}
        for e in exponents:
            counts[e] = counts.get(e, 0) + 1
        if not counts:
            return cls.zero()
        top = max(counts)
        return cls(tuple(counts.get(k, 0) for k in range(top + 1)))

    # inspection

    @property
    def degree(self) -> Degree:
        return len(self.coefficients) - 1 if self.coefficients else ZERO_DEGREE

    @property
    def valuation(self) -> Degree:
        """Lowest exponent with a nonzero coefficient (ZERO_DEGREE for zero)."""
        for k, c in enumerate(self.coefficients):
            if c:
                return k
        return ZERO_DEGREE

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coefficients):
            return self.coefficients[exponent]
        return 0

    def terms(self) -> Iterator[Tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs in ascending order."""
        for k, c in enumerate(self.coefficients):
            if c:
                yield k, c

    def exponent_multiset(self) -> Tuple[int, ...]:
        """Exponents repeated by coefficient; only defined for nonnegative coefficients."""
        out = []
        for k, c in self.terms():
            if c < 0:
                raise ValueError("exponent multiset needs nonnegative coefficients")
            out.extend([k] * c)
        return tuple(out)

    def evaluate(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    # arithmetic

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _as_int_polynomial(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return self + (-_as_int_polynomial(other))

    def __rsub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return _as_int_polynomial(other) - self

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _as_int_polynomial(other)
        if not self.coefficients or not other.coefficients:
            return IntPolynomial.zero()
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPolynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale_by_t_power(self, k: int) -> "IntPolynomial":
        """Multiply by t^k; negative k is allowed when t^-k divides the polynomial."""
        if not self.coefficients:
            return self
        if k >= 0:
            return IntPolynomial((0,) * k + self.coefficients)
        if self.valuation < -k:
            raise ValueError(f"t^{-k} does not divide {self}")
        return IntPolynomial(self.coefficients[-k:])

    def divmod_monic(self, divisor: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Euclidean division by a monic divisor, exact over Z."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        remainder = list(self.coefficients)
        d = len(divisor.coefficients) - 1
        if len(remainder) - 1 < d:
            return IntPolynomial.zero(), self
        quotient = [0] * (len(remainder) - d)
        for k in range(len(remainder) - 1, d - 1, -1):
            c = remainder[k]
            if c:
                quotient[k - d] = c
                for j, b in enumerate(divisor.coefficients):
                    remainder[k - d + j] -= c * b
        return IntPolynomial(tuple(quotient)), IntPolynomial(tuple(remainder))

    # rendering

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self, var: str = "t") -> str:
        return _format_terms(sorted(self.terms(), reverse=True), var)

    def to_machine(self) -> str:
        """Ascending coefficient list, e.g. ``[0, 0, 1]``."""
        return "[" + ", ".join(str(c) for c in self.coefficients) + "]"


def _as_int_polynomial(value: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    raise TypeError(f"cannot combine IntPolynomial with {type(value).__name__}")


T = IntPolynomial((0, 1))


@dataclass(frozen=True)
class LaurentPolynomial:
    """An element of Z[t, t^-1] stored as sorted (exponent, coefficient) pairs."""
    terms: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: Dict[int, int] = {}
        for exponent, coeff in self.terms:
            merged[exponent] = merged.get(exponent, 0) + coeff
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c != 0))
        )

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "LaurentPolynomial":
        return cls(tuple(coeffs.items()))

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls(((0, 1),))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls(((exponent, coeff),))

    @classmethod
    def from_int_polynomial(cls, p: IntPolynomial) -> "LaurentPolynomial":
        return cls(tuple(p.terms()))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def max_degree(self) -> Degree:
        return self.terms[-1][0] if self.terms else ZERO_DEGREE

    @property
    def min_degree(self) -> Degree:
        return self.terms[0][0] if self.terms else -ZERO_DEGREE

    def coefficient(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def __add__(self, other: Union["LaurentPolynomial", int]) -> "LaurentPolynomial":
        other = _as_laurent(other)
        return LaurentPolynomial(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Union["LaurentPolynomial", int]) -> "LaurentPolynomial":
        return self + (-_as_laurent(other))

    def __mul__(self, other: Union["LaurentPolynomial", int]) -> "LaurentPolynomial":
        other = _as_laurent(other)
        product: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial.from_dict(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial(tuple((e + k, c) for e, c in self.terms))

    def __str__(self) -> str:
        return _format_terms(reversed(self.terms))


def _as_laurent(value: Union[LaurentPolynomial, IntPolynomial, int]) -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, IntPolynomial):
        return LaurentPolynomial.from_int_polynomial(value)
    if isinstance(value, int):
        return LaurentPolynomial(((0, value),))
    raise TypeError(f"cannot combine LaurentPolynomial with {type(value).__name__}")


@lru_cache(maxsize=None)
def _t_minus_tinv_power(k: int) -> LaurentPolynomial:
    """(t - t^-1)^k by the binomial theorem."""
    return LaurentPolynomial(tuple(
        (k - 2 * j, (-1) ** j * math.comb(k, j)) for j in range(k + 1)
    ))


def substitute_t_minus_tinv(p: IntPolynomial) -> LaurentPolynomial:
    """Return p(t - t^-1)."""
    result = LaurentPolynomial.zero()
    for k, c in p.terms():
        result = result + _t_minus_tinv_power(k) * c
    return result


def express_in_t_minus_tinv(laurent: LaurentPolynomial) -> IntPolynomial:
    """Return the unique q with q(t - t^-1) == laurent.

    Raises NotInSpanError when no such polynomial exists.
    """
    residual = laurent
    coeffs: Dict[int, int] = {}
    while residual:
        top = residual.max_degree
        if top < 0:
            raise NotInSpanError(f"{laurent} is not a polynomial in (t - t^-1)")
        c = residual.coefficient(top)
        coeffs[top] = c
        residual = residual - _t_minus_tinv_power(top) * c
    if not coeffs:
        return IntPolynomial.zero()
    return IntPolynomial(tuple(coeffs.get(k, 0) for k in range(max(coeffs) + 1)))


def to_classical_normalization(r: LaurentPolynomial, lu: int, lv: int) -> IntPolynomial:
    """Return R' with R(t) = t^(lu - lv) R'(t^2)."""
    shifted = r.shift(lv - lu)
    coeffs: Dict[int, int] = {}
    for exponent, c in shifted.terms:
        if exponent < 0 or exponent % 2:
            raise NormalizationError(
                f"t^{lv - lu} * ({r}) has the exponent {exponent}; expected only even nonnegative ones"
            )
        coeffs[exponent // 2] = c
    if not coeffs:
        return IntPolynomial.zero()
    return IntPolynomial(tuple(coeffs.get(k, 0) for k in range(max(coeffs) + 1)))


def from_classical_normalization(r_prime: IntPolynomial, lu: int, lv: int) -> LaurentPolynomial:
    """Inverse of to_classical_normalization: t^(lu - lv) R'(t^2)."""
    return LaurentPolynomial(tuple((2 * k + lu - lv, c) for k, c in r_prime.terms()))


@lru_cache(maxsize=None)
def fibonacci(n: int) -> IntPolynomial:
    """Fibonacci polynomial: F_0 = 1, F_1 = t, F_n = t F_{n-1} + F_{n-2}."""
    if n < 0:
        raise ValueError(f"Fibonacci polynomials are indexed by n >= 0, got {n}")
    previous, current = IntPolynomial.one(), T
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, T * current + previous
    return current


def modified_fibonacci(n: int) -> IntPolynomial:
    """t^(n-1) F_{n+1}, defined for n >= 1."""
    if n < 1:
        raise ValueError(f"modified Fibonacci polynomials are indexed by n >= 1, got {n}")
    return fibonacci(n + 1).scale_by_t_power(n - 1)


def product(polys: Sequence[IntPolynomial]) -> IntPolynomial:
    result = IntPolynomial.one()
    for p in polys:
        result = result * p
    return result
