"""Exact sparse polynomials in x_i, alpha_i, beta_i with x-degree truncation.

Coefficients are Python ints, so they are exact at any magnitude.  A
TruncatedPolynomial drops every monomial whose total degree in the x
variables exceeds its cap; addition and multiplication are only defined
between polynomials with equal caps.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class CapMismatch(ValueError):
    """Operands carry different truncation caps."""


class CapTooSmall(ValueError):
    """The requested truncation cannot hold the object being built."""


def _norm(group) -> tuple[tuple[int, int], ...]:
    if isinstance(group, Mapping):
        items: Iterable[tuple[int, int]] = group.items()
    else:
        items = group
    acc: dict[int, int] = {}
    for idx, exp in items:
        if exp:
            acc[idx] = acc.get(idx, 0) + exp
    for idx, exp in acc.items():
        if idx < 1 or exp < 0:
            raise ValueError(f"bad variable power ({idx}, {exp})")
    return tuple(sorted((i, e) for i, e in acc.items() if e))


class Monomial:
    """A product of powers of x_i, alpha_i, beta_i (all indices >= 1)."""

    __slots__ = ("x", "a", "b", "_hash")

    def __init__(self, x=(), a=(), b=()):
        self.x = _norm(x)
        self.a = _norm(a)
        self.b = _norm(b)
        self._hash = hash((self.x, self.a, self.b))

    @property
    def x_degree(self) -> int:
        return sum(e for _, e in self.x)

    @property
    def alpha_degree(self) -> int:
        return sum(e for _, e in self.a)

    @property
    def beta_degree(self) -> int:
        return sum(e for _, e in self.b)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.x + other.x, self.a + other.a, self.b + other.b)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Monomial)
            and self.x == other.x
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return (self.x, self.a, self.b)

    def __str__(self) -> str:
        bits = []
        for sym, group in (("x", self.x), ("a", self.a), ("b", self.b)):
            for idx, exp in group:
                bits.append(f"{sym}{idx}" + (f"^{exp}" if exp > 1 else ""))
        return " ".join(bits) if bits else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


MONOMIAL_ONE = Monomial()


def x_mono(i: int, e: int = 1) -> Monomial:
    return Monomial(x=((i, e),))


def alpha_mono(i: int, e: int = 1) -> Monomial:
    return Monomial(a=((i, e),))


def beta_mono(i: int, e: int = 1) -> Monomial:
    return Monomial(b=((i, e),))


class TruncatedPolynomial:
    """Integer combination of monomials, truncated at an x-degree cap."""

    __slots__ = ("terms", "cap")

    def __init__(self, terms: Mapping[Monomial, int], cap: int):
        if cap < 0:
            raise CapTooSmall(f"cap must be nonnegative, got {cap}")
        self.cap = cap
        self.terms = {
            m: c for m, c in terms.items() if c != 0 and m.x_degree <= cap
        }

    @classmethod
    def zero(cls, cap: int) -> "TruncatedPolynomial":
        return cls({}, cap)

    @classmethod
    def const(cls, value: int, cap: int) -> "TruncatedPolynomial":
        return cls({MONOMIAL_ONE: value}, cap)

    @classmethod
    def monomial(cls, m: Monomial, cap: int, coeff: int = 1) -> "TruncatedPolynomial":
        return cls({m: coeff}, cap)

    def _check_cap(self, other: "TruncatedPolynomial") -> None:
        if self.cap != other.cap:
            raise CapMismatch(f"caps differ: {self.cap} vs {other.cap}")

    def __add__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        self._check_cap(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return TruncatedPolynomial(terms, self.cap)

    def __neg__(self) -> "TruncatedPolynomial":
        return TruncatedPolynomial({m: -c for m, c in self.terms.items()}, self.cap)

    def __sub__(self, other: "TruncatedPolynomial") -> "TruncatedPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedPolynomial":
        if isinstance(other, int):
            return TruncatedPolynomial(
                {m: c * other for m, c in self.terms.items()}, self.cap
            )
        self._check_cap(other)
        cap = self.cap
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            d1 = m1.x_degree
            for m2, c2 in other.terms.items():
                if d1 + m2.x_degree > cap:
                    continue
                m = m1 * m2
                terms[m] = terms.get(m, 0) + c1 * c2
        return TruncatedPolynomial(terms, cap)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedPolynomial)
            and self.cap == other.cap
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.cap, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def x_graded_piece(self, degree: int) -> "TruncatedPolynomial":
        return TruncatedPolynomial(
            {m: c for m, c in self.terms.items() if m.x_degree == degree}, self.cap
        )

    def serialize(self) -> str:
        lines = [
            f"{c} * {m}"
            for m, c in sorted(self.terms.items(), key=lambda mc: mc[0].sort_key())
        ]
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"TruncatedPolynomial(<{len(self.terms)} terms>, cap={self.cap})"


def poly_add(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    return a + b


def poly_mul(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    return a * b
