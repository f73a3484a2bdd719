"""Exact integer polynomials in one variable ``q``.

Only what the q-counting code needs: ring arithmetic, exact division,
evaluation and the q-integer / q-factorial building blocks.
"""
from __future__ import annotations

from functools import reduce
from typing import Iterable, Sequence


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


class QPolynomial:
    """Polynomial with exact integer coefficients, lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has
    an empty coefficient tuple.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[int, ...] = tuple(coeffs)

    @classmethod
    def one(cls) -> QPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> QPolynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coefficient])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPolynomial:
        """Sum of ``q**e`` over ``exponents`` (repeats accumulate)."""
        coeffs: list[int] = []
        for e in exponents:
            if e >= len(coeffs):
                coeffs.extend([0] * (e + 1 - len(coeffs)))
            coeffs[e] += 1
        return cls(coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coefficients):
            return self.coefficients[exponent]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, int):
            return self.coefficients == QPolynomial((other,)).coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: QPolynomial) -> QPolynomial:
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        return self + QPolynomial(-c for c in other.coefficients)

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    def divmod(self, divisor: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
        """Long division. The divisor's leading coefficient must divide
        every intermediate leading coefficient (true for monic divisors)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        d = divisor.coefficients
        lead = d[-1]
        quot = [0] * max(len(rem) - len(d) + 1, 0)
        for shift in range(len(rem) - len(d), -1, -1):
            c = rem[shift + len(d) - 1]
            if c == 0:
                continue
            if c % lead:
                raise NonExactDivision("leading coefficient not divisible")
            f = c // lead
            quot[shift] = f
            for i, y in enumerate(d):
                rem[shift + i] -= f * y
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, divisor: QPolynomial) -> QPolynomial:
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise NonExactDivision(f"remainder {rem} when dividing {self} by {divisor}")
        return quot

    def __call__(self, q):
        # Horner; works for ints, Fractions, floats
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * q + c
        return acc

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coefficients)!r})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for e, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
                continue
            mono = "q" if e == 1 else f"q^{e}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def q_integer(k: int) -> QPolynomial:
    """``[k]_q = 1 + q + ... + q**(k-1)``; ``[0]_q = 0``."""
    if k < 0:
        raise ValueError("q-integer of a negative number")
    return QPolynomial([1] * k)


def q_factorial(k: int) -> QPolynomial:
    return reduce(lambda acc, i: acc * q_integer(i), range(1, k + 1), QPolynomial.one())


def product(polys: Sequence[QPolynomial] | Iterable[QPolynomial]) -> QPolynomial:
    return reduce(lambda a, b: a * b, polys, QPolynomial.one())
