"""Dense integer polynomials in one variable ``q``."""

from __future__ import annotations

import json
from itertools import zip_longest
from typing import Iterable


class IntPolynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``q**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def reverse(self, degree: int) -> "IntPolynomial":
        """``q**degree * self(1/q)``; requires ``degree >= self.degree``."""
        if degree < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [0] * (degree + 1 - len(self.coeffs))
        return IntPolynomial(reversed(padded))

    def __call__(self, value):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls(json.loads(text))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(("+ " if a > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
Q = IntPolynomial([0, 1])
Q_MINUS_ONE = IntPolynomial([-1, 1])
