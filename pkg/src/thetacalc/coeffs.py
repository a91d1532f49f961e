"""Exact arithmetic in Z[t], the coefficient ring of the Hall-Littlewood side.

Coefficients elsewhere in the package are plain Python ints.  TPoly mixes
freely with ints in arithmetic and compares equal to the constant it
represents, so generic code can accumulate coefficients without caring which
ring it is in.
"""

from __future__ import annotations

from typing import Iterable, Union

Coeff = Union[int, "TPoly"]


class TPoly:
    """An integer polynomial in the formal variable t.

    Stored densely by ascending power of t with trailing zeros trimmed, so
    equal values have equal representations.  Immutable by convention.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Union[int, Iterable[int]] = ()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        cs = tuple(coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        self.coeffs = cs

    # -- ring structure -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TPoly(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __add__(self, other) -> "TPoly":
        if isinstance(other, int):
            other = TPoly(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return TPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "TPoly":
        return self + (-other if isinstance(other, TPoly) else -TPoly(other))

    def __rsub__(self, other) -> "TPoly":
        return TPoly(other) + (-self)

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, int):
            return TPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = TPoly(1)
        for _ in range(n):
            out = out * self
        return out

    # -- conveniences ----------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def constant(self) -> int:
        """The constant this polynomial equals; error if it involves t."""
        if len(self.coeffs) > 1:
            raise ValueError(f"{self} is not a constant")
        return self.coeffs[0] if self.coeffs else 0

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def evaluate(self, value: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if n == 0 else ("t" if n == 1 else f"t^{n}")
            if n == 0:
                head = str(c)
            elif abs(c) == 1:
                head = mono
            else:
                head = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(head if c > 0 or n == 0 else f"-{head}")
            else:
                parts.append(f"+ {head}" if c > 0 else f"- {head}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TPoly({self})"


T = TPoly((0, 1))
ONE = TPoly(1)


def as_tpoly(c: Coeff) -> TPoly:
    return c if isinstance(c, TPoly) else TPoly(c)


def coeff_is_tfree(c: Coeff) -> bool:
    return isinstance(c, int) or c.is_constant()


def evaluate_coeff(c: Coeff, value: int) -> int:
    return c if isinstance(c, int) else c.evaluate(value)


def one_minus_t_power(n: int) -> TPoly:
    """(1-t)^n."""
    return TPoly((1, -1)) ** n
