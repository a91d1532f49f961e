"""Sparse exact multivariate polynomials and the generating series built on them.

Variables are (kind, index) pairs such as ("x", 1), ("y", 2) or the lone
("t", 0); a monomial is a sorted tuple of (variable, exponent) pairs with
positive exponents.  All arithmetic is exact over Z.  Generating functions in
the auxiliary variable z are handled as lists of MPoly coefficients computed
exactly up to a degree cap, which is where the "truncation" of the series
machinery lives; MPoly itself is never truncated.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Sequence

Var = tuple[str, int]
Mono = tuple[tuple[Var, int], ...]

TVAR: Var = ("t", 0)


def xvar(i: int) -> Var:
    return ("x", i)


def yvar(j: int) -> Var:
    return ("y", j)


def xvars(m: int, start: int = 1) -> tuple[Var, ...]:
    return tuple(("x", i) for i in range(start, start + m))


def yvars(k: int) -> tuple[Var, ...]:
    return tuple(("y", j) for j in range(1, k + 1))


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    exps: dict[Var, int] = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


class MPoly:
    """An element of Z[variables], stored as {monomial: int}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    # -- constructors ----------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls({(): c})

    @classmethod
    def var(cls, v: Var, exp: int = 1, coeff: int = 1) -> "MPoly":
        if exp == 0:
            return cls.const(coeff)
        return cls({(((v), exp),): coeff})

    @classmethod
    def monomial(cls, pairs: Iterable[tuple[Var, int]], coeff: int = 1) -> "MPoly":
        mono = tuple(sorted((v, e) for v, e in pairs if e))
        return cls({mono: coeff})

    # -- ring structure --------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            new = out.get(m, 0) + c
            if new:
                out[m] = new
            else:
                out.pop(m, None)
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return MPoly.const(other) + (-self)

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, int):
            if other == 0:
                return MPoly()
            return MPoly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                new = out.get(m, 0) + c1 * c2
                if new:
                    out[m] = new
                else:
                    out.pop(m, None)
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure -------------------------------------------------------

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def as_int(self) -> int:
        if not self.terms:
            return 0
        if set(self.terms) == {()}:
            return self.terms[()]
        raise ValueError(f"not a constant: {self}")

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e for _, e in m) for m in self.terms}
        return len(degs) <= 1

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v, _ in m}

    def substitute_zero(self, var: Var) -> "MPoly":
        """Set one variable to 0."""
        return MPoly({m: c for m, c in self.terms.items()
                      if all(v != var for v, _ in m)})

    def substitute_int(self, var: Var, value: int) -> "MPoly":
        out = MPoly()
        for m, c in self.terms.items():
            rest = tuple(p for p in m if p[0] != var)
            exp = next((e for v, e in m if v == var), 0)
            out = out + MPoly({rest: c * value ** exp})
        return out

    def swap_vars(self, a: Var, b: Var) -> "MPoly":
        def swap(v: Var) -> Var:
            return b if v == a else (a if v == b else v)

        out: dict[Mono, int] = {}
        for m, c in self.terms.items():
            mono = tuple(sorted((swap(v), e) for v, e in m))
            out[mono] = out.get(mono, 0) + c
        return MPoly(out)

    def is_symmetric_in(self, vs: Sequence[Var]) -> bool:
        """Invariance under all adjacent transpositions of the listed variables."""
        return all(self.swap_vars(vs[i], vs[i + 1]) == self
                   for i in range(len(vs) - 1))

    def exponent_of(self, mono_vars: Sequence[Var], m: Mono) -> tuple[int, ...]:
        d = dict(m)
        return tuple(d.get(v, 0) for v in mono_vars)

    def coefficient_of(self, pairs: Iterable[tuple[Var, int]]) -> "MPoly":
        """The coefficient of a monomial in some variables, a polynomial in the rest."""
        want = {v: e for v, e in pairs}
        out: dict[Mono, int] = {}
        for m, c in self.terms.items():
            ok = True
            rest = []
            for v, e in m:
                if v in want:
                    if want[v] != e:
                        ok = False
                        break
                else:
                    rest.append((v, e))
            if ok and all(any(v2 == v and e2 == e for v2, e2 in m)
                          for v, e in want.items()):
                out[tuple(rest)] = out.get(tuple(rest), 0) + c
        return MPoly(out)

    # -- io ----------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Mono, int]]:
        return sorted(self.terms.items())

    def to_json(self, variables: Sequence[Var]) -> dict:
        vs = list(variables)
        rows = []
        for m, c in sorted(self.terms.items(),
                           key=lambda mc: self.exponent_of(vs, mc[0]), reverse=True):
            extra = [v for v, _ in m if v not in vs]
            if extra:
                raise ValueError(f"unlisted variables {extra} in polynomial")
            rows.append({"exponents": list(self.exponent_of(vs, m)), "coeff": c})
        return {"variables": [f"{kind}{idx}" if kind != "t" else "t"
                              for kind, idx in vs],
                "terms": rows}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.sorted_terms():
            body = "*".join(
                (f"{kind}{idx}" if kind != "t" else "t") + (f"^{e}" if e > 1 else "")
                for (kind, idx), e in m)
            if not body:
                frag = str(abs(c))
            elif abs(c) == 1:
                frag = body
            else:
                frag = f"{abs(c)}*{body}"
            if not bits:
                bits.append(frag if c > 0 else f"-{frag}")
            else:
                bits.append(f"+ {frag}" if c > 0 else f"- {frag}")
        return " ".join(bits)

    def __repr__(self) -> str:
        return f"MPoly({self})"


def tpoly_to_mpoly(tp) -> MPoly:
    """Embed a Z[t] coefficient as an MPoly in the variable t."""
    from .coeffs import TPoly

    if isinstance(tp, int):
        return MPoly.const(tp)
    out = MPoly()
    for n, c in enumerate(tp.coeffs):
        if c:
            out = out + MPoly.var(TVAR, n, c)
    return out


# ---------------------------------------------------------------------------
# generating series in z, exact up to a degree cap


def _series_mul(a: list[MPoly], b: list[MPoly], cap: int) -> list[MPoly]:
    out = [MPoly() for _ in range(cap + 1)]
    for i, ai in enumerate(a):
        if i > cap or not ai:
            continue
        for j, bj in enumerate(b):
            if i + j > cap:
                break
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def q_series(x_list: Sequence[Var], cap: int, with_t: bool = True) -> list[MPoly]:
    """Coefficients of z^0..z^cap in prod_i (1 - x_i t z)/(1 - x_i z).

    With with_t=False this is the t=0 specialisation, the h-series
    prod 1/(1 - x_i z).
    """
    one_minus_t = (MPoly.const(1) - MPoly.var(TVAR)) if with_t else MPoly.const(1)
    series = [MPoly.const(1)] + [MPoly() for _ in range(cap)]
    for v in x_list:
        fac = [MPoly.const(1)] + [MPoly.var(v, n) * one_minus_t
                                  for n in range(1, cap + 1)]
        series = _series_mul(series, fac, cap)
    return series


def h_series(x_list: Sequence[Var], cap: int) -> list[MPoly]:
    return q_series(x_list, cap, with_t=False)


def e_series(x_list: Sequence[Var], cap: int) -> list[MPoly]:
    """Coefficients of z^0..z^cap in prod_i (1 + x_i z)."""
    series = [MPoly.const(1)] + [MPoly() for _ in range(cap)]
    for v in x_list:
        fac = [MPoly.const(1), MPoly.var(v)] + [MPoly() for _ in range(cap - 1)]
        series = _series_mul(series, fac, cap)
    return series


def theta_series(x_list: Sequence[Var], y_list: Sequence[Var], cap: int) -> list[MPoly]:
    """Coefficients of z^0..z^cap in prod_i (1+x_i z)/(1-x_i z) * prod_j (1+y_j z)."""
    series = [MPoly.const(1)] + [MPoly() for _ in range(cap)]
    for v in x_list:
        fac = [MPoly.const(1)] + [MPoly.var(v, n) * 2 for n in range(1, cap + 1)]
        series = _series_mul(series, fac, cap)
    for w in y_list:
        fac = [MPoly.const(1), MPoly.var(w)] + [MPoly() for _ in range(cap - 1)]
        series = _series_mul(series, fac, cap)
    return series


@cache
def q_r(r: int, m: int, start: int = 1) -> MPoly:
    """q_r(x_1..x_m; t), exact."""
    if r < 0:
        return MPoly()
    return q_series(xvars(m, start), r)[r]


@cache
def q_r_tminus1(r: int, m: int, start: int = 1) -> MPoly:
    """q_r(x; -1), the one-row Schur Q-polynomial."""
    return q_r(r, m, start).substitute_int(TVAR, -1)


def series_coefficients(kind: str, m: int, cap: int, k: int = 0) -> list[MPoly]:
    """Public entry: the z-series coefficients of a named generating product.

    kind is one of 'q' (Hall-Littlewood, carries t), 'h', 'e', 'theta'
    (theta uses m x-variables and k y-variables).
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if kind == "q":
        return q_series(xvars(m), cap)
    if kind == "h":
        return h_series(xvars(m), cap)
    if kind == "e":
        return e_series(xvars(m), cap)
    if kind == "theta":
        return theta_series(xvars(m), yvars(k), cap)
    raise ValueError(f"unknown series kind {kind!r}")
