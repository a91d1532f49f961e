"""Free modules with partition-indexed bases and the raising-operator engine.

An Element is a finite sum of basis monomials with exact integer or Z[t]
coefficients.  A FactorSpec prescribes, for every pair (i, j) with
1 <= i < j <= L, which series factor acts on the raising operator R_ij; the
engine expands the product applied at an index vector, enumerating exponent
assignments column by column from the right.  Processing column j last fixes
position j, so branches die as soon as a final exponent would go negative;
this is what makes the infinite series products terminate.

Raising operators act on the index, never on the monomial, so intermediate
vectors may carry negative entries; only final vectors with a negative entry
are dropped (the convention u_r = 0 for r < 0).
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .coeffs import Coeff, TPoly
from .partitions import IntVec, dominance_key, sort_desc, trim, weight

# factor kinds
ONE = "1"
ELL = "1-R"
HL = "(1-R)/(1-tR)"
HL_INV = "(1-tR)/(1-R)"
GEOM_NEG = "(1+R)^-1"
QSER = "(1-R)/(1+R)"
PLUS = "1+R"

_T_DEPENDENT = {HL, HL_INV}
_MAX_EXP = {ONE: 0, ELL: 1, PLUS: 1}

_CACHE_SIZE = None
if os.environ.get("THETACALC_CACHE"):
    _CACHE_SIZE = int(os.environ["THETACALC_CACHE"])


def _factor_triple(kind: str, n: int) -> tuple[int, int, int] | None:
    """Coefficient of R^n in the named series as (c, a, b) with value
    c * t^a * (t-1)^b; None when the coefficient is zero.  Every series used
    here has coefficients of this shape, which lets the expansion engine
    carry three ints instead of polynomial objects.
    """
    if n == 0:
        return (1, 0, 0)
    if kind == ONE:
        return None
    if kind == ELL:
        return (-1, 0, 0) if n == 1 else None
    if kind == PLUS:
        return (1, 0, 0) if n == 1 else None
    if kind == GEOM_NEG:
        return (-1 if n % 2 else 1, 0, 0)
    if kind == QSER:
        return (-2 if n % 2 else 2, 0, 0)
    if kind == HL:
        # (1-R)/(1-tR) = 1 + sum_{n>=1} t^{n-1} (t-1) R^n
        return (1, n - 1, 1)
    if kind == HL_INV:
        # (1-tR)/(1-R) = 1 - sum_{n>=1} (t-1) R^n
        return (-1, 0, 1)
    raise ValueError(f"unknown factor kind {kind!r}")


@lru_cache(maxsize=None)
def _t_power_poly(a: int, b: int) -> TPoly:
    return TPoly((0,) * a + (1,)) * TPoly((-1, 1)) ** b


def factor_coeff(kind: str, n: int) -> Coeff:
    """Coefficient of R^n in the named series."""
    triple = _factor_triple(kind, n)
    if triple is None:
        return 0
    c, a, b = triple
    if a == 0 and b == 0:
        return c
    return _t_power_poly(a, b) * c


class FactorSpec:
    """Which series factor sits on each pair (i, j), 1 <= i < j <= length."""

    __slots__ = ("length", "factors")

    def __init__(self, length: int, factors: Mapping[tuple[int, int], str] | None = None,
                 default: str = ONE):
        if length < 0:
            raise ValueError("length must be nonnegative")
        self.length = length
        full: dict[tuple[int, int], str] = {}
        for i in range(1, length + 1):
            for j in range(i + 1, length + 1):
                full[(i, j)] = default
        for (i, j), kind in (factors or {}).items():
            if not (1 <= i < j <= length):
                raise ValueError(f"pair {(i, j)} outside 1..{length}")
            full[(i, j)] = kind
        self.factors = full

    @classmethod
    def all_pairs(cls, length: int, kind: str) -> "FactorSpec":
        return cls(length, default=kind)

    @classmethod
    def for_dset(cls, length: int, dset: Iterable[tuple[int, int]]) -> "FactorSpec":
        """R^D: (1-R) off D and (1-R)/(1+R) = (1-R)(1+R)^{-1} on D."""
        spec = cls(length, default=ELL)
        for i, j in dset:
            if j <= length:
                spec.factors[(i, j)] = QSER
            elif not 1 <= i < j:
                raise ValueError(f"bad pair {(i, j)}")
        return spec

    def has_t(self) -> bool:
        return any(kind in _T_DEPENDENT for kind in self.factors.values())

    def key(self) -> tuple:
        return (self.length, tuple(sorted(self.factors.items())))


def expand_raising_raw(spec: FactorSpec, alpha: Sequence[int]) -> dict[IntVec, Coeff]:
    """Expand the product at alpha; keys are final vectors of length spec.length.

    Vectors with any negative final component are dropped.  No sorting or
    trimming is applied: callers in a D-set context keep raw positions.
    """
    L = spec.length
    alpha = tuple(alpha)
    if len(alpha) > L:
        raise ValueError(f"working length {L} < l(alpha) = {len(alpha)}")
    base = alpha + (0,) * (L - len(alpha))

    # Dynamic programming column by column, j = L down to 2.  After column j
    # is processed positions j..L are final, so branches reaching the same
    # vector are merged; coefficients are tracked as {(a, b): c} meaning
    # sum of c * t^a * (t-1)^b.
    Parts = dict[tuple[int, int], int]
    states: dict[tuple[int, ...], Parts] = {base: {(0, 0): 1}}

    for j in range(L, 1, -1):
        active = [(i, spec.factors[(i, j)]) for i in range(1, j)
                  if spec.factors[(i, j)] != ONE]
        new: dict[tuple[int, ...], Parts] = {}

        def merge(vec: tuple[int, ...], parts: Parts, c: int, a: int, b: int):
            dst = new.setdefault(vec, {})
            for (a0, b0), c0 in parts.items():
                key = (a0 + a, b0 + b)
                dst[key] = dst.get(key, 0) + c0 * c

        for vec, parts in states.items():
            avail = vec[j - 1]
            if avail < 0:
                continue
            if not active:
                merge(vec, parts, 1, 0, 0)
                continue

            def distribute(idx: int, budget: int, v: list[int],
                           c: int, a: int, b: int):
                if idx == len(active):
                    merge(tuple(v), parts, c, a, b)
                    return
                i, kind = active[idx]
                cap = _MAX_EXP.get(kind)
                top = budget if cap is None else min(budget, cap)
                for n in range(top + 1):
                    triple = _factor_triple(kind, n)
                    if triple is None:
                        continue
                    if n:
                        v2 = v.copy()
                        v2[i - 1] += n
                        v2[j - 1] -= n
                        distribute(idx + 1, budget - n, v2,
                                   c * triple[0], a + triple[1], b + triple[2])
                    else:
                        distribute(idx + 1, budget, v, c, a, b)

            distribute(0, avail, list(vec), 1, 0, 0)

        states = new

    out: dict[IntVec, Coeff] = {}
    for vec, parts in states.items():
        if vec and vec[0] < 0:
            continue
        if set(parts) == {(0, 0)}:
            total: Coeff = parts[(0, 0)]
        else:
            total = TPoly()
            for (a, b), c in parts.items():
                if c:
                    total = total + _t_power_poly(a, b) * c
        if total:
            out[vec] = total
    return out


def expand_raising(spec: FactorSpec, alpha: Sequence[int], basis: str,
                   k: int | None = None) -> "Element":
    """Expand and collect into a monomial basis: final vectors are sorted
    descending and trimmed, vectors with a negative component dropped.

    Rejects targets whose coefficient ring is t-free when the spec carries a
    t-dependent factor.
    """
    if basis in ("u", "w") and spec.has_t():
        raise ValueError(f"t-dependent factors cannot land in the t-free basis {basis!r}")
    terms: dict[IntVec, Coeff] = {}
    for vec, coeff in expand_raising_raw(spec, alpha).items():
        if any(a < 0 for a in vec):
            continue
        idx = trim(sort_desc(vec))
        prev = terms.get(idx)
        total = coeff if prev is None else prev + coeff
        if total:
            terms[idx] = total
        elif prev is not None:
            del terms[idx]
    return Element(terms, basis, k)


# ---------------------------------------------------------------------------
# elements


class Element:
    """A finite formal sum of basis monomials indexed by integer tuples."""

    __slots__ = ("terms", "basis", "k")

    def __init__(self, terms: Mapping[IntVec, Coeff] | None = None,
                 basis: str = "u", k: int | None = None):
        self.terms = {idx: c for idx, c in (terms or {}).items() if c}
        self.basis = basis
        self.k = k

    @classmethod
    def zero(cls, basis: str = "u", k: int | None = None) -> "Element":
        return cls({}, basis, k)

    @classmethod
    def monomial(cls, idx: Sequence[int], basis: str = "u", k: int | None = None,
                 coeff: Coeff = 1) -> "Element":
        return cls({tuple(idx): coeff}, basis, k)

    def _check_compatible(self, other: "Element"):
        if self.basis != other.basis or self.k != other.k:
            raise ValueError(
                f"mixing bases: {self.basis}/k={self.k} with {other.basis}/k={other.k}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return (self.basis == other.basis and self.k == other.k
                and self.terms == other.terms)

    def __add__(self, other: "Element") -> "Element":
        self._check_compatible(other)
        out = dict(self.terms)
        for idx, c in other.terms.items():
            new = out.get(idx, 0) + c
            if new:
                out[idx] = new
            else:
                out.pop(idx, None)
        return Element(out, self.basis, self.k)

    def __neg__(self) -> "Element":
        return Element({idx: -c for idx, c in self.terms.items()}, self.basis, self.k)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c: Coeff) -> "Element":
        if not c:
            return Element.zero(self.basis, self.k)
        return Element({idx: coeff * c for idx, coeff in self.terms.items()},
                       self.basis, self.k)

    def coefficient(self, idx: Sequence[int]) -> Coeff:
        return self.terms.get(tuple(idx), 0)

    def support(self) -> list[IntVec]:
        return sorted(self.terms, key=dominance_key)

    def graded_pieces(self) -> dict[int, "Element"]:
        out: dict[int, dict] = {}
        for idx, c in self.terms.items():
            out.setdefault(weight(idx), {})[idx] = c
        return {d: Element(terms, self.basis, self.k) for d, terms in sorted(out.items())}

    def map_coeffs(self, fn: Callable[[Coeff], Coeff]) -> "Element":
        return Element({idx: fn(c) for idx, c in self.terms.items()}, self.basis, self.k)

    def retag(self, basis: str, k: int | None = None) -> "Element":
        return Element(self.terms, basis, k)

    def sorted_terms(self) -> list[tuple[IntVec, Coeff]]:
        """Dominance-then-lexicographic order, most dominant first per degree."""
        return sorted(self.terms.items(), key=lambda ic: dominance_key(ic[0]))

    def to_json(self) -> dict:
        rows = []
        for idx, c in self.sorted_terms():
            coeffs = list(TPoly(c).coeffs) if isinstance(c, int) else list(c.coeffs)
            rows.append({"index": list(idx), "coeff": coeffs or [0]})
        out = {"basis": self.basis, "terms": rows}
        if self.k is not None:
            out["k"] = self.k
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for idx, c in self.sorted_terms():
            mono = f"{self.basis}[{','.join(map(str, idx))}]"
            if isinstance(c, TPoly) and not c.is_constant():
                bits.append(f"+ ({c})*{mono}" if bits else f"({c})*{mono}")
                continue
            cval = c if isinstance(c, int) else c.constant()
            if abs(cval) == 1:
                frag = mono
            else:
                frag = f"{abs(cval)}*{mono}"
            if not bits:
                bits.append(frag if cval > 0 else f"-{frag}")
            else:
                bits.append(f"+ {frag}" if cval > 0 else f"- {frag}")
        return " ".join(bits)

    def __repr__(self) -> str:
        return f"Element({self})"


def monomial_product(e1: Element, e2: Element) -> Element:
    """Product in a free monomial basis: indices concatenate and re-sort."""
    e1._check_compatible(e2)
    out: dict[IntVec, Coeff] = {}
    for i1, c1 in e1.terms.items():
        for i2, c2 in e2.terms.items():
            idx = sort_desc(i1 + i2)
            new = out.get(idx, 0) + c1 * c2
            if new:
                out[idx] = new
            else:
                out.pop(idx, None)
    return Element(out, e1.basis, e1.k)


def multiply_monomial(e: Element, r: int) -> Element:
    """Multiply by the generator of degree r: every index gains a part r."""
    if r < 0:
        raise ValueError("generator degree must be nonnegative")
    if r == 0:
        return e
    return Element({sort_desc(idx + (r,)): c for idx, c in e.terms.items()},
                   e.basis, e.k)


def change_basis(e: Element, expansion: Callable[[IntVec], Element] | Mapping[IntVec, Element],
                 out_basis: str) -> Element:
    """Rewrite e (in a monomial basis) in the distinguished basis whose
    monomial expansions are unitriangular with respect to dominance.

    Back-substitution in a linear extension of dominance: the lex-least index
    in the support is dominance-minimal, so its coefficient is already a
    coefficient in the distinguished basis.
    """
    if isinstance(expansion, Mapping):
        table = expansion
        expand = table.__getitem__
    else:
        expand = expansion
    result: dict[IntVec, Coeff] = {}
    for _, piece in e.graded_pieces().items():
        rest = piece
        while rest:
            idx = min(rest.terms)
            c = rest.terms[idx]
            try:
                exp = expand(idx)
            except KeyError:
                raise KeyError(f"no expansion available for monomial {idx}") from None
            if exp.coefficient(idx) != 1:
                raise ValueError(f"expansion of {idx} is not unitriangular")
            result[idx] = c
            rest = rest - exp.scale(c)
    return Element(result, out_basis, e.k)


# ---------------------------------------------------------------------------
# Pfaffian


def pfaffian(matrix: Sequence[Sequence[Element]],
             mul: Callable[[Element, Element], Element]) -> Element:
    """Pfaffian of an antisymmetric matrix of ring elements, by expansion
    along the first row."""
    n = len(matrix)
    if n % 2:
        raise ValueError("Pfaffian needs even size")
    if n == 0:
        raise ValueError("empty matrix")
    basis, k = matrix[0][1].basis, matrix[0][1].k
    for i in range(n):
        if len(matrix[i]) != n:
            raise ValueError("matrix is not square")
        if matrix[i][i]:
            raise ValueError("nonzero diagonal")
        for j in range(i + 1, n):
            if matrix[i][j] != -matrix[j][i]:
                raise ValueError(f"not antisymmetric at ({i},{j})")

    def rec(rows: tuple[int, ...]) -> Element:
        if not rows:
            return Element.monomial((), basis, k)
        first = rows[0]
        total = Element.zero(basis, k)
        for pos in range(1, len(rows)):
            j = rows[pos]
            rest = rows[1:pos] + rows[pos + 1:]
            term = mul(matrix[first][j], rec(rest))
            total = total + (term if pos % 2 == 1 else -term)
        return total

    return rec(tuple(range(n)))


def cached(fn):
    """functools cache honouring the THETACALC_CACHE size env var."""
    return lru_cache(maxsize=_CACHE_SIZE)(fn)
