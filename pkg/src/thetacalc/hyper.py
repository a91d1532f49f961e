"""Signed permutations, the nilCoxeter algebra of the hyperoctahedral group,
type C Stanley symmetric functions, Billey-Haiman Schubert polynomials, the
dictionary between k-strict partitions and k-Grassmannian elements, skew
elements, compatible pairs and unimodal factorizations.

A signed permutation is a window tuple (w(1), ..., w(n)) of nonzero signed
integers whose absolute values permute 1..n.  Right multiplication by s_i
(i >= 1) swaps window positions i, i+1; right multiplication by s_0 negates
the first window entry.  The length is the minimal word length in the
generators s_0, ..., s_{n-1}.
"""

from __future__ import annotations

from functools import cache
from typing import Iterator, Sequence

from .mpoly import MPoly, Var, xvars, yvars
from .partitions import IntVec, check_k_strict, k_strict_in_rect, trim, weight

Window = tuple[int, ...]


# ---------------------------------------------------------------------------
# group arithmetic


def check_window(w: Sequence[int]) -> Window:
    w = tuple(w)
    if sorted(abs(a) for a in w) != list(range(1, len(w) + 1)) or 0 in w:
        raise ValueError(f"not a signed permutation window: {w}")
    return w


def identity_window(n: int) -> Window:
    return tuple(range(1, n + 1))


def extend_window(w: Sequence[int], n: int) -> Window:
    w = check_window(w)
    if n < len(w):
        raise ValueError(f"cannot shrink window {w} to n = {n}")
    return w + tuple(range(len(w) + 1, n + 1))


def apply_value(w: Window, v: int) -> int:
    """w(v) for v in {-n..-1, 1..n}."""
    return w[v - 1] if v > 0 else -w[-v - 1]


def multiply(w: Sequence[int], v: Sequence[int]) -> Window:
    """(wv)(i) = w(v(i)); windows auto-extend to a common n."""
    n = max(len(w), len(v))
    w, v = extend_window(w, n), extend_window(v, n)
    return tuple(apply_value(w, v[i]) for i in range(n))


def inverse(w: Sequence[int]) -> Window:
    w = check_window(w)
    out = [0] * len(w)
    for i, val in enumerate(w, start=1):
        if val > 0:
            out[val - 1] = i
        else:
            out[-val - 1] = -i
    return tuple(out)


def apply_right(w: Window, i: int) -> Window:
    """w * s_i."""
    if i == 0:
        return (-w[0],) + w[1:]
    if not 1 <= i < len(w):
        raise ValueError(f"generator s_{i} outside B_{len(w)}")
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def length(w: Sequence[int]) -> int:
    """Inversions plus the sum of the absolute values of the negative entries."""
    w = check_window(w)
    inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
              if w[i] > w[j])
    return inv + sum(-a for a in w if a < 0)


def right_descents(w: Window) -> list[int]:
    out = []
    if w and w[0] < 0:
        out.append(0)
    out.extend(i for i in range(1, len(w)) if w[i - 1] > w[i])
    return out


def greedy_word(w: Sequence[int]) -> tuple[int, ...]:
    """A reduced word found by repeatedly removing the first right descent;
    its length cross-checks the inversion count."""
    w = check_window(w)
    word: list[int] = []
    while True:
        ds = right_descents(w)
        if not ds:
            break
        word.append(ds[0])
        w = apply_right(w, ds[0])
    return tuple(reversed(word))


def word_to_window(word: Sequence[int], n: int) -> Window:
    w = identity_window(n)
    for a in word:
        w = apply_right(w, a)
    return w


def is_reduced_word(word: Sequence[int], w: Sequence[int]) -> bool:
    w = check_window(w)
    return len(word) == length(w) and word_to_window(word, len(w)) == w


def group_ops(w: Sequence[int], v: Sequence[int]) -> dict:
    """Product, inverses, lengths and descent sets of a pair of elements."""
    w, v = check_window(w), check_window(v)
    n = max(len(w), len(v))
    w, v = extend_window(w, n), extend_window(v, n)
    lw = length(w)
    assert lw == len(greedy_word(w)), "length formula vs word reduction"
    return {
        "product": multiply(w, v),
        "inverse": (inverse(w), inverse(v)),
        "length": (lw, length(v)),
        "descents": (tuple(right_descents(w)), tuple(right_descents(v))),
    }


def reduced_words(w: Sequence[int], mode: str = "list"):
    """All reduced words for w ('list' yields tuples; 'count' returns the number)."""
    w = check_window(w)

    @cache
    def count(u: Window) -> int:
        if not right_descents(u):
            return 1
        return sum(count(apply_right(u, i)) for i in right_descents(u))

    if mode == "count":
        return count(w)
    if mode != "list":
        raise ValueError(f"unknown mode {mode!r}")

    def gen(u: Window) -> Iterator[tuple[int, ...]]:
        ds = right_descents(u)
        if not ds:
            yield ()
            return
        for i in ds:
            for word in gen(apply_right(u, i)):
                yield word + (i,)

    return gen(w)


# ---------------------------------------------------------------------------
# the Grassmannian dictionary


def is_k_grassmannian(w: Sequence[int], k: int) -> bool:
    """Unique descent at k (identity counts as Grassmannian for any k)."""
    w = check_window(w)
    return all(d == k for d in right_descents(w))


def grassmannian_element(lam: Sequence[int], k: int, n: int) -> Window:
    """The k-Grassmannian element w_lam of B_n for lam inside the
    (n-k) x (n+k) rectangle.

    Negative entries are the parts of lam^1 = (lam_i - k > 0); the first k
    entries u_k < ... < u_1 solve alpha_i = u_i + i - k - 1 + #{j : zeta_j > u_i}
    where alpha_i is the length of column i of lam and zeta = lam^1.
    """
    lam = check_k_strict(lam, k)
    if len(lam) > n - k or (lam and lam[0] > n + k):
        raise ValueError(f"{lam} does not fit in the ({n - k})x({n + k}) rectangle")
    zeta = tuple(a - k for a in lam if a > k)
    if any(z > n for z in zeta):
        raise ValueError(f"{lam} needs negative entries beyond {n}")
    from .partitions import column_height

    used = set(zeta)
    u = []
    for i in range(1, k + 1):
        alpha_i = column_height(lam, i)
        cand = None
        for val in range(1, n + 1):
            if val in used:
                continue
            if val + i - k - 1 + sum(1 for z in zeta if z > val) == alpha_i:
                cand = val
                break
        if cand is None:
            raise ValueError(f"no window value matches column {i} of {lam}")
        used.add(cand)
        u.append(cand)
    rest = sorted(v for v in range(1, n + 1) if v not in used and v not in set(u))
    window = tuple(reversed(u)) + tuple(-z for z in zeta) + tuple(rest)
    w = check_window(window)
    if not is_k_grassmannian(w, k):
        raise ValueError(f"construction failed for {lam}: got {w}")
    return w


def partition_of(w: Sequence[int], k: int) -> IntVec:
    """The k-strict partition encoded by a k-Grassmannian element."""
    w = check_window(w)
    if not is_k_grassmannian(w, k):
        raise ValueError(f"{w} is not {k}-Grassmannian")
    zeta = tuple(sorted((-a for a in w if a < 0), reverse=True))
    u = tuple(w[k - 1 - i] for i in range(k))  # u_1 = w(k), ..., u_k = w(1)
    alphas = [u[i - 1] + i - k - 1 + sum(1 for z in zeta if z > u[i - 1])
              for i in range(1, k + 1)]
    rows = len(zeta)
    lam = [k + z for z in zeta]
    height = alphas[0] if alphas else rows
    for r in range(rows + 1, height + 1):
        lam.append(sum(1 for a in alphas if a >= r))
    out = check_k_strict(tuple(lam), k)
    return out


def grassmannian_range(k: int, n: int) -> list[IntVec]:
    """P(k,n): the k-strict partitions in the (n-k) x (n+k) rectangle."""
    return k_strict_in_rect(k, n - k, n + k)


# ---------------------------------------------------------------------------
# the nilCoxeter algebra


class NilElement:
    """A finite sum of basis elements u_w with polynomial coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Window, MPoly] | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, n: int) -> "NilElement":
        return cls(n, {identity_window(n): MPoly.const(1)})

    def times_generator(self, i: int, coeff: MPoly) -> "NilElement":
        """Multiply on the right by coeff * u_i (terms with a descent die)."""
        out: dict[Window, MPoly] = {}
        for w, c in self.terms.items():
            if i not in right_descents(w):
                w2 = apply_right(w, i)
                prev = out.get(w2)
                out[w2] = c * coeff if prev is None else prev + c * coeff
        return NilElement(self.n, out)

    def times_factor(self, i: int, coeff: MPoly) -> "NilElement":
        """Multiply on the right by (1 + coeff * u_i)."""
        out = dict(self.terms)
        for w2, c in self.times_generator(i, coeff).terms.items():
            prev = out.get(w2)
            total = c if prev is None else prev + c
            if total:
                out[w2] = total
            else:
                out.pop(w2, None)
        return NilElement(self.n, out)

    def coefficient(self, w: Window) -> MPoly:
        return self.terms.get(w, MPoly())

    def __eq__(self, other) -> bool:
        return isinstance(other, NilElement) and self.n == other.n \
            and self.terms == other.terms

    def __mul__(self, other: "NilElement") -> "NilElement":
        if self.n != other.n:
            raise ValueError("mixed ambient ranks")
        out: dict[Window, MPoly] = {}
        for w1, c1 in self.terms.items():
            l1 = length(w1)
            for w2, c2 in other.terms.items():
                if length(w2) + l1 == length(multiply(w1, w2)):
                    w = multiply(w1, w2)
                    c = c1 * c2
                    prev = out.get(w)
                    total = c if prev is None else prev + c
                    if total:
                        out[w] = total
                    else:
                        out.pop(w, None)
        return NilElement(self.n, out)


def c_factor(n: int, var: Var) -> NilElement:
    """C(x) = (1+x u_{n-1})...(1+x u_1)(1+2x u_0)(1+x u_1)...(1+x u_{n-1})."""
    x = MPoly.var(var)
    out = NilElement.one(n)
    for i in range(n - 1, 0, -1):
        out = out.times_factor(i, x)
    out = out.times_factor(0, x * 2)
    for i in range(1, n):
        out = out.times_factor(i, x)
    return out


def a_factor(n: int, i: int, var: Var) -> NilElement:
    """A_i(y) = (1+y u_{n-1})(1+y u_{n-2})...(1+y u_i)."""
    y = MPoly.var(var)
    out = NilElement.one(n)
    for j in range(n - 1, i - 1, -1):
        out = out.times_factor(j, y)
    return out


@cache
def _c_product(n: int, vs: tuple[Var, ...]) -> NilElement:
    out = NilElement.one(n)
    for v in vs:
        out = out * c_factor(n, v)
    return out


def stanley_c_vars(w: Sequence[int], vs: tuple[Var, ...]) -> MPoly:
    w = check_window(w)
    return _c_product(len(w), vs).coefficient(w)


def stanley_c(w: Sequence[int], m: int) -> MPoly:
    """F_w(x_1..x_m): the coefficient of u_w in C(x_1)...C(x_m)."""
    return stanley_c_vars(w, xvars(m))


@cache
def _bh_product(n: int, m: int) -> NilElement:
    out = _c_product(n, xvars(m))
    for i in range(1, n):
        out = out * a_factor(n, i, ("y", i))
    return out


def schubert_bh(w: Sequence[int], m: int, n: int | None = None) -> MPoly:
    """The Billey-Haiman type C Schubert polynomial of w in x_1..x_m and
    y_1..y_{n-1}: the coefficient of u_w in C(x_1)...C(x_m) A_1(y_1)...A_{n-1}(y_{n-1})."""
    w = check_window(w)
    if n is not None:
        w = extend_window(w, n)
    return _bh_product(len(w), m).coefficient(w)


@cache
def _a_product(n: int, vs: tuple[Var, ...]) -> NilElement:
    out = NilElement.one(n)
    for v in vs:
        out = out * a_factor(n, 1, v)
    return out


def stanley_a(perm: Sequence[int], m: int) -> MPoly:
    """G_omega(x_1..x_m) for an unsigned permutation: the coefficient of
    u_omega in A_1(x_1) A_1(x_2) ... A_1(x_m)."""
    w = check_window(perm)
    if any(a < 0 for a in w):
        raise ValueError("type A Stanley functions take unsigned permutations")
    return _a_product(len(w), xvars(m)).coefficient(w)


# ---------------------------------------------------------------------------
# skew elements, compatible pairs, unimodal factorizations


def compatible_pair(lam: Sequence[int], mu: Sequence[int], k: int,
                    n: int | None = None) -> bool:
    """w_lam exceeds w_mu in weak Bruhat order: l(w_lam w_mu^{-1}) = |lam|-|mu|."""
    lam, mu = trim(lam), trim(mu)
    if n is None:
        n = max(len(lam) + k, (lam[0] - k if lam else 0), k + 1,
                len(mu) + k, (mu[0] - k if mu else 0))
    wl = grassmannian_element(lam, k, n)
    wm = grassmannian_element(mu, k, n)
    return length(multiply(wl, inverse(wm))) == weight(lam) - weight(mu)


def quotient_element(lam: Sequence[int], mu: Sequence[int], k: int,
                     n: int | None = None) -> Window:
    """w_lam w_mu^{-1} in a common B_n."""
    lam, mu = trim(lam), trim(mu)
    if n is None:
        n = max(len(lam) + k, (lam[0] - k if lam else 0), k + 1,
                len(mu) + k, (mu[0] - k if mu else 0))
    return multiply(grassmannian_element(lam, k, n),
                    inverse(grassmannian_element(mu, k, n)))


def is_skew(w: Sequence[int], k: int, n: int) -> tuple[IntVec, IntVec] | None:
    """Search P(k,n) for lam with a reduced factorization w_lam = w * w_mu;
    returns (lam, mu) for the first lam found (by weight, then lex), or None."""
    w = extend_window(check_window(w), n)
    lw = length(w)
    for lam in sorted(grassmannian_range(k, n), key=lambda t: (weight(t), t)):
        if weight(lam) < lw:
            continue
        wl = grassmannian_element(lam, k, n)
        v = multiply(inverse(w), wl)
        if length(v) == weight(lam) - lw and is_k_grassmannian(v, k):
            return lam, partition_of(v, k)
    return None


def left_factors(w: Window) -> set[Window]:
    """All u with l(u) + l(u^{-1} w) = l(w): the weak-order interval below w."""
    n = len(w)
    seen = {identity_window(n)}
    frontier = [(identity_window(n), w)]
    while frontier:
        u, rest = frontier.pop()
        for i in _left_descents(rest):
            u2 = multiply(u, _simple(i, n))
            if u2 not in seen:  # rest is determined by u2, so skip revisits
                seen.add(u2)
                frontier.append((u2, multiply(_simple(i, n), rest)))
    return seen


def _simple(i: int, n: int) -> Window:
    return apply_right(identity_window(n), i)


def _left_descents(w: Window) -> list[int]:
    return right_descents(inverse(w))


def is_unimodal_word(word: Sequence[int]) -> bool:
    """Strictly decreasing then strictly increasing."""
    if not word:
        return True
    j = word.index(min(word))
    return all(word[i] > word[i + 1] for i in range(j)) and \
        all(word[i] < word[i + 1] for i in range(j, len(word) - 1))


@cache
def unimodal_word_count(w: Window) -> int:
    """n_w, the number of unimodal reduced words for w."""
    return sum(1 for word in reduced_words(w) if is_unimodal_word(word))


def unimodal_factorizations(w: Sequence[int], r: int) -> Iterator[tuple[Window, ...]]:
    """All reduced factorizations w = u_1 ... u_r into r nontrivial unimodal
    elements."""
    w = check_window(w)
    if r < 1:
        raise ValueError("r must be at least 1")
    n = len(w)
    ident = identity_window(n)

    def rec(rest: Window, parts: int) -> Iterator[tuple[Window, ...]]:
        if parts == 1:
            if rest != ident and unimodal_word_count(rest):
                yield (rest,)
            return
        for u in left_factors(rest):
            if u == ident or not unimodal_word_count(u):
                continue
            tail = multiply(inverse(u), rest)
            for more in rec(tail, parts - 1):
                yield (u,) + more

    yield from rec(w, r)


def reduced_factorizations(w: Window, parts: int) -> Iterator[tuple[Window, ...]]:
    """All reduced factorizations into `parts` factors, identity allowed."""
    n = len(w)
    if parts == 1:
        yield (w,)
        return
    for u in left_factors(w):
        tail = multiply(inverse(u), w)
        for more in reduced_factorizations(tail, parts - 1):
            yield (u,) + more
