"""The graded ring B^(k) = Z[w_1, w_2, ...]/I^(k): straightening to the
k-strict monomial basis, Giambelli polynomials W_lambda and the D-indexed
W^D_alpha, basis conversion, the combinatorial Pieri rule with its ring
oracle, the mirror identity, the top-row recursion, tame-pair identities,
mitosis and the k = 0 Pfaffian form.

Equality in B^(k) is equality of normalised forms: a w-monomial is normalised
by sorting its index, dropping it if a final exponent is negative, and
rewriting equal parts r > k through w_r^2 = 2 sum_{i>=1} (-1)^{i+1}
w_{r+i} w_{r-i} until the index is k-strict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import (
    IntVec,
    PairSet,
    check_k_strict,
    check_pair_set,
    cset,
    is_k_strict,
    sort_desc,
    trim,
    weight,
)
from .raising import (
    Element,
    FactorSpec,
    cached,
    change_basis,
    expand_raising_raw,
    monomial_product,
    multiply_monomial,
    pfaffian,
)
from .strips import k_horizontal_strips_below, pieri_targets


@cached
def straighten_index(nu: IntVec, k: int) -> Element:
    """The normal form of the monomial w_nu in B^(k).

    Rewrites at the leftmost pair of equal parts > k; every output strictly
    dominates the input, so the rewriting terminates.  Parts must be >= 0.
    """
    nu = sort_desc(nu)
    if any(a < 0 for a in nu):
        raise ValueError(f"negative part in {nu}")
    nu = trim(nu)
    pos = next((i for i in range(len(nu) - 1)
                if nu[i] == nu[i + 1] and nu[i] > k), None)
    if pos is None:
        return Element.monomial(nu, "w", k)
    r = nu[pos]
    rest = nu[:pos] + nu[pos + 2:]
    out = Element.zero("w", k)
    for i in range(1, r + 1):
        sign = 2 if i % 2 else -2
        out = out + straighten_w(rest + (r + i, r - i), k).scale(sign)
    return out


def straighten_w(nu: Sequence[int], k: int) -> Element:
    """Normal form of w_nu (any nonnegative vector) in B^(k)."""
    return straighten_index(sort_desc(tuple(a for a in nu if a)), k)


def straighten(e: Element) -> Element:
    """Normalise every index of a w-monomial element."""
    if e.basis != "w":
        raise ValueError(f"expected w-monomials, got {e.basis!r}")
    out = Element.zero("w", e.k)
    for idx, c in e.terms.items():
        out = out + straighten_w(idx, e.k).scale(c)
    return out


def product_w(e1: Element, e2: Element) -> Element:
    """Product in B^(k): multiply monomials, then straighten."""
    return straighten(monomial_product(e1, e2))


# ---------------------------------------------------------------------------
# Giambelli polynomials


@dataclass(frozen=True)
class DIndexed:
    """W^D_alpha before normalisation: raw index, denominator set, k."""

    alpha: IntVec
    dset: PairSet
    k: int

    def normalize(self) -> Element:
        return w_expansion(self.alpha, self.dset, self.k)

    def __str__(self) -> str:
        from .partitions import fmt_pair_set
        d = fmt_pair_set(self.dset) or "{}"
        return f"W^{{{d}}}_{{{','.join(map(str, self.alpha))}}}"


@cached
def w_expansion(alpha: IntVec, dset: PairSet, k: int) -> Element:
    """W^D_alpha = R^D w_alpha, normalised into the k-strict monomial basis."""
    alpha = tuple(alpha)
    dset = check_pair_set(dset)
    spec = FactorSpec.for_dset(len(alpha), dset)
    out = Element.zero("w", k)
    for vec, coeff in expand_raising_raw(spec, alpha).items():
        if any(a < 0 for a in vec):
            continue
        out = out + straighten_w(vec, k).scale(coeff)
    return out


@cached
def giambelli_w(lam: IntVec, k: int) -> Element:
    """W_lam = R^{C(lam)} w_lam for a k-strict partition lam, normalised."""
    lam = check_k_strict(lam, k)
    return w_expansion(lam, cset(lam, k), k)


def giambelli_w_dset(alpha: Sequence[int], k: int,
                     dset: Iterable | None = None) -> Element:
    """Public entry: default D = C(alpha) (alpha must then be k-strict)."""
    alpha = tuple(alpha)
    if dset is None:
        return giambelli_w(alpha, k)
    return w_expansion(alpha, frozenset(dset), k)


def to_W_basis(e: Element) -> Element:
    """Rewrite a normalised w-monomial element in the W basis."""
    if e.basis != "w":
        raise ValueError(f"expected w-monomials, got {e.basis!r}")
    k = e.k
    if k is None:
        raise ValueError("w-monomial elements must carry k")

    def expand(idx: IntVec) -> Element:
        if not is_k_strict(idx, k):
            raise KeyError(idx)
        return giambelli_w(idx, k)

    return change_basis(e, expand, "W")


# ---------------------------------------------------------------------------
# Pieri


def pieri_w(p: int, lam: Sequence[int], k: int, mode: str = "combinatorial"
            ) -> Element:
    """w_p * W_lam in the W basis.

    mode 'combinatorial' evaluates the Pieri rule sum over lam -> mu with
    coefficients 2^{N(lam,mu)}; mode 'oracle' multiplies the Giambelli
    expansion by w_p, straightens and converts back.  The two must agree.
    """
    lam = check_k_strict(lam, k)
    if mode == "combinatorial":
        return Element({mu: 2 ** n for mu, n in pieri_targets(lam, p, k)}, "W", k)
    if mode == "oracle":
        return to_W_basis(straighten(multiply_monomial(giambelli_w(lam, k), p)))
    raise ValueError(f"unknown mode {mode!r}")


def mirror_w(lam: Sequence[int], k: int) -> dict:
    """sum_{alpha >= 0} 2^{#alpha} W^{C(lam)}_{lam-alpha}
    = sum_{mu -> lam} 2^{n(lam/mu)} W_mu, both sides normalised."""
    lam = check_k_strict(lam, k)
    from .partitions import compositions_of

    cs = cset(lam, k)
    lhs = Element.zero("w", k)
    for r in range(weight(lam) + 1):
        for alpha in compositions_of(r, len(lam)):
            nz = sum(1 for a in alpha if a)
            vec = tuple(l - a for l, a in zip(lam, alpha))
            lhs = lhs + w_expansion(vec, cs, k).scale(2 ** nz)
    rhs = Element.zero("w", k)
    pairing = []
    for mu, n in k_horizontal_strips_below(lam, k):
        pairing.append((mu, 2 ** n))
        rhs = rhs + giambelli_w(mu, k).scale(2 ** n)
    return {"lhs": lhs, "rhs": rhs, "difference": lhs - rhs,
            "ok": lhs == rhs, "pairing": pairing}


def toprow_recursion_w(p: int, lam: Sequence[int], k: int) -> dict:
    """W_{(p,lam)} = sum_{r, mu} (-1)^r 2^{n(lam/mu)} w_{p+r} W_mu over
    k-horizontal strips lam/mu of size r; needs p >= max(lam_1+1, l(lam)+2k)."""
    lam = check_k_strict(lam, k)
    threshold = max((lam[0] + 1) if lam else 1, len(lam) + 2 * k)
    if p < threshold:
        raise ValueError(f"need p >= {threshold}")
    lhs = giambelli_w((p,) + lam, k)
    rhs = Element.zero("w", k)
    for mu, n in k_horizontal_strips_below(lam, k):
        r = weight(lam) - weight(mu)
        sign = -1 if r % 2 else 1
        rhs = rhs + straighten(
            multiply_monomial(giambelli_w(mu, k), p + r)).scale(sign * 2 ** n)
    return {"lhs": lhs, "rhs": rhs, "difference": lhs - rhs, "ok": lhs == rhs}


# ---------------------------------------------------------------------------
# tame pairs and mitosis


def is_tame(dset: PairSet, j: int) -> bool:
    """(j, j+1) is D-tame: outside D with columns j, j+1 matching below row j,
    or inside D with rows j, j+1 matching beyond column j+1."""
    dset = check_pair_set(dset)
    if (j, j + 1) not in dset:
        return all(((h, j) in dset) == ((h, j + 1) in dset) for h in range(1, j))
    top = max((b for _, b in dset), default=j + 1)
    return all(((j, h) in dset) == ((j + 1, h) in dset)
               for h in range(j + 2, top + 2))


def check_tame(dset: Iterable, j: int, alpha: Sequence[int], beta: Sequence[int],
               r: int, s: int, k: int) -> dict:
    """Verify the tame-pair identity at rows (j, j+1).

    Case (a), (j,j+1) not in D:  W^D_{(alpha,r,s,beta)} + W^D_{(alpha,s-1,r+1,beta)} = 0.
    Case (b), (j,j+1) in D, needs r+s > 2k:  W^D_{(alpha,r,s,beta)} + W^D_{(alpha,s,r,beta)} = 0.
    """
    dset = check_pair_set(dset)
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != j - 1:
        raise ValueError(f"alpha must fill rows 1..{j - 1}")
    if not is_tame(dset, j):
        raise ValueError(f"({j},{j + 1}) is not tame for D = {sorted(dset)}")
    case_b = (j, j + 1) in dset
    if case_b and r + s <= 2 * k:
        raise ValueError(f"case (b) needs r + s > 2k = {2 * k}")
    first = alpha + (r, s) + beta
    second = alpha + ((s, r) if case_b else (s - 1, r + 1)) + beta
    lhs = w_expansion(first, dset, k)
    rhs = w_expansion(second, dset, k)
    total = lhs + rhs
    return {"case": "b" if case_b else "a", "first": first, "second": second,
            "lhs": lhs, "rhs": rhs, "sum": total, "ok": not total}


def mitosis(w: DIndexed, pair: tuple[int, int]) -> tuple[DIndexed, DIndexed]:
    """W^D_alpha = W^{D u (i,j)}_alpha + W^{D u (i,j)}_{R_ij alpha}."""
    i, j = pair
    if pair in w.dset:
        raise ValueError(f"{pair} already in D")
    new_d = check_pair_set(w.dset | {pair})
    raised = list(w.alpha) + [0] * (max(0, j - len(w.alpha)))
    raised[i - 1] += 1
    raised[j - 1] -= 1
    return (DIndexed(w.alpha, new_d, w.k),
            DIndexed(tuple(raised), new_d, w.k))


# ---------------------------------------------------------------------------
# the k = 0 Pfaffian


def two_row_w(a: int, b: int, k: int = 0) -> Element:
    """W_{(a,b)} for any integers a, b via (1-R)/(1+R) on the pair."""
    return w_expansion((a, b), frozenset({(1, 2)}), k)


def pfaffian_w(alpha: Sequence[int], k: int = 0) -> Element:
    """Pf(W_{alpha_i, alpha_j}) for a strict partition alpha, padded with a
    zero part to even length; equals the k = 0 Giambelli expansion."""
    alpha = trim(alpha)
    if len(alpha) % 2:
        alpha = alpha + (0,)
    n = len(alpha)
    if n == 0:
        return Element.monomial((), "w", k)
    mat: list[list[Element]] = [[Element.zero("w", k)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            entry = two_row_w(alpha[i], alpha[j], k)
            mat[i][j] = entry
            mat[j][i] = -entry
    return pfaffian(mat, product_w)
