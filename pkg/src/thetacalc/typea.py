"""The ring Z[u_1, u_2, ...]: Giambelli polynomials U_alpha, the classical
Pieri rule, the Jacobi-Trudi determinant cross-check, the top-row recursion
and the pair of mirror identities.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .partitions import (
    IntVec,
    check_partition,
    compositions_of,
    contains,
    trim,
    weight,
)
from .raising import ELL, Element, FactorSpec, cached, change_basis, expand_raising, multiply_monomial
from .strips import horizontal_strips_above, horizontal_strips_below, vertical_strips_below


@cached
def giambelli_u(alpha: IntVec) -> Element:
    """U_alpha = prod_{i<j} (1 - R_ij) u_alpha, expanded in u-monomials."""
    alpha = tuple(alpha)
    return expand_raising(FactorSpec.all_pairs(len(alpha), ELL), alpha, "u")


@cached
def jacobi_trudi(alpha: IntVec) -> Element:
    """det(u_{alpha_i + j - i}) expanded as a signed sum over permutations."""
    alpha = tuple(alpha)
    n = len(alpha)
    terms: dict[IntVec, int] = {}
    for sigma in permutations(range(n)):
        degrees = [alpha[i] + sigma[i] - i for i in range(n)]
        if any(d < 0 for d in degrees):
            continue
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if sigma[i] > sigma[j]:
                    sign = -sign
        idx = trim(tuple(sorted(degrees, reverse=True)))
        new = terms.get(idx, 0) + sign
        if new:
            terms[idx] = new
        else:
            terms.pop(idx, None)
    return Element(terms, "u")


def to_U_basis(e: Element) -> Element:
    if e.basis != "u":
        raise ValueError(f"expected u-monomials, got {e.basis!r}")
    return change_basis(e, lambda idx: giambelli_u(idx), "U")


def pieri_u(p: int, lam: Sequence[int]) -> list[IntVec]:
    """u_p * U_lam = sum of U_nu over horizontal p-strips nu/lam."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    lam = check_partition(lam)
    return sorted(horizontal_strips_above(lam, p))


def pieri_u_oracle(p: int, lam: Sequence[int]) -> Element:
    """The same product computed in the ring and re-expressed in the U-basis."""
    lam = check_partition(lam)
    return to_U_basis(multiply_monomial(giambelli_u(lam), p))


def toprow_recursion_u(p: int, lam: Sequence[int]) -> dict:
    """U_{(p,lam)} = sum_{r,mu} (-1)^r u_{p+r} U_mu over vertical strips lam/mu
    of size r; valid for p >= lam_1."""
    lam = check_partition(lam)
    if lam and p < lam[0]:
        raise ValueError(f"need p >= lam_1 = {lam[0]}")
    lhs = giambelli_u((p,) + lam)
    rhs = Element.zero("u")
    for mu, r in vertical_strips_below(lam):
        sign = -1 if r % 2 else 1
        rhs = rhs + multiply_monomial(giambelli_u(mu), p + r).scale(sign)
    return {"lhs": lhs, "rhs": rhs, "difference": lhs - rhs, "ok": lhs == rhs}


def mirror_u(lam: Sequence[int], cap: int | None = None) -> dict:
    """Both mirror identities around lam.

    Downward: sum over compositions alpha (length <= l(lam)) of U_{lam-alpha}
    equals the sum of U_mu over horizontal strips lam/mu; a finite identity.
    Upward: per homogeneous degree |lam|+p for p <= cap, the sum of
    U_{lam+alpha} (alpha of length <= l(lam)+1, |alpha| = p) equals the sum of
    U_nu over horizontal p-strips nu/lam.
    """
    lam = check_partition(lam)
    ell = len(lam)
    if cap is None:
        cap = weight(lam) + 4

    down_lhs = Element.zero("u")
    for r in range(weight(lam) + 1):
        for alpha in compositions_of(r, ell):
            down_lhs = down_lhs + giambelli_u(tuple(l - a for l, a in zip(lam, alpha)))
    down_rhs = Element.zero("u")
    down_support = sorted(horizontal_strips_below(lam))
    for mu in down_support:
        down_rhs = down_rhs + giambelli_u(mu)

    up = {}
    for p in range(cap + 1):
        lhs = Element.zero("u")
        for alpha in compositions_of(p, ell + 1):
            vec = tuple((lam[i] if i < ell else 0) + alpha[i] for i in range(ell + 1))
            lhs = lhs + giambelli_u(trim(vec))
        rhs = Element.zero("u")
        for nu in horizontal_strips_above(lam, p):
            rhs = rhs + giambelli_u(nu)
        up[p] = {"lhs": lhs, "rhs": rhs, "difference": lhs - rhs, "ok": lhs == rhs}

    return {
        "down": {"lhs": down_lhs, "rhs": down_rhs,
                 "difference": down_lhs - down_rhs,
                 "ok": down_lhs == down_rhs,
                 "support": down_support},
        "up": up,
        "ok": down_lhs == down_rhs and all(r["ok"] for r in up.values()),
    }
