"""Theta polynomials in finitely many variables, the skew tableau functions
F^(k)_{lam/mu}, Schur Q- and S-polynomials, the master identities and the
expansion of symmetric functions in the Schur Q basis.

All polynomials are exact elements of Z[x_1..x_m, y_1..y_k].  Functions take
explicit variable tuples internally so that identities in two or three
variable sets (x, x', z) are plain polynomial identities over disjoint names.
"""

from __future__ import annotations

from typing import Sequence

from .mpoly import MPoly, Var, e_series, theta_series, xvars, yvars
from .partitions import (
    IntVec,
    check_k_strict,
    check_partition,
    conjugate,
    contains,
    cset,
    is_strict_partition,
    subpartitions,
    trim,
    weight,
)
from .raising import Element, FactorSpec, cached, expand_raising_raw
from .strips import k_horizontal_strips_below
from .tableaux import k_bitableaux, k_tableaux, semistandard_tableaux, ssyt_content


# ---------------------------------------------------------------------------
# building blocks


@cached
def _theta_gens(xs: tuple[Var, ...], ys: tuple[Var, ...], cap: int) -> tuple[MPoly, ...]:
    return tuple(theta_series(xs, ys, cap))


@cached
def schur_s_vars(mu: IntVec, ys: tuple[Var, ...]) -> MPoly:
    """s_{mu'}(y) as the semistandard tableau sum over the conjugate shape."""
    mu = check_partition(mu)
    shape = conjugate(mu)
    out = MPoly()
    for tab in semistandard_tableaux(shape, len(ys)):
        content = ssyt_content(tab, len(ys)) if ys else ()
        out = out + MPoly.monomial(zip(ys, content))
    return out


def schur_s(mu: Sequence[int], k: int) -> MPoly:
    """s_{mu'}(y_1..y_k)."""
    return schur_s_vars(trim(mu), yvars(k))


@cached
def skew_f_vars(lam: IntVec, mu: IntVec, k: int, xs: tuple[Var, ...]) -> MPoly:
    """F^(k)_{lam/mu} = sum_T 2^{n(T)} x^T over k-tableaux with entries <= m."""
    lam = check_k_strict(lam, k)
    mu = check_k_strict(mu, k)
    if not contains(lam, mu):
        raise ValueError(f"{mu} not contained in {lam}")
    if lam == mu:
        return MPoly.const(1)
    if not xs:
        return MPoly()
    head, rest = xs[0], xs[1:]
    out = MPoly()
    for nu, n in k_horizontal_strips_below(lam, k):
        if contains(nu, mu):
            sub = skew_f_vars(nu, mu, k, rest)
            if sub:
                p = weight(lam) - weight(nu)
                out = out + MPoly.var(head, p) * (2 ** n) * sub
    return out


def skew_f(lam: Sequence[int], mu: Sequence[int], k: int, m: int) -> MPoly:
    return skew_f_vars(trim(lam), trim(mu), k, xvars(m))


def skew_f_by_tableaux(lam: IntVec, mu: IntVec, k: int, m: int) -> MPoly:
    """The same sum by direct tableau enumeration; an independent route."""
    out = MPoly()
    for tab in k_tableaux(trim(lam), trim(mu), k, m):
        out = out + MPoly.monomial(
            (("x", i + 1), c) for i, c in enumerate(tab.content)) * (2 ** tab.n_stat)
    return out


# ---------------------------------------------------------------------------
# theta polynomials, three routes


@cached
def theta_vars(lam: IntVec, k: int, xs: tuple[Var, ...], ys: tuple[Var, ...],
               mode: str = "raising") -> MPoly:
    lam = check_k_strict(lam, k)
    if mode == "raising":
        cap = weight(lam)
        gens = _theta_gens(xs, ys, cap)
        spec = FactorSpec.for_dset(len(lam), cset(lam, k))
        out = MPoly()
        for vec, coeff in expand_raising_raw(spec, lam).items():
            if any(a < 0 for a in vec):
                continue
            prod = MPoly.const(coeff)
            for part in vec:
                prod = prod * gens[part]
                if not prod:
                    break
            out = out + prod
        return out
    if mode == "tableau":
        out = MPoly()
        for bit in k_bitableaux(lam, k, len(xs)):
            mono = [(xs[i], c) for i, c in enumerate(bit.x_content())]
            mono += [(ys[j], c) for j, c in enumerate(bit.y_content())]
            out = out + MPoly.monomial(mono) * (2 ** bit.n_stat)
        return out
    if mode == "reduction":
        if not xs:
            # Theta_mu(0; y) = s_{mu'}(y) when mu fits in k columns, else 0
            if lam and lam[0] > k:
                return MPoly()
            return schur_s_vars(lam, ys)
        head, rest = xs[0], xs[1:]
        out = MPoly()
        for mu, n in k_horizontal_strips_below(lam, k):
            sub = theta_vars(mu, k, rest, ys, "reduction")
            if sub:
                p = weight(lam) - weight(mu)
                out = out + MPoly.var(head, p) * (2 ** n) * sub
        return out
    raise ValueError(f"unknown mode {mode!r}")


def theta(lam: Sequence[int], k: int, m: int, mode: str = "raising") -> MPoly:
    """Theta_lam(x_1..x_m; y_1..y_k) by 'raising', 'tableau' or 'reduction'."""
    return theta_vars(trim(lam), k, xvars(m), yvars(k), mode)


# ---------------------------------------------------------------------------
# Schur Q


def schur_q(lam: Sequence[int], m: int) -> MPoly:
    """Q_lam(x_1..x_m) for a strict partition: the k = 0 tableau sum."""
    lam = trim(lam)
    if not is_strict_partition(lam):
        raise ValueError(f"Schur Q needs a strict partition: {lam}")
    return skew_f(lam, (), 0, m)


def skew_schur_q(lam: Sequence[int], mu: Sequence[int], m: int) -> MPoly:
    lam, mu = trim(lam), trim(mu)
    if not (is_strict_partition(lam) and is_strict_partition(mu)):
        raise ValueError("skew Schur Q needs strict partitions")
    return skew_f(lam, mu, 0, m)


@cached
def _schur_q_vars(lam: IntVec, xs: tuple[Var, ...]) -> MPoly:
    return skew_f_vars(lam, (), 0, xs)


# ---------------------------------------------------------------------------
# master identities


def _k_strict_subs(lam: IntVec, k: int) -> list[IntVec]:
    from .partitions import is_k_strict

    return [mu for mu in subpartitions(lam) if is_k_strict(mu, k)]


def master_identities(lam: Sequence[int], k: int, m: int, mprime: int) -> dict:
    """The four splitting identities, evaluated exactly with x = (x_1..x_m)
    and x' = (x_{m+1}..x_{m+m'}).

    mastereq: Theta_lam(x,x';y) = sum_mu F_{lam/mu}(x) Theta_mu(x';y)
    master2:  Theta_lam(x;y)    = sum_mu F_{lam/mu}(x) s_{mu'}(y)
    master3:  F_lam(x,x')       = sum_mu F_{lam/mu}(x) F_mu(x')
    FFF (for every nu <= lam):
              F_{lam/nu}(x,x')  = sum_mu F_{lam/mu}(x) F_{mu/nu}(x')
    """
    lam = check_k_strict(lam, k)
    xs = xvars(m)
    xps = xvars(mprime, start=m + 1)
    both = xs + xps
    ys = yvars(k)
    subs = _k_strict_subs(lam, k)
    out: dict[str, dict] = {}

    lhs = theta_vars(lam, k, both, ys, "reduction")
    rhs = MPoly()
    for mu in subs:
        rhs = rhs + skew_f_vars(lam, mu, k, xs) * theta_vars(mu, k, xps, ys, "reduction")
    out["mastereq"] = {"lhs": lhs, "rhs": rhs, "ok": lhs == rhs}

    lhs = theta_vars(lam, k, xs, ys, "reduction")
    rhs = MPoly()
    for mu in subs:
        rhs = rhs + skew_f_vars(lam, mu, k, xs) * schur_s_vars(mu, ys)
    out["master2"] = {"lhs": lhs, "rhs": rhs, "ok": lhs == rhs}

    lhs = skew_f_vars(lam, (), k, both)
    rhs = MPoly()
    for mu in subs:
        rhs = rhs + skew_f_vars(lam, mu, k, xs) * skew_f_vars(mu, (), k, xps)
    out["master3"] = {"lhs": lhs, "rhs": rhs, "ok": lhs == rhs}

    fff_ok = True
    for nu in subs:
        lhs = skew_f_vars(lam, nu, k, both)
        rhs = MPoly()
        for mu in subs:
            if contains(mu, nu):
                rhs = rhs + skew_f_vars(lam, mu, k, xs) * skew_f_vars(mu, nu, k, xps)
        if lhs != rhs:
            fff_ok = False
            break
    out["FFF"] = {"ok": fff_ok}
    out["ok"] = all(v["ok"] for v in out.values() if isinstance(v, dict))
    return out


# ---------------------------------------------------------------------------
# expansion in the Schur Q basis


def q_expansion(f: MPoly, m: int) -> dict[IntVec, int]:
    """Expand a homogeneous symmetric polynomial in m x-variables as an
    integer combination of Schur Q-polynomials Q_lam(x_1..x_m).

    Elimination against lexicographically-leading monomials: the leading
    monomial of Q_lam is 2^{l(lam)} x^lam, so every division is an exact
    integer division; failure to divide, a non-strict leading exponent, or a
    nonzero remainder mean f is outside the span (m too small or f invalid).
    """
    xs = xvars(m)
    out: dict[IntVec, int] = {}
    rest = f
    while rest:
        mono, coeff = max(((rest.exponent_of(xs, mn), c)
                           for mn, c in rest.terms.items()))
        lam = trim(mono)
        if not is_strict_partition(lam):
            raise ValueError(f"leading exponent {mono} is not a strict partition")
        denom = 2 ** len(lam)
        if coeff % denom:
            raise ValueError(
                f"leading coefficient {coeff} of x^{lam} not divisible by {denom}")
        c = coeff // denom
        out[lam] = c
        rest = rest - _schur_q_vars(lam, xs) * c
    return dict(sorted(out.items(), reverse=True))


def q_expansion_reconstruct(coeffs: dict[IntVec, int], m: int) -> MPoly:
    out = MPoly()
    for lam, c in coeffs.items():
        out = out + _schur_q_vars(trim(lam), xvars(m)) * c
    return out


# ---------------------------------------------------------------------------
# determinant cross-check for C(lam) = 0 (skew S-polynomials)


def skew_s_determinant(lam: Sequence[int], mu: Sequence[int], m: int) -> MPoly:
    """det(q_{lam_i - mu_j + j - i}(x)) at t = -1, the Worley/Sergeev form of
    F^(k)_{lam/mu} when C(lam) is empty."""
    from itertools import permutations

    from .mpoly import q_r_tminus1

    lam, mu = trim(lam), trim(mu)
    n = len(lam)
    mu = mu + (0,) * (n - len(mu))
    out = MPoly()
    for sigma in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if sigma[i] > sigma[j]:
                    sign = -sign
        prod = MPoly.const(sign)
        for i in range(n):
            r = lam[i] - mu[sigma[i]] + sigma[i] - i
            prod = prod * q_r_tminus1(r, m)
            if not prod:
                break
        out = out + prod
    return out
