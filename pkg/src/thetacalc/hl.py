"""The graded ring Z[t][v_1, v_2, ...]: Giambelli polynomials V_alpha, the
psi/phi strip coefficients, the Pieri rule with its ring oracle, the mirror
identity, the variable-reduction formula and x-variable realisations
(Hall-Littlewood Q, modified Q', and the t = -1 specialisation).
"""

from __future__ import annotations

from typing import Sequence

from .coeffs import Coeff, TPoly, one_minus_t_power
from .mpoly import MPoly, TVAR, Var, e_series, h_series, q_r, xvars
from .partitions import (
    IntVec,
    check_partition,
    compositions_of,
    contains,
    part_multiplicity,
    skew_boxes,
    trim,
    weight,
)
from .raising import (
    HL,
    Element,
    FactorSpec,
    cached,
    change_basis,
    expand_raising,
    monomial_product,
    multiply_monomial,
)
from .strips import horizontal_strips_above, horizontal_strips_below, strip_type
from .tableaux import semistandard_tableaux, ssyt_content


@cached
def giambelli_v(alpha: IntVec) -> Element:
    """V_alpha = prod_{i<j} (1 - R_ij)/(1 - t R_ij) v_alpha in v-monomials."""
    alpha = tuple(alpha)
    return expand_raising(FactorSpec.all_pairs(len(alpha), HL), alpha, "v")


@cached
def giambelli_v_recursive(alpha: IntVec) -> Element:
    """V_alpha through the last-component recursion
    V_{(alpha,r)} = sum_gamma t^{|gamma|-#gamma} (t-1)^{#gamma}
    V_{alpha+gamma} v_{r-|gamma|}, an independent route to the same element."""
    alpha = tuple(alpha)
    if not alpha:
        return Element.monomial((), "v")
    head, r = alpha[:-1], alpha[-1]
    if not head:
        return Element.monomial(trim((r,)), "v") if r >= 0 else Element.zero("v")
    out = Element.zero("v")
    for g in range(max(r, 0) + 1):
        if r - g < 0:
            continue
        for gamma in compositions_of(g, len(head)):
            nz = sum(1 for x in gamma if x)
            coeff = (TPoly((0, 1)) ** (g - nz)) * (TPoly((-1, 1)) ** nz)
            inner = giambelli_v_recursive(tuple(h + x for h, x in zip(head, gamma)))
            out = out + multiply_monomial(inner, r - g).scale(coeff)
    return out


def to_V_basis(e: Element) -> Element:
    if e.basis != "v":
        raise ValueError(f"expected v-monomials, got {e.basis!r}")
    return change_basis(e, lambda idx: giambelli_v(idx), "V")


# ---------------------------------------------------------------------------
# strip coefficients


def psi(mu: Sequence[int], lam: Sequence[int]) -> TPoly:
    """psi_{mu/lam}(t) for a horizontal strip mu/lam: the product of
    1 - t^{m_c(lam)} over columns c where the strip has no box in column c
    but has one in column c + 1."""
    mu, lam = check_partition(mu), check_partition(lam)
    cells = skew_boxes(mu, lam)
    if strip_type(mu, lam) not in ("horizontal", "both"):
        raise ValueError(f"{mu}/{lam} is not a horizontal strip")
    cols = {c for _, c in cells}
    out = TPoly(1)
    for c in sorted(cols):
        if c - 1 >= 1 and (c - 1) not in cols:
            out = out * (TPoly(1) - TPoly((0,) * part_multiplicity(lam, c - 1) + (1,)))
    return out


def phi(lam: Sequence[int], mu: Sequence[int]) -> TPoly:
    """phi_{lam/mu}(t) for a horizontal strip lam/mu: the product of
    1 - t^{m_c(lam)} over columns c where the strip has a box in column c
    but none in column c + 1."""
    lam, mu = check_partition(lam), check_partition(mu)
    cells = skew_boxes(lam, mu)
    if strip_type(lam, mu) not in ("horizontal", "both"):
        raise ValueError(f"{lam}/{mu} is not a horizontal strip")
    cols = {c for _, c in cells}
    out = TPoly(1)
    for c in sorted(cols):
        if (c + 1) not in cols:
            out = out * (TPoly(1) - TPoly((0,) * part_multiplicity(lam, c) + (1,)))
    return out


# ---------------------------------------------------------------------------
# Pieri and mirror


def pieri_v(p: int, lam: Sequence[int]) -> list[tuple[IntVec, TPoly]]:
    """v_p * V_lam = sum psi_{mu/lam}(t) V_mu over horizontal p-strips."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    lam = check_partition(lam)
    return [(mu, psi(mu, lam)) for mu in sorted(horizontal_strips_above(lam, p))]


def pieri_v_oracle(p: int, lam: Sequence[int]) -> Element:
    lam = check_partition(lam)
    return to_V_basis(multiply_monomial(giambelli_v(lam), p))


def mirror_v(lam: Sequence[int]) -> dict:
    """sum_{alpha >= 0} (1-t)^{#alpha} V_{lam-alpha}
    = sum_{mu subset lam} phi_{lam/mu}(t) V_mu over horizontal strips lam/mu."""
    lam = check_partition(lam)
    ell = len(lam)
    lhs = Element.zero("v")
    for r in range(weight(lam) + 1):
        for alpha in compositions_of(r, ell):
            nz = sum(1 for a in alpha if a)
            term = giambelli_v(tuple(l - a for l, a in zip(lam, alpha)))
            lhs = lhs + term.scale(one_minus_t_power(nz))
    rhs = Element.zero("v")
    pairing = []
    for mu in sorted(horizontal_strips_below(lam)):
        c = phi(lam, mu)
        pairing.append((mu, c))
        rhs = rhs + giambelli_v(mu).scale(c)
    return {"lhs": lhs, "rhs": rhs, "difference": lhs - rhs,
            "ok": lhs == rhs, "pairing": pairing}


# ---------------------------------------------------------------------------
# realisations in finitely many x-variables


def realize(e: Element, target: str, m: int) -> MPoly:
    """Map a v-monomial element generator-wise into m x-variables.

    target 'q-series' sends v_r to q_r(x;t) (the result carries t);
    'h-series' sends v_r to h_r(x); 'e-series' sends v_r to e_r(x) and
    requires the element to be specialised at t = -1 first.
    """
    if e.basis != "v":
        raise ValueError(f"expected v-monomials, got {e.basis!r}")
    degree = max((weight(idx) for idx in e.terms), default=0)
    vs = xvars(m)
    if target == "q-series":
        gens = {r: q_r(r, m) for r in range(degree + 1)}

        def coeff_poly(c: Coeff) -> MPoly:
            from .mpoly import tpoly_to_mpoly
            return tpoly_to_mpoly(c)
    elif target in ("h-series", "e-series"):
        if not all(isinstance(c, int) or c.is_constant() for c in e.terms.values()):
            raise ValueError(f"{target} needs t-free coefficients; specialise t first")
        table = (h_series if target == "h-series" else e_series)(vs, degree)
        gens = dict(enumerate(table))

        def coeff_poly(c: Coeff) -> MPoly:
            return MPoly.const(c if isinstance(c, int) else c.constant())
    else:
        raise ValueError(f"unknown realisation target {target!r}")

    out = MPoly()
    for idx, c in e.terms.items():
        prod = coeff_poly(c)
        for part in idx:
            prod = prod * gens[part]
        out = out + prod
    return out


def specialize_t(e: Element, value: int) -> Element:
    from .coeffs import evaluate_coeff

    return e.map_coeffs(lambda c: evaluate_coeff(c, value))


def hl_function(lam: Sequence[int], m: int, mode: str = "reduction") -> MPoly:
    """The Hall-Littlewood polynomial Q_lam(x_1..x_m; t), exactly.

    mode 'reduction' iterates the one-variable reduction formula
    Q_lam(x;t) = sum_p x^p sum_{lam/mu horizontal p-strip} phi_{lam/mu}(t)
    Q_mu(remaining x;t) down to zero variables; mode 'realization' pushes the
    Giambelli expansion through v_r -> q_r(x;t).  The two agree.
    """
    lam = check_partition(lam)
    if mode == "realization":
        return realize(giambelli_v(lam), "q-series", m)
    if mode != "reduction":
        raise ValueError(f"unknown mode {mode!r}")
    return _hl_reduction(lam, xvars(m))


@cached
def _hl_reduction(lam: IntVec, vs: tuple[Var, ...]) -> MPoly:
    from .mpoly import tpoly_to_mpoly

    if not lam:
        return MPoly.const(1)
    if not vs:
        return MPoly()
    head, rest = vs[0], vs[1:]
    out = MPoly()
    for mu in horizontal_strips_below(lam):
        p = weight(lam) - weight(mu)
        sub = _hl_reduction(mu, rest)
        if sub:
            out = out + MPoly.var(head, p) * tpoly_to_mpoly(phi(lam, mu)) * sub
    return out


def schur_via_tableaux(lam: IntVec, m: int) -> MPoly:
    """s_lam(x_1..x_m) as the semistandard tableau sum; an oracle for the
    t = 0, h-series realisation of V_lam."""
    lam = check_partition(lam)
    out = MPoly()
    for tab in semistandard_tableaux(lam, m):
        content = ssyt_content(tab, m)
        out = out + MPoly.monomial((("x", i + 1), c) for i, c in enumerate(content))
    return out
