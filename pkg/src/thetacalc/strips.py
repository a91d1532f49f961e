"""Strip combinatorics: horizontal/vertical strips, the box relations of the
type C Pieri rule, the relation lam -> mu with its 2-power exponent N, and
k-horizontal strips with their component statistic n.

Two independent routes to n(lam/mu) are provided: `n_strip` works directly on
the pair (lam, mu) through the right-box/row-zero characterisation, while
`n_strip_oracle` builds the long first row (p+r, mu) and reads the exponent off
the Pieri relation.  They must agree; tests sweep this.
"""

from __future__ import annotations

from functools import cache
from typing import Iterator, Optional, Sequence

from .partitions import (
    IntVec,
    check_k_strict,
    check_partition,
    column_height,
    contains,
    is_k_strict,
    rim,
    skew_boxes,
    trim,
    vertex_components,
)

Box = tuple[int, int]


# ---------------------------------------------------------------------------
# classical strips


def strip_type(lam: Sequence[int], mu: Sequence[int]) -> str:
    """Classify lam/mu as 'horizontal', 'vertical', 'both' or 'neither'."""
    lam, mu = check_partition(lam), check_partition(mu)
    cells = skew_boxes(lam, mu)
    rows = [r for r, _ in cells]
    cols = [c for _, c in cells]
    horizontal = len(cols) == len(set(cols))
    vertical = len(rows) == len(set(rows))
    if horizontal and vertical:
        return "both"
    if horizontal:
        return "horizontal"
    if vertical:
        return "vertical"
    return "neither"


def horizontal_strips_above(lam: Sequence[int], p: int) -> Iterator[IntVec]:
    """Partitions nu containing lam with |nu| = |lam| + p and nu/lam a
    horizontal strip, i.e. nu_1 >= lam_1 >= nu_2 >= lam_2 >= ...
    """
    lam = check_partition(lam)
    n = len(lam)
    if n == 0:
        yield trim((p,))
        return

    def rec(i: int, budget: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if budget == 0:
                yield ()
            elif budget <= lam[n - 1]:
                yield (budget,)
            return
        low = lam[i]
        high = lam[i - 1] if i else low + budget
        for part in range(low, min(high, low + budget) + 1):
            for tail in rec(i + 1, budget - (part - low)):
                yield (part,) + tail

    for nu in rec(0, p):
        yield trim(nu)


def horizontal_strips_below(lam: Sequence[int]) -> Iterator[IntVec]:
    """Partitions mu inside lam with lam/mu a horizontal strip."""
    lam = check_partition(lam)
    n = len(lam)

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield ()
            return
        low = lam[i + 1] if i + 1 < n else 0
        for part in range(lam[i], low - 1, -1):
            for tail in rec(i + 1):
                yield (part,) + tail

    for mu in rec(0):
        yield trim(mu)


def vertical_strips_below(lam: Sequence[int], max_col: int | None = None
                          ) -> Iterator[tuple[IntVec, int]]:
    """Pairs (mu, r) with lam/mu a vertical strip of r boxes.

    A vertical strip loses at most one box per row, so mu_i is lam_i or
    lam_i - 1.  With max_col set, every removed box [i, lam_i] must lie in a
    column <= max_col.
    """
    lam = check_partition(lam)
    n = len(lam)

    def rec(i: int, prev: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if i == n:
            yield (), 0
            return
        choices = [lam[i]]
        if lam[i] > 0 and (max_col is None or lam[i] <= max_col):
            choices.append(lam[i] - 1)
        for part in choices:
            if part > prev:
                continue
            for tail, r in rec(i + 1, part):
                yield (part,) + tail, r + (lam[i] - part)

    for mu, r in rec(0, lam[0] if lam else 0):
        yield trim(mu), r


# ---------------------------------------------------------------------------
# box relations


def k_related(left: Box, right: Box, k: int) -> bool:
    """Boxes [r,c] with c <= k and [r',c'] with c' > k satisfy c+c' = 2k+2+r-r'."""
    r, c = left
    rp, cp = right
    if not (c <= k < cp):
        return False
    return c + cp == 2 * k + 2 + r - rp


def kprime_value2(box: Box, k: int) -> int:
    """Twice the k'-diagonal value |c - k - 1/2| + r, kept integral."""
    r, c = box
    return abs(2 * (c - k) - 1) + 2 * r


# ---------------------------------------------------------------------------
# the Pieri relation lam -> mu and its exponent N(lam, mu)


def pieri_exponent(lam: IntVec, mu: IntVec, k: int) -> Optional[int]:
    """N(lam, mu) if lam -> mu holds, else None.

    lam -> mu: mu arises from lam by removing a vertical strip from the first
    k columns and adding a horizontal strip, subject to the k-related-box
    conditions (1)/(2); N counts the vertex-connected components of the
    unmentioned added right boxes that avoid column k+1.
    """
    lam = check_k_strict(lam, k)
    mu = trim(mu)
    if not is_k_strict(mu, k):
        return None

    # removed boxes lam\mu: at most one per row, all in columns <= k
    removed = []
    for r in range(1, len(lam) + 1):
        lr = lam[r - 1]
        mr = mu[r - 1] if r - 1 < len(mu) else 0
        if mr < lr:
            if lr - mr > 1 or lr > k:
                return None
            removed.append((r, lr))
    # added boxes mu\lam: a horizontal strip
    added = []
    cols_seen = set()
    for r in range(1, len(mu) + 1):
        mr = mu[r - 1]
        lr = lam[r - 1] if r - 1 < len(lam) else 0
        for c in range(lr + 1, mr + 1):
            if c in cols_seen:
                return None
            cols_seen.add(c)
            added.append((r, c))

    added_set = set(added)
    mentioned: set[Box] = set()
    for i in range(1, k + 1):
        ai = column_height(lam, i)
        bi = column_height(mu, i)
        if bi == ai:
            partners = [b for b in added_set if k_related((ai, i), b, k)]
            if len(partners) > 1:
                return None
            mentioned.update(partners)
        elif bi < ai:
            rows_of_partners = set()
            partners_here = []
            for row in range(bi, ai + 1):  # row bi may be 0: the virtual box
                partners = [b for b in added_set if k_related((row, i), b, k)]
                if len(partners) != 1:
                    return None
                partners_here.append(partners[0])
                rows_of_partners.add(partners[0][0])
            if len(rows_of_partners) > 1:
                return None
            mentioned.update(partners_here)

    free = [b for b in added_set - mentioned if b[1] >= k + 1]
    comps = vertex_components(free)
    return sum(1 for comp in comps if all(c != k + 1 for _, c in comp))


@cache
def pieri_targets(lam: IntVec, p: int, k: int) -> tuple[tuple[IntVec, int], ...]:
    """All (mu, N(lam,mu)) with lam -> mu and |mu| = |lam| + p.

    Candidate rows satisfy mu_1 <= lam_1 + p, mu_{i+1} <= lam_i (the added
    boxes form a horizontal strip) and mu_i >= lam_i - 1 with equality drop
    only from columns <= k (the removed boxes form a vertical strip there);
    pieri_exponent then decides membership exactly.
    """
    lam = check_k_strict(lam, k)
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p == 0:
        return ((lam, 0),)
    total = sum(lam) + p
    n = len(lam)
    removable = sum(1 for a in lam if 0 < a <= k)
    out = []

    def build(i: int, prev: int, acc: list[int], acc_sum: int):
        if acc_sum > total:
            return
        if i == n + 1:
            if acc_sum == total:
                cand = trim(tuple(acc))
                expo = pieri_exponent(lam, cand, k)
                if expo is not None:
                    out.append((cand, expo))
            return
        lam_i = lam[i] if i < n else 0
        lo = lam_i - 1 if 0 < lam_i <= k else lam_i
        if i == 0:
            hi = lam_i + p + removable
        else:
            hi = min(prev, lam[i - 1])
        for part in range(max(lo, 0), hi + 1):
            build(i + 1, part, acc + [part], acc_sum + part)

    build(0, total, [], 0)
    out.sort(key=lambda pair: pair[0], reverse=True)
    return tuple(out)


# ---------------------------------------------------------------------------
# k-horizontal strips


def _bottom_box_candidates(lam: IntVec, mu: IntVec, k: int) -> list[Box]:
    """Right boxes of mu (row zero included) that are bottom boxes of lam.

    Row zero is truncated at max(lam_1, 2k + l(lam)) + 1: beyond the last
    column where an R-box can occur, the infinite row-zero tail forms a single
    component represented by its first box.
    """
    lam1 = lam[0] if lam else 0
    max_col = max(lam1, 2 * k + len(lam)) + 1
    cands = []
    for c in range(k + 1, max_col + 1):
        row = column_height(lam, c)
        if row == 0 or column_height(mu, c) >= row:
            cands.append((row, c))
    return cands


def _strip_analysis(lam: IntVec, mu: IntVec, k: int):
    """Shared logic of is_k_horizontal_strip and n_strip.

    Returns None when lam/mu is not a k-horizontal strip, else the list of
    vertex-components of the unrelated bottom-box set A.
    """
    if not contains(lam, mu):
        return None
    cells = skew_boxes(lam, mu)
    lam_rim = rim(lam)
    # (i) contained in the rim, right boxes horizontal
    if any(b not in lam_rim for b in cells):
        return None
    right_cols = [c for _, c in cells if c > k]
    if len(right_cols) != len(set(right_cols)):
        return None

    left_boxes = [b for b in cells if b[1] <= k]
    left_values = {kprime_value2(b, k) for b in left_boxes}
    r_set, a_set = [], []
    for cand in _bottom_box_candidates(lam, mu, k):
        (r_set if kprime_value2(cand, k) in left_values else a_set).append(cand)
    # (ii) no two boxes of R on one k'-diagonal
    r_values = [kprime_value2(b, k) for b in r_set]
    if len(r_values) != len(set(r_values)):
        return None
    # (iii) doubled columns need same-row partners in R
    by_col: dict[int, list[Box]] = {}
    for b in cells:
        by_col.setdefault(b[1], []).append(b)
    r_by_value = {kprime_value2(b, k): b for b in r_set}
    for col, col_cells in by_col.items():
        if len(col_cells) < 2:
            continue
        partner_rows = set()
        for b in col_cells:
            partner = r_by_value.get(kprime_value2(b, k))
            if partner is None:
                return None
            partner_rows.add(partner[0])
        if len(partner_rows) > 1:
            return None
    return vertex_components(a_set)


def is_k_horizontal_strip(lam: IntVec, mu: IntVec, k: int) -> bool:
    lam = check_k_strict(lam, k)
    mu = check_k_strict(mu, k)
    return _strip_analysis(lam, mu, k) is not None


@cache
def n_strip(lam: IntVec, mu: IntVec, k: int) -> int:
    """n(lam/mu); requires mu -> lam to be a k-horizontal strip."""
    lam = check_k_strict(lam, k)
    mu = check_k_strict(mu, k)
    comps = _strip_analysis(lam, mu, k)
    if comps is None:
        raise ValueError(f"{lam}/{mu} is not a {k}-horizontal strip")
    return sum(1 for comp in comps if all(c != k + 1 for _, c in comp))


def n_strip_oracle(lam: IntVec, mu: IntVec, k: int) -> int:
    """n(lam/mu) = N(lam, (p+r, mu)) through the stable Pieri relation."""
    lam = check_k_strict(lam, k)
    mu = check_k_strict(mu, k)
    if not contains(lam, mu):
        raise ValueError(f"{mu} not contained in {lam}")
    r = sum(lam) - sum(mu)
    p = max((lam[0] + 1) if lam else 1, len(lam) + 2 * k)
    expo = pieri_exponent(lam, trim((p + r,) + mu), k)
    if expo is None:
        raise ValueError(f"{lam}/{mu} is not a {k}-horizontal strip")
    return expo


@cache
def k_horizontal_strips_below(lam: IntVec, k: int) -> tuple[tuple[IntVec, int], ...]:
    """All (mu, n(lam/mu)) with mu -> lam a k-horizontal strip."""
    lam = check_k_strict(lam, k)
    out = []
    for mu in _k_strict_subpartitions(lam, k):
        comps = _strip_analysis(lam, mu, k)
        if comps is not None:
            n = sum(1 for comp in comps if all(c != k + 1 for _, c in comp))
            out.append((mu, n))
    out.sort(key=lambda pair: pair[0], reverse=True)
    return tuple(out)


def _k_strict_subpartitions(lam: IntVec, k: int) -> Iterator[IntVec]:
    from .partitions import subpartitions

    for mu in subpartitions(lam):
        if is_k_strict(mu, k):
            yield mu


def k_horizontal_extensions(lam: IntVec, outer: IntVec, k: int) -> Iterator[tuple[IntVec, int]]:
    """All (nu, n(nu/lam)) with lam -> nu a k-horizontal strip and nu inside outer."""
    lam = check_k_strict(lam, k)
    outer = check_k_strict(outer, k)
    if not contains(outer, lam):
        raise ValueError(f"{lam} not contained in {outer}")
    n_rows = len(outer)

    def rec(i: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == n_rows:
            yield ()
            return
        lo = lam[i] if i < len(lam) else 0
        hi = min(outer[i], prev)
        for part in range(hi, lo - 1, -1):
            for tail in rec(i + 1, part):
                yield (part,) + tail

    for nu_raw in rec(0, outer[0] if outer else 0):
        nu = trim(nu_raw)
        if is_k_strict(nu, k):
            comps = _strip_analysis(nu, lam, k)
            if comps is not None:
                n = sum(1 for comp in comps if all(c != k + 1 for _, c in comp))
                yield nu, n
