"""Integer vectors, partitions, k-strict partitions and valid pair sets.

Conventions used throughout the package:

- An integer vector is a tuple of ints, indexed 1-based in the mathematics
  and 0-based in the code.  Trailing zeros are meaningless for monomials and
  are trimmed by normalisation, but raw vectors handed to raising-operator
  expansions may carry internal or trailing zeros (position matters there).
- A partition is a weakly decreasing tuple of positive ints (no trailing
  zeros).  A partition is k-strict when all parts greater than k are
  distinct; 0-strict = strict.
- Boxes of a Young diagram are (row, column) pairs, both 1-based.  Row zero
  enters only through the explicit row-zero convention of the strip module.
- A pair set is a finite subset of {(i, j) : 1 <= i < j}; it is valid when it
  is an order ideal for the componentwise order.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable, Iterator, Sequence

IntVec = tuple[int, ...]
Pair = tuple[int, int]
PairSet = frozenset


# ---------------------------------------------------------------------------
# integer vectors


def trim(vec: Sequence[int]) -> IntVec:
    """Drop trailing zeros."""
    v = tuple(vec)
    n = len(v)
    while n and v[n - 1] == 0:
        n -= 1
    return v[:n]


def weight(vec: Sequence[int]) -> int:
    return sum(vec)


def num_nonzero(vec: Sequence[int]) -> int:
    """#alpha, the number of nonzero parts."""
    return sum(1 for a in vec if a)


def sort_desc(vec: Sequence[int]) -> IntVec:
    return tuple(sorted(vec, reverse=True))


def is_partition(vec: Sequence[int]) -> bool:
    v = tuple(vec)
    return all(a >= 0 for a in v) and all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def is_strict_partition(vec: Sequence[int]) -> bool:
    v = trim(vec)
    return is_partition(v) and all(v[i] > v[i + 1] for i in range(len(v) - 1))


def is_k_strict(lam: Sequence[int], k: int) -> bool:
    """Parts greater than k are distinct."""
    v = trim(lam)
    if not is_partition(v):
        return False
    return all(v[i] != v[i + 1] or v[i] <= k for i in range(len(v) - 1))


def check_partition(lam: Sequence[int]) -> IntVec:
    lam = trim(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


def check_k_strict(lam: Sequence[int], k: int) -> IntVec:
    lam = trim(lam)
    if not is_k_strict(lam, k):
        raise ValueError(f"not a {k}-strict partition: {lam}")
    return lam


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """mu is contained in lam as Young diagrams."""
    lam, mu = trim(lam), trim(mu)
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def conjugate(lam: Sequence[int]) -> IntVec:
    lam = trim(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a >= c) for c in range(1, lam[0] + 1))


def column_height(lam: Sequence[int], c: int) -> int:
    """Number of boxes of lam in column c (lam'_c)."""
    return sum(1 for a in lam if a >= c)


def part_multiplicity(lam: Sequence[int], c: int) -> int:
    """m_c(lam), the number of parts equal to c."""
    return sum(1 for a in lam if a == c)


def dominates(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """alpha >= beta in dominance order; requires equal weights."""
    if weight(alpha) != weight(beta):
        raise ValueError(
            f"dominance needs equal weights: |{tuple(alpha)}| != |{tuple(beta)}|"
        )
    total_a = total_b = 0
    for i in range(max(len(alpha), len(beta))):
        total_a += alpha[i] if i < len(alpha) else 0
        total_b += beta[i] if i < len(beta) else 0
        if total_a < total_b:
            return False
    return True


def dominance_key(vec: Sequence[int]) -> tuple:
    """Sort key: within a degree, dominance-smaller indices first (so the
    leading term u_lam of a unitriangular expansion prints first)."""
    prefix = []
    total = 0
    for a in vec:
        total += a
        prefix.append(total)
    return (weight(vec), tuple(prefix), tuple(vec))


# ---------------------------------------------------------------------------
# generation


def partitions_of(n: int, max_part: int | None = None,
                  max_rows: int | None = None) -> Iterator[IntVec]:
    """All partitions of n, largest part first, parts <= max_part, length <= max_rows."""
    if max_part is None:
        max_part = n
    if max_rows is None:
        max_rows = n

    def rec(rest: int, cap: int, rows: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, rows - 1):
                yield (first,) + tail

    yield from rec(n, max_part, max_rows)


def k_strict_partitions_of(n: int, k: int, max_part: int | None = None,
                           max_rows: int | None = None) -> Iterator[IntVec]:
    for lam in partitions_of(n, max_part, max_rows):
        if is_k_strict(lam, k):
            yield lam


def partitions_in_rect(rows: int, cols: int) -> Iterator[IntVec]:
    """All partitions fitting in a rows x cols rectangle, the empty one included."""
    for n in range(rows * cols + 1):
        yield from partitions_of(n, max_part=cols, max_rows=rows)


def k_strict_in_rect(k: int, rows: int, cols: int) -> list[IntVec]:
    """The k-strict partitions inside a rows x cols rectangle."""
    return [lam for lam in partitions_in_rect(rows, cols) if is_k_strict(lam, k)]


def subpartitions(lam: Sequence[int]) -> Iterator[IntVec]:
    """All partitions mu contained in lam."""
    lam = trim(lam)

    def rec(i: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        for part in range(min(lam[i], prev), -1, -1):
            if part == 0:
                yield ()
                return
            for tail in rec(i + 1, part):
                yield (part,) + tail

    seen = set()
    for mu in rec(0, lam[0] if lam else 0):
        if mu not in seen:
            seen.add(mu)
            yield mu
    if () not in seen:
        yield ()


def compositions_of(n: int, length: int) -> Iterator[IntVec]:
    """All compositions of n into exactly `length` nonnegative parts."""
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for tail in compositions_of(n - first, length - 1):
            yield (first,) + tail


# ---------------------------------------------------------------------------
# diagrams


def boxes(lam: Sequence[int]) -> list[tuple[int, int]]:
    return [(r, c) for r, part in enumerate(trim(lam), start=1)
            for c in range(1, part + 1)]


def skew_boxes(lam: Sequence[int], mu: Sequence[int]) -> list[tuple[int, int]]:
    """Boxes of lam/mu; requires mu contained in lam."""
    lam, mu = trim(lam), trim(mu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    out = []
    for r, part in enumerate(lam, start=1):
        lo = mu[r - 1] if r - 1 < len(mu) else 0
        out.extend((r, c) for c in range(lo + 1, part + 1))
    return out


def rim(lam: Sequence[int]) -> frozenset:
    """Boxes [r,c] of lam such that [r+1,c+1] lies outside lam."""
    lam = trim(lam)
    out = set()
    for r, part in enumerate(lam, start=1):
        nxt = lam[r] if r < len(lam) else 0
        for c in range(nxt, part + 1):
            if c >= 1:
                out.add((r, c))
    return frozenset(out)


def shifted_boxes(lam: Sequence[int]) -> frozenset:
    """Sh(lam) for a strict partition: row i shifted i-1 to the right."""
    lam = trim(lam)
    if not is_strict_partition(lam):
        raise ValueError(f"shifted diagram needs a strict partition: {lam}")
    return frozenset((r, c + r - 1) for r, part in enumerate(lam, start=1)
                     for c in range(1, part + 1))


def edge_components(cells: Iterable[tuple[int, int]]) -> list[frozenset]:
    """Connected components under edge adjacency (4-neighbourhood)."""
    return _components(cells, diagonal=False)


def vertex_components(cells: Iterable[tuple[int, int]]) -> list[frozenset]:
    """Connected components where sharing a vertex connects (8-neighbourhood)."""
    return _components(cells, diagonal=True)


def _components(cells, diagonal: bool) -> list[frozenset]:
    todo = set(cells)
    comps = []
    while todo:
        seed = todo.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            r, c = frontier.pop()
            for dr in (-1, 0, 1):
                for dc in (-1, 0, 1):
                    if (dr or dc) and (diagonal or dr == 0 or dc == 0):
                        nb = (r + dr, c + dc)
                        if nb in todo:
                            todo.remove(nb)
                            comp.add(nb)
                            frontier.append(nb)
        comps.append(frozenset(comp))
    return comps


# ---------------------------------------------------------------------------
# pair sets


def is_valid_pair_set(pairs: Iterable[Pair]) -> bool:
    """An order ideal of {(i,j): 1 <= i < j} under componentwise <=."""
    ps = frozenset(pairs)
    for i, j in ps:
        if not (1 <= i < j):
            return False
        for i2 in range(1, i + 1):
            for j2 in range(i2 + 1, j + 1):
                if (i2, j2) not in ps:
                    return False
    return True


def check_pair_set(pairs: Iterable[Pair]) -> PairSet:
    ps = frozenset(pairs)
    if not is_valid_pair_set(ps):
        raise ValueError(f"not a valid set of pairs: {sorted(ps)}")
    return ps


@cache
def cset(lam: IntVec, k: int) -> PairSet:
    """C(lam) = {(i,j) : lam_i + lam_j > 2k + j - i, j <= l(lam)}."""
    lam = check_k_strict(lam, k)
    n = len(lam)
    return frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                     if lam[i - 1] + lam[j - 1] > 2 * k + j - i)


def outside_rim(pairs: Iterable[Pair], max_col: int) -> PairSet:
    """The outside rim of a valid pair set, truncated to columns j <= max_col."""
    ps = check_pair_set(pairs)
    out = set()
    for j in range(2, max_col + 1):
        for i in range(1, j):
            if (i, j) not in ps and (i == 1 or (i - 1, j - 1) in ps):
                out.add((i, j))
    return frozenset(out)


def partition_from_pair_set(pairs: Iterable[Pair], k: int) -> IntVec:
    """The k-strict partition (k > 0) whose C-set is the given valid pair set."""
    if k <= 0:
        raise ValueError("the reconstruction needs k > 0")
    ps = check_pair_set(pairs)
    if not ps:
        return (k,)
    d = {}
    for i, j in ps:
        d[i] = d.get(i, 0) + 1
    rows = d.get(1, 0) + 1
    return trim(tuple(k + 1 + d[i] if d.get(i, 0) > 0 else k
                      for i in range(1, rows + 1)))


# ---------------------------------------------------------------------------
# literals


def parse_parts(text: str) -> IntVec:
    """Parse a comma-separated partition/vector literal; '' means empty."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition literal: {text!r}") from None


def fmt_parts(vec: Sequence[int]) -> str:
    return ",".join(str(a) for a in vec)


def parse_pair_set(text: str) -> PairSet:
    """Parse a D-set literal like '12,13,23' (single-digit row indices)."""
    text = text.strip()
    if not text:
        return frozenset()
    pairs = set()
    for tok in text.split(","):
        tok = tok.strip()
        if len(tok) != 2 or not tok.isdigit():
            raise ValueError(f"bad pair token {tok!r}; expected two digits like '13'")
        pairs.add((int(tok[0]), int(tok[1])))
    return check_pair_set(pairs)


def fmt_pair_set(pairs: Iterable[Pair]) -> str:
    return ",".join(f"{i}{j}" for i, j in sorted(pairs))
