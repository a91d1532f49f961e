"""k-tableaux, k-bitableaux and semistandard Young tableaux.

A k-tableau of shape lam/mu is stored by the chain of k-strict partitions it
encodes; the filling view puts entry i on the boxes of lam^i / lam^{i-1}.
Entries of bitableaux are encoded as pairs: (0, j) is the marked letter j',
(1, v) the unmarked letter v, which makes the alphabet order 1'<...<k'<1<2<...
the tuple order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterator, Sequence

from .partitions import IntVec, check_k_strict, check_partition, conjugate, contains, trim
from .strips import _strip_analysis, is_k_horizontal_strip, k_horizontal_extensions, n_strip


# ---------------------------------------------------------------------------
# k-tableaux


@dataclass(frozen=True)
class KTableau:
    """A chain mu = lam^0 <= ... <= lam^r = lam of k-horizontal strips."""

    k: int
    chain: tuple[IntVec, ...]

    @property
    def inner(self) -> IntVec:
        return self.chain[0]

    @property
    def outer(self) -> IntVec:
        return self.chain[-1]

    @property
    def n_stat(self) -> int:
        return sum(n_strip(self.chain[i], self.chain[i - 1], self.k)
                   for i in range(1, len(self.chain)))

    @property
    def content(self) -> tuple[int, ...]:
        return tuple(sum(self.chain[i]) - sum(self.chain[i - 1])
                     for i in range(1, len(self.chain)))

    def rows(self) -> tuple[tuple[int, ...], ...]:
        """The filling: row tuples of entries over the skew shape lam/mu."""
        outer, inner = self.outer, self.inner
        grid = {}
        for step in range(1, len(self.chain)):
            lo, hi = self.chain[step - 1], self.chain[step]
            for r in range(1, len(hi) + 1):
                start = lo[r - 1] if r - 1 < len(lo) else 0
                for c in range(start + 1, hi[r - 1] + 1):
                    grid[(r, c)] = step
        out = []
        for r in range(1, len(outer) + 1):
            start = inner[r - 1] if r - 1 < len(inner) else 0
            out.append(tuple(grid[(r, c)] for c in range(start + 1, outer[r - 1] + 1)))
        return tuple(out)

    def __str__(self) -> str:
        inner = self.inner
        lines = []
        for r, row in enumerate(self.rows(), start=1):
            pad = inner[r - 1] if r - 1 < len(inner) else 0
            lines.append("  " + ". " * pad + " ".join(str(v) for v in row))
        return "\n".join(lines) if lines else "  (empty)"


def k_tableaux(lam: IntVec, mu: IntVec, k: int, max_entry: int) -> Iterator[KTableau]:
    """All k-tableaux of shape lam/mu with entries <= max_entry.

    Chains are produced in lexicographic order; empty strips are allowed
    (entry i simply does not occur), so a chain always has max_entry steps.
    """
    lam = check_k_strict(lam, k)
    mu = check_k_strict(mu, k)
    if not contains(lam, mu):
        raise ValueError(f"{mu} not contained in {lam}")
    if max_entry < 1:
        if lam == mu:
            yield KTableau(k, (lam,))
        return

    def rec(chain: tuple[IntVec, ...], steps_left: int) -> Iterator[tuple[IntVec, ...]]:
        cur = chain[-1]
        if steps_left == 0:
            if cur == lam:
                yield chain
            return
        for nxt, _ in sorted(k_horizontal_extensions(cur, lam, k)):
            yield from rec(chain + (nxt,), steps_left - 1)

    for chain in rec((mu,), max_entry):
        yield KTableau(k, chain)


@cache
def count_standard_k_tableaux(lam: IntVec, mu: IntVec, k: int) -> int:
    """Chains of single-box k-horizontal strips from mu up to lam."""
    lam = check_k_strict(lam, k)
    mu = check_k_strict(mu, k)
    if not contains(lam, mu):
        raise ValueError(f"{mu} not contained in {lam}")
    if lam == mu:
        return 1
    total = 0
    for nxt, _ in k_horizontal_extensions(mu, lam, k):
        if sum(nxt) == sum(mu) + 1:
            total += count_standard_k_tableaux(lam, nxt, k)
    return total


def count_standard_k_tableaux_downward(lam: IntVec, mu: IntVec, k: int) -> int:
    """Same count by peeling single boxes off lam; a self-oracle."""
    lam = check_k_strict(lam, k)
    mu = check_k_strict(mu, k)

    @cache
    def down(top: IntVec) -> int:
        if top == mu:
            return 1
        if not contains(top, mu):
            return 0
        total = 0
        for i in range(len(top)):
            smaller = trim(top[:i] + (top[i] - 1,) + top[i + 1:])
            if (is_partition_step(top, i)
                    and check_k(smaller, k)
                    and contains(smaller, mu)
                    and is_k_horizontal_strip(top, smaller, k)):
                total += down(smaller)
        return total

    def is_partition_step(top: IntVec, i: int) -> bool:
        nxt = top[i + 1] if i + 1 < len(top) else 0
        return top[i] - 1 >= nxt

    def check_k(v: IntVec, k: int) -> bool:
        from .partitions import is_k_strict
        return is_k_strict(v, k)

    return down(lam)


def standard_chain_of(rows: Sequence[Sequence[int]], k: int) -> KTableau:
    """Rebuild the chain of a standard filling given as row tuples (full shape)."""
    cells = {}
    for r, row in enumerate(rows, start=1):
        for c, val in enumerate(row, start=1):
            cells[val] = (r, c)
    total = len(cells)
    if sorted(cells) != list(range(1, total + 1)):
        raise ValueError("entries of a standard tableau must be 1..n, each once")
    shape = [0] * len(rows)
    chain = [()]
    for val in range(1, total + 1):
        r, c = cells[val]
        if shape[r - 1] != c - 1:
            raise ValueError(f"entry {val} at {(r, c)} does not extend rows left-to-right")
        shape[r - 1] = c
        chain.append(trim(tuple(shape)))
    return KTableau(k, tuple(chain))


# ---------------------------------------------------------------------------
# k-bitableaux

Entry = tuple[int, int]  # (0, j) = marked j', (1, v) = unmarked v


@dataclass(frozen=True)
class KBitableau:
    """A filling of lam by 1'<...<k'<1<2<...; the marked region is a partition
    mu with mu_1 <= k, carrying a row-strict filling, and the unmarked entries
    form a k-tableau of shape lam/mu.
    """

    k: int
    marked_rows: tuple[tuple[int, ...], ...]  # filling of mu by 1..k
    unmarked: KTableau

    @property
    def shape(self) -> IntVec:
        return self.unmarked.outer

    @property
    def n_stat(self) -> int:
        return self.unmarked.n_stat

    def y_content(self) -> tuple[int, ...]:
        counts = [0] * self.k
        for row in self.marked_rows:
            for j in row:
                counts[j - 1] += 1
        return tuple(counts)

    def x_content(self) -> tuple[int, ...]:
        return self.unmarked.content

    def rows(self) -> tuple[tuple[str, ...], ...]:
        unmarked_rows = self.unmarked.rows()
        out = []
        for r in range(1, len(self.shape) + 1):
            marked = self.marked_rows[r - 1] if r - 1 < len(self.marked_rows) else ()
            row = tuple(f"{j}'" for j in marked) + tuple(
                str(v) for v in unmarked_rows[r - 1])
            out.append(row)
        return tuple(out)

    def __str__(self) -> str:
        return "\n".join("  " + " ".join(row) for row in self.rows()) or "  (empty)"


def row_strict_fillings(mu: IntVec, max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Fillings of mu by 1..max_entry strictly increasing along rows and
    weakly increasing down columns (conjugates of SSYT)."""
    mu = check_partition(mu)
    if not mu:
        yield ()
        return
    rows: list[list[int]] = [[] for _ in mu]

    def rec(r: int, c: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if r == len(mu):
            yield tuple(tuple(row) for row in rows)
            return
        if c > mu[r]:
            yield from rec(r + 1, 1)
            return
        lo = rows[r][c - 2] + 1 if c > 1 else 1
        if r > 0 and c <= mu[r - 1]:
            lo = max(lo, rows[r - 1][c - 1])
        for v in range(lo, max_entry + 1):
            rows[r].append(v)
            yield from rec(r, c + 1)
            rows[r].pop()

    yield from rec(0, 1)


def k_bitableaux(lam: IntVec, k: int, max_unmarked: int) -> Iterator[KBitableau]:
    """All k-bitableaux of shape lam with unmarked entries <= max_unmarked."""
    lam = check_k_strict(lam, k)
    from .partitions import subpartitions

    inners = sorted(mu for mu in subpartitions(lam) if (not mu or mu[0] <= k))
    for mu in inners:
        for marked in row_strict_fillings(mu, k):
            for tab in k_tableaux(lam, mu, k, max_unmarked):
                yield KBitableau(k, marked, tab)


# ---------------------------------------------------------------------------
# semistandard Young tableaux (for Schur polynomials)


def semistandard_tableaux(shape: IntVec, max_entry: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """SSYT of the given shape: weakly increasing rows, strictly increasing columns."""
    shape = check_partition(shape)
    if not shape:
        yield ()
        return
    rows: list[list[int]] = [[] for _ in shape]

    def rec(r: int, c: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if r == len(shape):
            yield tuple(tuple(row) for row in rows)
            return
        if c > shape[r]:
            yield from rec(r + 1, 1)
            return
        lo = rows[r][c - 2] if c > 1 else 1
        if r > 0 and c <= shape[r - 1]:
            lo = max(lo, rows[r - 1][c - 1] + 1)
        for v in range(lo, max_entry + 1):
            rows[r].append(v)
            yield from rec(r, c + 1)
            rows[r].pop()

    yield from rec(0, 1)


def ssyt_content(tab: Sequence[Sequence[int]], max_entry: int) -> tuple[int, ...]:
    counts = [0] * max_entry
    for row in tab:
        for v in row:
            counts[v - 1] += 1
    return tuple(counts)
