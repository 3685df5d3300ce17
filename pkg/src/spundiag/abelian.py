"""Exact integer linear algebra: Smith normal form and finitely generated
abelian groups.

Everything runs on plain Python integers.  Entries can grow large during
reduction (they do, even for the small matrices produced by genus-12
diagrams), so arbitrary precision is not optional here.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, immutable."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> IntMatrix:
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != n_cols:
                raise ValueError("ragged rows")
        return cls(n_rows, n_cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, n_rows: int, columns: list[list[int]]) -> IntMatrix:
        for c in columns:
            if len(c) != n_rows:
                raise ValueError("column length mismatch")
        return cls(
            n_rows,
            len(columns),
            tuple(columns[j][i] for i in range(n_rows) for j in range(len(columns))),
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list[int]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        rows = [a + b for a, b in zip(self.row_lists(), other.row_lists())]
        return IntMatrix.from_rows(rows) if rows else IntMatrix.zero(0, self.cols + other.cols)


def smith_normal_form(m: IntMatrix) -> list[int]:
    """Invariant-factor diagonal of ``m``: d1 | d2 | ... | dr, then zeros.

    Returns min(rows, cols) non-negative integers.  The transforms realizing
    the normal form are not tracked.
    """
    a = m.row_lists()
    rows, cols = m.rows, m.cols
    n = min(rows, cols)
    diag: list[int] = []
    t = 0
    while t < n:
        piv = _min_nonzero(a, rows, cols, t)
        if piv is None:
            break
        # Bring a smallest-magnitude entry to (t, t) and reduce until the
        # pivot divides everything in its row, column and remaining block.
        while True:
            pi, pj = piv
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for r in a:
                    r[t], r[pj] = r[pj], r[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # Row and column are clear; force divisibility of the block.
                bad = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                for j in range(t, cols):
                    a[t][j] += a[bad][j]
            piv = _min_nonzero(a, rows, cols, t)
        diag.append(abs(a[t][t]))
        t += 1
    diag.extend([0] * (n - len(diag)))
    return diag


def _min_nonzero(a, rows, cols, t):
    best = None
    best_val = None
    for i in range(t, rows):
        for j in range(t, cols):
            v = a[i][j]
            if v and (best_val is None or abs(v) < best_val):
                best = (i, j)
                best_val = abs(v)
                if best_val == 1:
                    return best
    return best


def rank(m: IntMatrix) -> int:
    """Rank over Z (= over Q): number of nonzero invariant factors."""
    return sum(1 for d in smith_normal_form(m) if d)


def is_primitive_span(m: IntMatrix) -> bool:
    """True iff the column span is a direct summand of Z^rows.

    Equivalently, every invariant factor is 0 or 1.
    """
    return all(d <= 1 for d in smith_normal_form(m))


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group as (free rank, invariant factors).

    Torsion coefficients satisfy d1 | d2 | ... with every di >= 2, so group
    equality is plain field equality.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion coefficients must be >= 2")
        for d, e in zip(self.torsion, self.torsion[1:]):
            if e % d:
                raise ValueError("torsion must form a divisibility chain")

    @classmethod
    def trivial(cls) -> AbelianGroup:
        return cls(0)

    @classmethod
    def free(cls, r: int) -> AbelianGroup:
        return cls(r)

    @classmethod
    def cyclic(cls, d: int) -> AbelianGroup:
        d = abs(d)
        if d == 0:
            return cls(1)
        if d == 1:
            return cls(0)
        return cls(0, (d,))

    @classmethod
    def from_diagonal(cls, free_rank: int, diagonal: list[int]) -> AbelianGroup:
        """Normalize a cyclic-summand list: 0s become free rank, 1s drop."""
        extra = sum(1 for d in diagonal if d == 0)
        torsion = _invariant_factors([abs(d) for d in diagonal if abs(d) >= 2])
        return cls(free_rank + extra, tuple(torsion))

    def direct_sum(self, *others: AbelianGroup) -> AbelianGroup:
        groups = (self,) + others
        diag = [d for g in groups for d in g.torsion]
        return AbelianGroup.from_diagonal(sum(g.free_rank for g in groups), diag)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def free_part(self) -> AbelianGroup:
        return AbelianGroup(self.free_rank)

    def __str__(self) -> str:
        terms = []
        if self.free_rank == 1:
            terms.append("Z")
        elif self.free_rank > 1:
            terms.append(f"Z^{self.free_rank}")
        terms.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(terms) if terms else "0"


def _invariant_factors(ds: list[int]) -> list[int]:
    """Fold cyclic orders into a divisibility chain (all inputs >= 2)."""
    out = sorted(ds)
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                a, b = out[i], out[j]
                if b % a:
                    g = gcd(a, b)
                    out[i], out[j] = g, a * b // g
                    changed = True
        out.sort()
    return [d for d in out if d >= 2]


def cokernel(ambient_rank: int, relations: IntMatrix) -> AbelianGroup:
    """Z^ambient_rank / column-span(relations), normalized."""
    if relations.rows != ambient_rank:
        raise ValueError(
            f"relations have {relations.rows} rows, ambient rank is {ambient_rank}"
        )
    diag = smith_normal_form(relations)
    nonzero = [d for d in diag if d]
    free = ambient_rank - len(nonzero)
    return AbelianGroup.from_diagonal(free, nonzero)
