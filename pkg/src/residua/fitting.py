"""Presentation matrices and Fitting ideals.

The quotient I/a is presented by [A|B]: the syzygy columns A of a minimal
generating sequence x_1..x_n of I, followed by one column per generator
a_j of a recording a_j = sum c_ij x_i.  Fitt_0(I/a) is then the ideal of
n x n minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .ring import PolyRing
from .groebner import express_in_terms, ideal_syzygies
from .ideals import Ideal, min_gens


class NotASubidealError(ValueError):
    pass


@dataclass(frozen=True)
class PresentationMatrix:
    ring: PolyRing
    entries: tuple        # rows of polynomials
    target_gens: tuple    # the n polynomials being presented
    n_syzygy_cols: int    # leading columns are syzygies; the rest are B-columns

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> list:
        return [row[j] for row in self.entries]


def _det(ring, rows, row_idx, col_idx, memo):
    """Determinant of the submatrix on row_idx x col_idx, memoized cofactor
    expansion along the first row."""
    key = (row_idx, col_idx)
    if key in memo:
        return memo[key]
    if not row_idx:
        result = ring.one
    else:
        r = row_idx[0]
        rest = row_idx[1:]
        result = ring.zero
        for pos, c in enumerate(col_idx):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            sub = _det(ring, rows, rest, col_idx[:pos] + col_idx[pos + 1:], memo)
            term = entry * sub
            result = result + term if pos % 2 == 0 else result - term
    memo[key] = result
    return result


def minors(ring: PolyRing, matrix, r: int) -> Ideal:
    """Ideal of r x r minors; r <= 0 gives (1), r > min(dims) gives (0)."""
    rows = [tuple(row) for row in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    if r <= 0:
        return Ideal(ring, (ring.one,))
    if r > min(nrows, ncols):
        return Ideal(ring, ())
    memo = {}
    gens = []
    for row_idx in combinations(range(nrows), r):
        for col_idx in combinations(range(ncols), r):
            d = _det(ring, rows, row_idx, col_idx, memo)
            if not d.is_zero():
                gens.append(d)
    return Ideal(ring, gens)


def presentation_of_quotient(I: Ideal, a: Ideal) -> PresentationMatrix:
    """The [A|B] presentation of I/a over min_gens(I)."""
    if not I.contains_ideal(a):
        raise NotASubidealError("a is not contained in I")
    x = min_gens(I)
    n = len(x)
    ring = I.ring
    a_gens = [g for g in a.generators if not g.is_zero()]
    if n == 0:
        return PresentationMatrix(ring, (), (), 0)
    syz = ideal_syzygies(x)
    cols = [[s.components[i] for i in range(n)] for s in syz]
    for g in a_gens:
        cols.append(express_in_terms(g, x))
    entries = tuple(tuple(col[i] for col in cols) for i in range(n))
    return PresentationMatrix(ring, entries, tuple(x), len(syz))


def fitt0_quotient(I: Ideal, a: Ideal) -> Ideal:
    """Fitt_0(I/a); the zero module (a = I = 0 included) yields (1)."""
    pres = presentation_of_quotient(I, a)
    if pres.rows == 0:
        return Ideal(I.ring, (I.ring.one,))
    return minors(I.ring, pres.entries, pres.rows)


def fitting_ideal(I: Ideal, j: int) -> Ideal:
    """Fitt_j(I) from the syzygy presentation of min_gens(I)."""
    x = min_gens(I)
    n = len(x)
    if n == 0:
        return Ideal(I.ring, (I.ring.one,))
    syz = ideal_syzygies(x)
    matrix = [[s.components[i] for s in syz] for i in range(n)]
    return minors(I.ring, matrix, n - j)
