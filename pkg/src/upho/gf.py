"""Small finite fields GF(q) for q in {2, 3, 4, 5}, plus echelon forms.

Elements are the ints 0..q-1.  For prime q the tables are mod-q arithmetic;
GF(4) is built as GF(2)[t]/(t^2+t+1) with elements encoded by coefficient
bits (2 = t, 3 = t+1).  Subspaces are represented canonically by the tuple
of rows of the reduced row echelon form of any spanning set, which makes
equality and deduplication exact.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import UnsupportedFieldOrder


class GF:
    """Arithmetic tables for one supported field order."""

    def __init__(self, q: int):
        if q not in (2, 3, 4, 5):
            raise UnsupportedFieldOrder(f"GF({q}) is not provided; q must be 2, 3, 4, or 5")
        self.q = q
        if q == 4:
            def mul4(a, b):
                # carry-less multiply then reduce by t^2 = t + 1
                r = 0
                for bit in range(2):
                    if (b >> bit) & 1:
                        r ^= a << bit
                if (r >> 2) & 1:
                    r ^= 0b110
                return r & 0b11

            self.add_table = [[a ^ b for b in range(4)] for a in range(4)]
            self.mul_table = [[mul4(a, b) for b in range(4)] for a in range(4)]
            self.neg_table = [a for a in range(4)]
        else:
            self.add_table = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul_table = [[(a * b) % q for b in range(q)] for a in range(q)]
            self.neg_table = [(-a) % q for a in range(q)]
        self.inv_table = [0] * q
        for a in range(1, q):
            self.inv_table[a] = next(
                b for b in range(1, q) if self.mul_table[a][b] == 1
            )

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.inv_table[a]


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)


def rref(rows, q: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form of a spanning set; zero rows dropped.

    The result is the canonical representative of the row space, sorted by
    pivot column with pivots 1 and zeros above and below each pivot.
    """
    gf = field(q)
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, len(mat)) if mat[r][col] != 0), None)
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        inv = gf.inv(mat[pivot_row][col])
        mat[pivot_row] = [gf.mul(inv, v) for v in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] != 0:
                c = mat[r][col]
                mat[r] = [
                    gf.sub(v, gf.mul(c, w)) for v, w in zip(mat[r], mat[pivot_row])
                ]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(r) for r in mat[:pivot_row])


def span_members(basis, q: int, ncols: int):
    """All vectors in the row space of ``basis`` (tuples of length ncols)."""
    gf = field(q)
    vecs = set()
    for coeffs in product(range(q), repeat=len(basis)):
        v = [0] * ncols
        for c, row in zip(coeffs, basis):
            if c:
                v = [gf.add(x, gf.mul(c, y)) for x, y in zip(v, row)]
        vecs.add(tuple(v))
    return vecs


def all_vectors(q: int, ncols: int):
    return product(range(q), repeat=ncols)


def subspaces_of_dimension(dim: int, q: int, ncols: int, containing=()):
    """Canonical RREF tuples of all dim-dimensional subspaces of GF(q)^ncols
    that contain the given subspace (default: all of them)."""
    base = rref(list(containing), q) if containing else ()
    if len(base) > dim:
        return set()
    frontier = {base}
    for _ in range(dim - len(base)):
        nxt = set()
        for sub in frontier:
            members = span_members(sub, q, ncols) if sub else {(0,) * ncols}
            for v in all_vectors(q, ncols):
                if v not in members and any(v):
                    nxt.add(rref(list(sub) + [v], q))
        frontier = nxt
    return frontier
