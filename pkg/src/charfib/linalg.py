"""Exact sparse linear algebra over the rationals.

All computations downstream (cohomology, relation finding, ideal membership,
Hilbert series of quotients) reduce to kernels, solves and quotient
representatives computed here.  Everything is exact: entries are
`fractions.Fraction`, elimination is fraction-free (integer rows scaled to a
common denominator, Bareiss-style cross-multiplication with per-row gcd
normalization) with a final normalization pass that makes pivots 1.

Pivoting is deterministic -- first nonzero entry in column order -- so every
result (and hence every presentation printed downstream) is reproducible
byte-for-byte.  Reduced row echelon form is unique anyway; determinism of the
*kernel basis ordering* comes from enumerating free columns in ascending
order.
"""

from fractions import Fraction
from math import gcd


def _row_from_fractions(vec):
    """Scale a sparse {col: Fraction} row to integers with gcd 1.

    Returns a {col: int} dict; the overall positive scale factor is dropped
    (only the row space matters for every use in this module).
    """
    vec = {c: Fraction(v) for c, v in vec.items() if v != 0}
    if not vec:
        return {}
    denom = 1
    for v in vec.values():
        denom = denom * v.denominator // gcd(denom, v.denominator)
    row = {c: int(v * denom) for c, v in vec.items()}
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _normalize_int_row(row):
    """Divide a {col: int} row by the gcd of its entries (in place safe)."""
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return dict(row)


class Echelon:
    """Incremental reduced echelon basis of a row space, over integer rows.

    Rows are sparse {col: int} dicts.  Each inserted independent row is fully
    reduced against the existing pivot rows and then used to back-reduce them,
    so `self.pivots` always maps pivot column -> a row of a reduced echelon
    basis.  Used as the workhorse for rank, span membership and quotient
    computations.
    """

    def __init__(self):
        self.pivots = {}  # pivot col -> {col: int} row, entry at pivot col > 0

    @property
    def rank(self):
        return len(self.pivots)

    def pivot_columns(self):
        return sorted(self.pivots)

    def reduce(self, vec):
        """Reduce a row ({col: Fraction|int}) against the basis.

        Returns a gcd-normalized integer row supported away from the pivot
        columns; empty dict iff the input lies in the row space.
        """
        row = _row_from_fractions(vec)
        while True:
            hit = None
            for c in row:
                if c in self.pivots:
                    if hit is None or c < hit:
                        hit = c
            if hit is None:
                return _normalize_int_row(row) if row else {}
            piv = self.pivots[hit]
            a, b = piv[hit], row[hit]
            # row := a*row - b*piv  (kills column `hit`, stays integral)
            new = {}
            for c, v in row.items():
                new[c] = a * v
            for c, v in piv.items():
                w = new.get(c, 0) - b * v
                if w:
                    new[c] = w
                elif c in new:
                    del new[c]
            row = _normalize_int_row(new) if new else {}
            if not row:
                return {}

    def add(self, vec):
        """Insert a row; returns True iff it was independent of the basis."""
        row = self.reduce(vec)
        if not row:
            return False
        lead = min(row)
        if row[lead] < 0:
            row = {c: -v for c, v in row.items()}
        # back-reduce existing pivot rows against the new one
        for pc, prow in list(self.pivots.items()):
            if lead in prow:
                a, b = row[lead], prow[lead]
                new = {c: a * v for c, v in prow.items()}
                for c, v in row.items():
                    w = new.get(c, 0) - b * v
                    if w:
                        new[c] = w
                    elif c in new:
                        del new[c]
                self.pivots[pc] = _normalize_int_row(new)
        self.pivots[lead] = row
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def fraction_rows(self):
        """Reduced echelon rows over Q with unit pivots, pivot cols ascending."""
        out = []
        for pc in sorted(self.pivots):
            row = self.pivots[pc]
            lead = Fraction(row[pc])
            out.append({c: Fraction(v) / lead for c, v in row.items()})
        return out


class SparseMatrix:
    """Immutable sparse matrix over Q.

    entries: canonical row-major list of (row, col, Fraction), no zeros,
    no duplicates.
    """

    def __init__(self, rows, cols, entries):
        assert rows >= 0 and cols >= 0
        seen = set()
        norm = []
        for r, c, v in entries:
            assert 0 <= r < rows and 0 <= c < cols, (r, c, rows, cols)
            assert (r, c) not in seen, f"duplicate entry at {(r, c)}"
            seen.add((r, c))
            v = Fraction(v)
            if v:
                norm.append((r, c, v))
        norm.sort(key=lambda e: (e[0], e[1]))
        self.rows = rows
        self.cols = cols
        self.entries = tuple(norm)

    @classmethod
    def from_dense(cls, data):
        rows = len(data)
        cols = len(data[0]) if rows else 0
        entries = [(r, c, v) for r, row in enumerate(data)
                   for c, v in enumerate(row) if v]
        return cls(rows, cols, entries)

    @classmethod
    def from_rows(cls, rows, cols, sparse_rows):
        entries = [(r, c, v) for r, row in enumerate(sparse_rows)
                   for c, v in row.items() if v]
        return cls(rows, cols, entries)

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def mul_vec(self, x):
        assert len(x) == self.cols
        out = [Fraction(0)] * self.rows
        for r, c, v in self.entries:
            out[r] += v * x[c]
        return out

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


def _echelon_of(m):
    ech = Echelon()
    for row in m.row_dicts():
        if row:
            ech.add(row)
    return ech


def rank(m):
    return _echelon_of(m).rank


def kernel_basis(m):
    """Basis of the right kernel of m, as tuples of Fractions.

    Vectors are ordered by ascending free column; each has a 1 in its free
    column and its pivot-column entries read off the unique RREF.
    """
    ech = _echelon_of(m)
    rows = ech.fraction_rows()
    pivot_cols = ech.pivot_columns()
    free_cols = [c for c in range(m.cols) if c not in ech.pivots]
    basis = []
    for f in free_cols:
        vec = [Fraction(0)] * m.cols
        vec[f] = Fraction(1)
        for pc, row in zip(pivot_cols, rows):
            if f in row:
                vec[pc] = -row[f]
        lead = next(v for v in vec if v)
        if lead < 0:
            vec = [-v for v in vec]
        basis.append(tuple(vec))
    return basis


def solve(m, b):
    """Some x with m·x = b, or None if inconsistent."""
    if len(b) != m.rows:
        raise ValueError(f"rhs length {len(b)} != rows {m.rows}")
    # Augment with the rhs as an extra column and reduce; the system is
    # consistent iff the augmented column is not a pivot.
    ech = Echelon()
    rows = m.row_dicts()
    aug = m.cols  # index of the augmented column
    for r, row in enumerate(rows):
        row = dict(row)
        if b[r]:
            row[aug] = Fraction(b[r])
        if row:
            ech.add(row)
    if aug in ech.pivots:
        return None
    x = [Fraction(0)] * m.cols
    for pc in ech.pivot_columns():
        row = ech.pivots[pc]
        if aug in row:
            # pivot rows encode x_pc + (free terms) - b = 0 after reduction
            x[pc] = Fraction(row[aug]) / row[pc]
    # pivots are fully reduced, so setting free vars to 0 solves exactly
    return tuple(x)


def quotient_representatives(space_dim, subspace):
    """Standard-basis vectors projecting to a basis of ambient/span(subspace).

    Returns unit vectors at the non-pivot coordinates of the subspace's
    reduced echelon form; their count is space_dim - rank(subspace).
    """
    ech = Echelon()
    for v in subspace:
        assert len(v) == space_dim
        row = {c: Fraction(x) for c, x in enumerate(v) if x}
        if row:
            ech.add(row)
    reps = []
    for c in range(space_dim):
        if c not in ech.pivots:
            vec = [Fraction(0)] * space_dim
            vec[c] = Fraction(1)
            reps.append(tuple(vec))
    return reps


def dense_rref(data):
    """Dense fraction-free Gaussian elimination oracle (for tests).

    Takes a list of dense rows, returns (rank, rref rows over Q).  Written
    independently of Echelon: dense two-phase Bareiss-style elimination.
    """
    m = [[Fraction(v) for v in row] for row in data]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    piv_r = 0
    pivots = []
    for c in range(ncols):
        sel = None
        for r in range(piv_r, nrows):
            if m[r][c] != 0:
                sel = r
                break
        if sel is None:
            continue
        m[piv_r], m[sel] = m[sel], m[piv_r]
        pivots.append(c)
        pv = m[piv_r][c]
        for r in range(nrows):
            if r != piv_r and m[r][c] != 0:
                f = m[r][c] / pv
                for cc in range(ncols):
                    m[r][cc] -= f * m[piv_r][cc]
        piv_r += 1
        if piv_r == nrows:
            break
    for r, c in enumerate(pivots):
        pv = m[r][c]
        if pv != 1:
            m[r] = [v / pv for v in m[r]]
    return len(pivots), m[:len(pivots)]
