"""Exact rational linear algebra and integer Smith normal form.

Everything here works on Python ``int`` and :class:`fractions.Fraction`; no
floating point is involved anywhere.  Vectors and matrices are plain nested
sequences, except for :class:`IntMatrix`, a small sparse integer matrix used
for boundary operators.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import InputError

def to_fractions(rows: Iterable[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Iterable[Sequence], ncols: int | None = None):
    """Reduced row echelon form over the rationals.

    Returns
    -------
    reduced : list of list of Fraction
        The nonzero rows of the reduced echelon form.
    pivots : list of int
        Pivot column of each returned row.
    """
    a = to_fractions(rows)
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Iterable[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def primitive(vec: Sequence, fix_sign: bool = True) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector.

    The result has content 1 and, unless ``fix_sign`` is false, its first
    nonzero entry is positive.
    """
    fr = [Fraction(x) for x in vec]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if fix_sign and first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def kernel_basis(rows: Sequence[Sequence], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Basis of the right kernel ``{x : m x = 0}``.

    Basis vectors are primitive integer vectors, one per free column of the
    reduced echelon form, in increasing free-column order.  ``ncols`` must be
    given when ``rows`` is empty.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def row_space_key(rows: Sequence[Sequence], ncols: int) -> tuple:
    """Canonical, hashable key of the row space (its reduced echelon form)."""
    reduced, _ = rref(rows, ncols)
    return tuple(tuple(row) for row in reduced)


def subspace_leq(a: Sequence[Sequence], b: Sequence[Sequence], dim: int | None = None) -> bool:
    """True iff ``span(a)`` is contained in ``span(b)``."""
    dims = {len(v) for v in list(a) + list(b)}
    if dim is not None:
        dims.add(dim)
    if len(dims) > 1:
        raise InputError("E_SHAPE", f"ambient dimension mismatch: {sorted(dims)}")
    if not a:
        return True
    ncols = dims.pop()
    return rank(list(b) + list(a), ncols) == rank(b, ncols)


# ---------------------------------------------------------------------------
# integer matrices


class IntMatrix:
    """Sparse integer matrix: shape plus a dict of nonzero entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.entries = {k: v for k, v in (entries or {}).items() if v != 0}

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        nrows = len(dense)
        if cols is None:
            cols = len(dense[0]) if nrows else 0
        entries = {}
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise InputError("E_SHAPE", "ragged integer matrix")
            for j, v in enumerate(row):
                if v:
                    entries[i, j] = int(v)
        return cls(nrows, cols, entries)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError("E_SHAPE", f"cannot multiply {self.shape} by {other.shape}")
        by_row: dict[int, list] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), u in self.entries.items():
            for j, v in by_row.get(k, ()):
                out[i, j] = out.get((i, j), 0) + u * v
        return IntMatrix(self.rows, other.cols, out)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


def _dense_diagonal(a: list[list[int]]) -> list[int]:
    """Diagonalise ``a`` in place with smallest-absolute-value pivoting.

    Returns the absolute values of the diagonal, which form a divisibility
    chain.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    clean = clean and a[t][j] == 0
            if not clean:
                best = None
                for i in range(t, m):
                    v = a[i][t]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, t)
                for j in range(t, n):
                    v = a[t][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), t, j)
                swap_rows(t, best[1])
                swap_cols(t, best[2])
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def smith_normal_form(m) -> tuple[int, list[int]]:
    """Rank and invariant factors of an integer matrix.

    Unit pivots are eliminated first on a sparse representation (each
    contributes an invariant factor 1); whatever remains is diagonalised
    densely with smallest-absolute-value pivoting.  Both stages use a fixed
    scan order, so the computation is deterministic.

    Parameters
    ----------
    m : IntMatrix or sequence of sequences of int

    Returns
    -------
    rank : int
    invariant_factors : list of int
        Positive, ``d1 | d2 | ... | d_rank``.
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix.from_dense(m)
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (i, j), v in m.entries.items():
        rows.setdefault(i, {})[j] = v
        cols.setdefault(j, set()).add(i)

    units = 0
    progress = True
    while progress:
        progress = False
        for i in sorted(rows, key=lambda r: (len(rows[r]), r)):
            row = rows.get(i)
            if not row:
                continue
            candidates = [j for j, v in row.items() if v in (1, -1)]
            if not candidates:
                continue
            j = min(candidates, key=lambda c: (len(cols[c]), c))
            p = row[j]
            for r in sorted(cols[j] - {i}):
                target = rows[r]
                f = target[j] * p
                for c, v in row.items():
                    nv = target.get(c, 0) - f * v
                    if nv:
                        if c not in target:
                            cols[c].add(r)
                        target[c] = nv
                    elif c in target:
                        del target[c]
                        cols[c].discard(r)
                if not target:
                    del rows[r]
            for c in row:
                cols[c].discard(i)
                if not cols[c]:
                    del cols[c]
            del rows[i]
            units += 1
            progress = True

    factors = [1] * units
    if rows:
        col_ids = sorted(cols)
        col_pos = {c: k for k, c in enumerate(col_ids)}
        dense = []
        for i in sorted(rows):
            line = [0] * len(col_ids)
            for c, v in rows[i].items():
                line[col_pos[c]] = v
            dense.append(line)
        factors.extend(sorted(_dense_diagonal(dense)))
    return len(factors), factors


# ---------------------------------------------------------------------------
# exact feasibility


def _phase_one(a: list[list[Fraction]], b: list[Fraction]):
    """Find ``w >= 0`` with ``a w = b`` (``b >= 0``) by phase-one simplex.

    Bland's rule, exact arithmetic.  Returns the solution or None.
    """
    m = len(a)
    nv = len(a[0]) if m else 0
    width = nv + m
    tab = [list(a[i]) + [Fraction(int(i == k)) for k in range(m)] + [b[i]] for i in range(m)]
    basis = [nv + i for i in range(m)]
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(nv):
            cost[j] -= tab[i][j]
        cost[width] -= tab[i][width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                key = (ratio, basis[i])
                if leave is None or key < leave[0]:
                    leave = (key, i)
        if leave is None:  # unbounded; cannot happen for phase one
            break
        r = leave[1]
        p = tab[r][enter]
        tab[r] = [x / p for x in tab[r]]
        for i in range(m):
            if i != r and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tab[r])]
        basis[r] = enter

    if cost[width] != 0:
        return None
    w = [Fraction(0)] * nv
    for i, j in enumerate(basis):
        if j < nv:
            w[j] = tab[i][width]
    return w


def find_point(ineq: Sequence[Sequence], eq: Sequence[Sequence], ncols: int):
    """Find x with ``<r, x> >= 1`` for ``r`` in ``ineq`` and ``<r, x> = 0`` for ``r`` in ``eq``.

    Returns a primitive integer witness, or None when infeasible.  When
    ``ineq`` is empty any point of the solution space qualifies and the
    zero vector is returned.
    """
    if not ineq:
        return tuple([0] * ncols)
    basis = kernel_basis(eq, ncols) if eq else [
        tuple(int(i == j) for j in range(ncols)) for i in range(ncols)
    ]
    if not basis:
        return None
    k = len(basis)
    # coordinates y in the kernel: x = sum_j y_j basis_j
    reduced = [[sum(Fraction(r[c]) * v[c] for c in range(ncols)) for v in basis] for r in ineq]
    m = len(reduced)
    a = [row + [-x for x in row] + [Fraction(-int(i == t)) for t in range(m)] for i, row in enumerate(reduced)]
    w = _phase_one(a, [Fraction(1)] * m)
    if w is None:
        return None
    y = [w[j] - w[k + j] for j in range(k)]
    x = [sum(y[j] * basis[j][c] for j in range(k)) for c in range(ncols)]
    return primitive(x, fix_sign=False)
