"""Exact linear algebra: rational row reduction and integer Smith normal form."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def to_fractions(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form over Q.

    Returns (nonzero rows, pivot columns). Zero rows are dropped.
    """
    m = to_fractions(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def in_row_space(rows: Sequence[Sequence], vec: Sequence) -> bool:
    if not rows:
        return all(x == 0 for x in vec)
    return rank(list(rows) + [list(vec)]) == rank(rows)


def primitive_row(row: Sequence) -> tuple[int, ...]:
    """Scale a rational row to coprime integers with positive leading entry."""
    fr = [Fraction(x) for x in row]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def transpose(mat):
    return [list(col) for col in zip(*mat)] if mat else []


def smith_normal_form(mat: Sequence[Sequence[int]], track_left: bool = False):
    """Invariant factors of an integer matrix.

    Returns (d, U) where d lists the nonzero diagonal entries d_1 | d_2 | ...
    and U (unimodular, only when ``track_left``) satisfies U A V = D for some
    unimodular V.
    """
    a = [list(map(int, row)) for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)] if track_left else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        if u is not None:
            u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        if u is not None:
            u[i] = [-x for x in u[i]]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]

    diag = []
    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t] != 0:
                        done = False
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j] != 0:
                        done = False
            if not done:
                # move the smallest remaining entry of row/column t to the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t, nrows) if a[i][t] != 0]
                cand += [(abs(a[t][j]), t, j) for j in range(t, ncols) if a[t][j] != 0]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols) if a[i][j] % a[t][t] != 0),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            negate_row(t)
        diag.append(a[t][t])
        t += 1
    return diag, u


def integer_rank_and_torsion(mat: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    if not mat or not mat[0]:
        return 0, []
    d, _ = smith_normal_form(mat)
    return len(d), [x for x in d if x != 1]


def in_integer_column_span(mat: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    """Whether ``vec`` is an integer combination of the columns of ``mat``."""
    if not mat or not mat[0]:
        return all(x == 0 for x in vec)
    d, u = smith_normal_form(mat, track_left=True)
    y = [sum(a * b for a, b in zip(row, vec)) for row in u]
    for i, yi in enumerate(y):
        if i < len(d):
            if yi % d[i] != 0:
                return False
        elif yi != 0:
            return False
    return True
