"""Exact dense linear algebra over any of the package's fields.

Matrices are lists of row lists. Only what the fitting code and the
matrix-realization oracle need: products, row reduction, rank, kernels,
column spaces and subspace intersections.
"""

from __future__ import annotations

from typing import List, Sequence

from .exactfield import Field

Matrix = List[list]


def zeros(field: Field, n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return [[field.zero() for _ in range(m)] for _ in range(n)]


def identity(field: Field, n: int) -> Matrix:
    out = zeros(field, n)
    for i in range(n):
        out[i][i] = field.one()
    return out


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != k:
        raise ValueError("shape mismatch in matmul")
    zero = (b[0][0] * 0) if k and m else 0
    out = []
    for i in range(n):
        row = [zero] * m
        for t, x in enumerate(a[i]):
            # row-times-matrix accumulation; skipping zeros pays off on sparse factors
            if not x:
                continue
            bt = b[t]
            row = [r + x * y for r, y in zip(row, bt)]
        out.append(row)
    return out


def matvec(a: Matrix, v: Sequence) -> list:
    return [sum((a[i][j] * v[j] for j in range(1, len(v))), a[i][0] * v[0]) for i in range(len(a))]


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def shift(a: Matrix, c) -> Matrix:
    """a - c*I"""
    return [[x - c if i == j else x for j, x in enumerate(row)] for i, row in enumerate(a)]


def power(a: Matrix, k: int, field: Field) -> Matrix:
    out = identity(field, len(a))
    for _ in range(k):
        out = matmul(out, a)
    return out


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def rref(a: Matrix):
    """Reduced row echelon form and pivot columns."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1]) if a and a[0] else 0


def nullspace(a: Matrix, field: Field) -> List[list]:
    """Basis of {x : a x = 0}, as a list of vectors."""
    cols = len(a[0])
    m, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero()] * cols
        v[f] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(v)
    return basis


def column_space(a: Matrix) -> List[list]:
    """Basis of the column space, as a list of column vectors."""
    if not a or not a[0]:
        return []
    _, pivots = rref(a)
    return [[row[c] for row in a] for c in pivots]


def span_matrix(vectors: Sequence[Sequence], n: int, field: Field) -> Matrix:
    """n x k matrix whose columns are the given vectors."""
    if not vectors:
        return [[] for _ in range(n)]
    return [[v[i] for v in vectors] for i in range(n)]


def intersect(u: List[list], w: List[list], n: int, field: Field) -> List[list]:
    """Basis of span(u) ∩ span(w) for subspaces of F^n given by bases."""
    if not u or not w:
        return []
    # solve U x = W y, i.e. [U | -W] (x, y) = 0
    combined = [[*(v[i] for v in u), *(-v[i] for v in w)] for i in range(n)]
    vecs = []
    for sol in nullspace(combined, field):
        x = sol[: len(u)]
        vecs.append([sum((x[k] * u[k][i] for k in range(1, len(u))), x[0] * u[0][i]) for i in range(n)])
    return column_space(span_matrix(vecs, n, field)) if vecs else []


def solve(a: Matrix, b: Sequence, field: Field) -> list:
    """Unique solution of a x = b; raises ValueError if singular or inconsistent."""
    n = len(a)
    aug = [list(a[i]) + [field(b[i])] for i in range(n)]
    m, pivots = rref(aug)
    cols = len(a[0])
    if cols in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < cols:
        raise ValueError("singular linear system")
    x = [field.zero()] * cols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][cols]
    return x


def render(a: Matrix, field: Field) -> str:
    return "\n".join(" ".join(field.render(x) for x in row) for row in a)
