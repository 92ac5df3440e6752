"""Independent oracles for the test suite.

Everything here is deliberately written from scratch against the definitions,
without touching lcmkit internals: Smith normal form over the integers for
homology ranks, plain Gaussian elimination over Fractions for matrix ranks,
and a combinations-based face/boundary enumeration.
"""

from fractions import Fraction
from itertools import combinations


def gauss_rank_fractions(rows) -> int:
    """Rank by textbook Gaussian elimination over the rationals."""
    mat = [[Fraction(v) for v in row] for row in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(m):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == m:
            break
    return r


def snf_diagonal(rows) -> list[int]:
    """Nonzero diagonal of the Smith normal form of an integer matrix."""
    mat = [[int(v) for v in row] for row in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    diag = []
    r = c = 0
    while r < m and c < n:
        best = None
        for i in range(r, m):
            for j in range(c, n):
                if mat[i][j] != 0 and (best is None or abs(mat[i][j]) < abs(mat[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        mat[r], mat[bi] = mat[bi], mat[r]
        for row in mat:
            row[c], row[bj] = row[bj], row[c]
        while True:
            moved = False
            for i in range(r + 1, m):
                if mat[i][c] % mat[r][c] != 0:
                    q = mat[i][c] // mat[r][c]
                    for j in range(n):
                        mat[i][j] -= q * mat[r][j]
                    mat[r], mat[i] = mat[i], mat[r]
                    moved = True
                    break
            if moved:
                continue
            for i in range(r + 1, m):
                q = mat[i][c] // mat[r][c]
                for j in range(n):
                    mat[i][j] -= q * mat[r][j]
            for j in range(c + 1, n):
                if mat[r][j] % mat[r][c] != 0:
                    q = mat[r][j] // mat[r][c]
                    for i in range(m):
                        mat[i][j] -= q * mat[i][c]
                    for i in range(m):
                        mat[i][c], mat[i][j] = mat[i][j], mat[i][c]
                    moved = True
                    break
            if moved:
                continue
            for j in range(c + 1, n):
                q = mat[r][j] // mat[r][c]
                for i in range(m):
                    mat[i][j] -= q * mat[i][c]
            break
        diag.append(abs(mat[r][c]))
        r += 1
        c += 1
    return diag


def all_faces(facets):
    out = set()
    for f in facets:
        fs = sorted(f)
        for k in range(len(fs) + 1):
            out.update(combinations(fs, k))
    return out


def boundary_rows(facets, k):
    """Integer boundary matrix from k-cardinality faces to (k-1)-cardinality
    faces, rows indexed by the smaller faces."""
    faces = all_faces(facets)
    small = sorted(f for f in faces if len(f) == k - 1)
    big = sorted(f for f in faces if len(f) == k)
    idx = {f: i for i, f in enumerate(small)}
    rows = [[0] * len(big) for _ in small]
    for j, cell in enumerate(big):
        for t, v in enumerate(cell):
            rows[idx[tuple(x for x in cell if x != v)]][j] = (-1) ** t
    return rows


def homology_via_snf(facets, p: int) -> dict[int, int]:
    """Reduced homology dims over GF(p) (p = 0 for Q) from integer SNF ranks."""
    faces = all_faces(facets)
    if not faces:
        return {}
    top = max(len(f) for f in faces) - 1
    ranks = {}
    for k in range(0, top + 1):
        diag = snf_diagonal(boundary_rows(facets, k + 1))
        ranks[k + 1] = len(diag) if p == 0 else sum(1 for x in diag if x % p)
    ranks[top + 2] = 0
    out = {}
    for i in range(-1, top + 1):
        ci = sum(1 for f in faces if len(f) == i + 1)
        out[i] = ci - ranks.get(i + 1, 0) - ranks.get(i + 2, 0)
    return out
