"""Shared test helpers: naive reference implementations and heavy fixtures.

The naive_* helpers are deliberately written in plain Python over lists,
independent of the package's numpy-based code paths, so that agreement
between the two is meaningful evidence of correctness.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest


def naive_rank(rows, p):
    """Rank by textbook Gaussian elimination on python ints."""
    m = [[int(x) % p for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(m)):
            if m[r][col] % p:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [(a - c * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def naive_solve(rows, rhs, p):
    """One solution of rows @ x = rhs by elimination, or None."""
    m = [[int(x) % p for x in row] + [int(b) % p] for row, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(m)):
            if m[r][col] % p:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [(a - c * b) % p for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(m)):
        if m[r][-1] % p:
            return None
    x = [0] * ncols
    for i, col in enumerate(pivots):
        x[col] = m[i][-1]
    return x


def enumerate_kernel(rows, p, ncols):
    """All kernel vectors of a small system, by brute enumeration."""
    out = []
    for v in itertools.product(range(p), repeat=ncols):
        if all(sum(r[j] * v[j] for j in range(ncols)) % p == 0 for r in rows):
            out.append(v)
    return out


def span_from_vectors(vectors, p):
    """The full set of vectors in the span, by brute enumeration."""
    vecs = [tuple(int(x) % p for x in v) for v in vectors]
    if not vecs:
        return {()}
    n = len(vecs[0])
    seen = set()
    for coeffs in itertools.product(range(p), repeat=len(vecs)):
        w = tuple(sum(c * v[j] for c, v in zip(coeffs, vecs)) % p for j in range(n))
        seen.add(w)
    return seen


def random_matrix(rng, rows, cols, p):
    return rng.integers(0, p, size=(rows, cols), dtype=np.int64)


def s3_c2_extension(p):
    """GF(p)[S3] over the subgroup algebra of a transposition.

    The multiplication table is computed from permutation composition
    here, independently of any table shipped with the package.
    """
    from coringlab import Extension, Field, Matrix, group_algebra

    perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
    idx = {q: i for i, q in enumerate(perms)}
    table = [[idx[tuple(a[b[i]] for i in range(3))] for b in perms] for a in perms]
    big = group_algebra(Field(p), table, [f"g{i}" for i in range(6)])
    small = group_algebra(Field(p), [[0, 1], [1, 0]], ["e", "t"])
    inc = np.zeros((6, 2), dtype=np.int64)
    inc[0, 0] = 1
    inc[1, 1] = 1
    return Extension(big, small, Matrix(p, inc))


def naive_absolute_hochschild_dims(tensor, unit, p, top):
    """dim H^0..H^{top-1} of the classical complex C^n = Hom(A^(x)n, A).

    Valid for extensions by the scalars (B = k*1), where the relative
    complex coincides with the absolute one.  Everything is pure-python
    index shuffling over the structure tensor; nothing is shared with
    the package's quotient/vectorized machinery.
    """
    d = len(unit)
    t = [[[int(tensor[i][j][k]) % p for k in range(d)] for j in range(d)] for i in range(d)]

    def tuples(n):
        return list(itertools.product(range(d), repeat=n))

    def delta_matrix(n):
        """delta^n as rows over C^{n+1} basis, cols over C^n basis."""
        src = [(s, k) for s in tuples(n) for k in range(d)]
        col_index = {bk: c for c, bk in enumerate(src)}
        rows = []
        for big in tuples(n + 1):
            for out in range(d):
                row = [0] * len(src)
                if n == 0:
                    # (delta r)(a1) = a1*r - r*a1, with r ranging over e_k
                    for k in range(d):
                        coef = (t[big[0]][k][out] - t[k][big[0]][out]) % p
                        row[col_index[((), k)]] = coef
                else:
                    for k in range(d):
                        # a1 * f(a2..)
                        tail = big[1:]
                        c = col_index[(tail, k)]
                        row[c] = (row[c] + t[big[0]][k][out]) % p
                        # (-1)^{n+1} f(a1..an) * a_{n+1}
                        head = big[:-1]
                        c = col_index[(head, k)]
                        sgn = 1 if (n + 1) % 2 == 0 else p - 1
                        row[c] = (row[c] + sgn * t[k][big[-1]][out]) % p
                    for i in range(1, n + 1):
                        sgn = 1 if i % 2 == 0 else p - 1
                        a, b = big[i - 1], big[i]
                        for m in range(d):
                            coef = t[a][b][m]
                            if not coef:
                                continue
                            merged = big[: i - 1] + (m,) + big[i + 1 :]
                            c = col_index[(merged, out)]
                            row[c] = (row[c] + sgn * coef) % p
                rows.append(row)
        return rows

    deltas = [delta_matrix(n) for n in range(top)]
    ranks = [naive_rank(m, p) for m in deltas]
    dims = []
    for n in range(top):
        c_dim = d * (d**n)
        kernel = c_dim - ranks[n]
        prev = ranks[n - 1] if n >= 1 else 0
        dims.append(kernel - prev)
    return dims


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20250817)


@pytest.fixture(scope="session")
def m2_gf5_extension():
    from coringlab import Field, matrix_algebra, trivial_extension

    return trivial_extension(matrix_algebra(Field(5), 2))


@pytest.fixture(scope="session")
def m2_gf5_cert(m2_gf5_extension):
    from coringlab import build_f2

    return build_f2(m2_gf5_extension)


@pytest.fixture(scope="session")
def m2_gf5_endo(m2_gf5_extension):
    from coringlab import endo_coring

    return endo_coring(m2_gf5_extension)
