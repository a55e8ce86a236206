"""Linear algebra and polynomial root extraction over F_p (internal).

Matrices are numpy int64 arrays with entries reduced mod p; polynomials are
Python int lists in ascending degree.  Only what the character-table splitting
needs: rref/kernel, a division-free Hessenberg characteristic polynomial, and
root extraction for polynomials that split into linear factors.
"""

from __future__ import annotations

import random

import numpy as np


def inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)


def rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (matrix, pivot columns)."""
    A = A.copy() % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if A[i, c] % p), None)
        if pr is None:
            continue
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = (A[r] * inv_mod(A[r, c], p)) % p
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def kernel_basis(A: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning the null space of A over F_p."""
    n = A.shape[1]
    R, pivots = rref(A, p)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-int(R[r, fc])) % p
    return basis


def coords_in_rref_basis(vec: np.ndarray, basis: np.ndarray,
                         pivots: list[int], p: int) -> np.ndarray:
    """Coordinates of vec in an rref basis; raises if vec is outside the span."""
    coords = vec[pivots] % p
    residual = (vec - coords @ basis) % p
    if residual.any():
        raise ArithmeticError("vector not in subspace")
    return coords


def charpoly(A: np.ndarray, p: int) -> list[int]:
    """Monic characteristic polynomial of A mod p (ascending coefficients)."""
    H = A.copy() % p
    n = H.shape[0]
    # reduce to upper Hessenberg form by similarity
    for c in range(n - 2):
        pr = next((i for i in range(c + 1, n) if H[i, c] % p), None)
        if pr is None:
            continue
        if pr != c + 1:
            H[[c + 1, pr]] = H[[pr, c + 1]]
            H[:, [c + 1, pr]] = H[:, [pr, c + 1]]
        inv = inv_mod(H[c + 1, c], p)
        for i in range(c + 2, n):
            if H[i, c]:
                f = (int(H[i, c]) * inv) % p
                H[i] = (H[i] - f * H[c + 1]) % p
                H[:, c + 1] = (H[:, c + 1] + f * H[:, i]) % p
    # p_k(x) = det(x I - H[:k,:k]) by the Hessenberg recurrence
    polys: list[list[int]] = [[1]]
    for k in range(1, n + 1):
        # (x - h_kk) * p_(k-1)
        prev = polys[k - 1]
        cur = [0] + prev
        hkk = int(H[k - 1, k - 1]) % p
        for i in range(len(prev)):
            cur[i] = (cur[i] - hkk * prev[i]) % p
        # minus sum over i < k of h_(i,k) * (prod of subdiagonals) * p_(i-1)
        run = 1
        for i in range(k - 1, 0, -1):
            run = (run * int(H[i, i - 1])) % p
            if run == 0:
                break
            hik = int(H[i - 1, k - 1]) % p
            if hik:
                f = (run * hik) % p
                pi = polys[i - 1]
                for j in range(len(pi)):
                    cur[j] = (cur[j] - f * pi[j]) % p
        polys.append(cur)
    return [c % p for c in polys[n]]


def _poly_trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f = f[:-1]
    return f


def poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] = (prod[i + j] + x * y) % p
    return poly_rem(prod, mod, p)


def poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    a = [x % p for x in a]
    d = len(mod) - 1
    lead_inv = inv_mod(mod[-1], p)
    for i in range(len(a) - 1, d - 1, -1):
        c = (a[i] * lead_inv) % p
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * mod[j]) % p
    return _poly_trim(a[:d] or [0])


def poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim([x % p for x in a]), _poly_trim([x % p for x in b])
    while b != [0]:
        a, b = b, poly_rem(a, b, p)
        b = _poly_trim(b)
    inv = inv_mod(a[-1], p)
    return [(x * inv) % p for x in a]


def poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = poly_rem(base, mod, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, mod, p)
        base = poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def distinct_roots(f: list[int], p: int, seed: int = 0) -> list[int]:
    """All roots in F_p of a polynomial that splits into linear factors.

    Uses gcd with x^p - x to isolate the squarefree part, then the usual
    quadratic-residue splitting with a deterministic seeded shift sequence.
    """
    f = _poly_trim([c % p for c in f])
    if len(f) == 1:
        return []
    xp = poly_powmod([0, 1], p, f, p)
    xp_minus_x = list(xp) + [0] * max(0, 2 - len(xp))
    xp_minus_x[1] = (xp_minus_x[1] - 1) % p
    xp_minus_x = _poly_trim(xp_minus_x)
    if xp_minus_x == [0]:
        g = f
    else:
        g = poly_gcd(f, xp_minus_x, p)
    rng = random.Random(seed * 1000003 + p)
    roots: list[int] = []

    def split(h: list[int]):
        h = _poly_trim(h)
        if len(h) == 2:
            roots.append((-h[0] * inv_mod(h[1], p)) % p)
            return
        if len(h) == 1:
            return
        if h[0] == 0:
            roots.append(0)
            split(_poly_trim(h[1:]))
            return
        while True:
            a = rng.randrange(p)
            w = poly_powmod([a, 1], (p - 1) // 2, h, p)
            w = _poly_trim([(c - (1 if i == 0 else 0)) % p for i, c in enumerate(w)])
            d = poly_gcd(h, w, p)
            if 0 < len(d) - 1 < len(h) - 1:
                split(d)
                q, _ = poly_divmod(h, d, p)
                split(q)
                return

    split(g)
    return sorted(roots)


def poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = [x % p for x in a]
    b = _poly_trim([x % p for x in b])
    d = len(b) - 1
    if len(a) - 1 < d:
        return [0], a
    q = [0] * (len(a) - d)
    lead_inv = inv_mod(b[-1], p)
    for i in range(len(a) - 1, d - 1, -1):
        c = (a[i] * lead_inv) % p
        q[i - d] = c
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * b[j]) % p
    return q, _poly_trim(a[:d] or [0])
