"""Exact integer and rational linear algebra over lattices.

Everything here works with arbitrary-precision Python ints and
``fractions.Fraction`` -- there is no floating point anywhere in this
package.  Vectors are tuples of ints, matrices are sequences of rows.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


class NoSolution(Exception):
    """The linear system A x = b is inconsistent."""


class Underdetermined(Exception):
    """A has a nontrivial kernel; ``kernel`` holds a saturated integer basis."""

    def __init__(self, kernel):
        super().__init__("system is underdetermined")
        self.kernel = tuple(kernel)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def primitive(v):
    """Divide an integer vector by the gcd of its entries (0 stays 0)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def determinant(m) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hermite_normal_form(m):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U * m = H``, ``U`` unimodular, pivots positive
    and entries above each pivot reduced to ``[0, pivot)``.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    H = [list(r) for r in m]
    U = identity_matrix(rows)
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if H[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        H[r], H[piv] = H[piv], H[r]
        U[r], U[piv] = U[piv], U[r]
        for i in range(r + 1, rows):
            while H[i][c] != 0:
                q = H[r][c] // H[i][c]
                for j in range(cols):
                    H[r][j] -= q * H[i][j]
                for j in range(rows):
                    U[r][j] -= q * U[i][j]
                H[r], H[i] = H[i], H[r]
                U[r], U[i] = U[i], U[r]
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                for j in range(cols):
                    H[i][j] -= q * H[r][j]
                for j in range(rows):
                    U[i][j] -= q * U[r][j]
        r += 1
        if r == rows:
            break
    return H, U


def smith_normal_form(m):
    """Smith normal form: ``(S, U, V)`` with ``U * m * V = S`` diagonal,
    nonnegative, and each diagonal entry dividing the next."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    S = [list(r) for r in m]
    U = identity_matrix(rows)
    V = identity_matrix(cols)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def addrow(i, j, q):  # row i -= q * row j
        S[i] = [a - q * b for a, b in zip(S[i], S[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def addcol(i, j, q):  # col i -= q * col j
        for r in S:
            r[i] -= q * r[j]
        for r in V:
            r[i] -= q * r[j]

    n = min(rows, cols)
    t = 0
    while t < n:
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if S[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if S[i][t] != 0:
                    q = S[i][t] // S[t][t]
                    addrow(i, t, q)
                    if S[i][t] != 0:
                        swap_rows(t, i)
                    done = False
            for j in range(t + 1, cols):
                if S[t][j] != 0:
                    q = S[t][j] // S[t][t]
                    addcol(j, t, q)
                    if S[t][j] != 0:
                        swap_cols(t, j)
                    done = False
            if done:
                break
        t += 1
    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            a, b = S[i][i], S[i + 1][i + 1]
            if a != 0 and b % a != 0:
                # fold the offender into column i, then euclid on rows i, i+1
                addcol(i, i + 1, -1)  # col i += col i+1
                while S[i + 1][i] != 0:
                    q = S[i][i] // S[i + 1][i]
                    addrow(i, i + 1, q)
                    swap_rows(i, i + 1)
                # the fill-in S[i][i+1] is a multiple of gcd(a, b) = S[i][i]
                addcol(i + 1, i, S[i][i + 1] // S[i][i])
                changed = True
    for i in range(n):
        if S[i][i] < 0:
            S[i] = [-x for x in S[i]]
            U[i] = [-x for x in U[i]]
    return S, U, V


def kernel_basis(m):
    """Saturated basis of the integer column kernel ``{x : m x = 0}``.

    Returned as a list of integer tuples; the empty matrix (no rows) has the
    standard basis as its kernel.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows == 0:
        raise ValueError("kernel_basis requires a nonempty matrix")
    mt = [[m[i][j] for i in range(rows)] for j in range(cols)]
    H, U = hermite_normal_form(mt)
    return [tuple(U[i]) for i in range(cols) if not any(H[i])]


def solve_rational(A, b):
    """Exact solution of ``A x = b`` as a tuple of Fractions.

    Raises :class:`NoSolution` if inconsistent and :class:`Underdetermined`
    (carrying a saturated integer kernel basis) if A is rank-deficient.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if len(b) != rows:
        raise ValueError("dimension mismatch between A and b")
    M = [[Fraction(A[i][j]) for j in range(cols)] + [Fraction(b[i])] for i in range(rows)]
    r = 0
    pivcols = []
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        M[r] = [x / M[r][c] for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivcols.append(c)
        r += 1
    for i in range(r, rows):
        if M[i][cols] != 0:
            raise NoSolution
    if r < cols:
        raise Underdetermined(kernel_basis(A))
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivcols):
        x[c] = M[i][cols]
    return tuple(x)


def invert_unimodular(U):
    """Exact integer inverse of a unimodular matrix."""
    n = len(U)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        x = solve_rational(U, e)
        if any(v.denominator != 1 for v in x):
            raise ValueError("matrix is not unimodular")
        cols.append([int(v) for v in x])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _fm_normalize(coeffs, rhs):
    """Scale an inequality coeffs . w >= rhs by a positive rational so the
    first nonzero entry has absolute value 1 (for deduplication)."""
    for x in coeffs + (rhs,):
        if x != 0:
            s = abs(x)
            return tuple(c / s for c in coeffs), rhs / s
    return coeffs, rhs


def lp_strict_separation(target, others, recession):
    """Rational functional l with l(target) < l(v) for all v in ``others`` and
    l(r) > 0 for every nonzero r in ``recession``, or None if none exists.

    This is the vertex test for a point of a Newton polyhedron
    conv(others + target) + cone(recession).  Decided exactly by
    Fourier-Motzkin elimination: a strict homogeneous system N w > 0 is
    feasible iff N w >= 1 is, and the witness is recovered by
    back-substitution.  The returned functional is re-checked against every
    strict inequality before being returned.
    """
    d = len(target)
    rows = []
    for v in others:
        if len(v) != d:
            raise ValueError("dimension mismatch in others")
        rows.append(vsub(v, target))
    for r in recession:
        if len(r) != d:
            raise ValueError("dimension mismatch in recession")
        if any(r):
            rows.append(tuple(r))
    if not rows:
        return tuple(Fraction(0) for _ in range(d))
    system = [(tuple(Fraction(x) for x in row), Fraction(1)) for row in rows]
    stages = []
    cur = system
    for j in reversed(range(d)):  # eliminate w_{d-1}, ..., w_0
        stages.append((j, cur))
        pos = [(c, b) for c, b in cur if c[j] > 0]
        neg = [(c, b) for c, b in cur if c[j] < 0]
        new = {_fm_normalize(c, b) for c, b in cur if c[j] == 0}
        for cp, bp in pos:
            for cn, bn in neg:
                coeffs = tuple(cp[t] * (-cn[j]) + cn[t] * cp[j] for t in range(d))
                rhs = bp * (-cn[j]) + bn * cp[j]
                new.add(_fm_normalize(coeffs, rhs))
        cur = sorted(new)
    if any(b > 0 for _, b in cur):  # 0 >= b with b > 0: infeasible
        return None
    w = [Fraction(0)] * d
    for j, stage in reversed(stages):  # back-substitute w_0, w_1, ...
        lo = None
        hi = None
        for c, b in stage:
            if c[j] == 0:
                continue
            rest = b - sum(c[t] * w[t] for t in range(d) if t != j and c[t] != 0)
            bound = rest / c[j]
            if c[j] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None:
            w[j] = lo
        elif hi is not None:
            w[j] = hi
    # self-certify
    for v in others:
        if not dot(w, target) < dot(w, v):
            raise AssertionError("separation witness failed verification")
    for r in recession:
        if any(r) and not dot(w, r) > 0:
            raise AssertionError("separation witness failed verification")
    return tuple(w)
