"""Shared spectral machinery: adjacency powers and exact minimal polynomials.

The minimal polynomial of an adjacency matrix A (symmetric, hence
diagonalizable) is squarefree with degree equal to the number of distinct
eigenvalues m. Both facts are exploited:

  * m is found as the first j for which the Hankel matrix of power traces
    [tr(A^(a+b))]_{a,b<=j} becomes singular (the Hankel matrix is the Gram
    of the moment sequence of a positive measure on m points, so its
    leading principal minors are positive up to size m and zero after);
  * the minimal polynomial's coefficients then solve the m x m Hankel
    system given by Newton's identities, exactly over the rationals, and
    must come out integral.

Powers are computed with numpy int64 while the row-sum bound k^j proves
no overflow is possible, then switch to exact object arrays.
"""

from fractions import Fraction

import numpy as np

from .exact import poly_trim

_INT64_SAFE = 1 << 62


def adjacency_array(g):
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for i in range(g.n):
        m = g.rows[i]
        while m:
            b = m & -m
            a[i, b.bit_length() - 1] = 1
            m ^= b
    return a


class PowerSequence:
    """Lazily extended powers A^0, A^1, ... with exact arithmetic.

    Entries of A^j are walk counts bounded by maxdeg^j; int64 is used
    while that bound stays below 2^62, object dtype afterwards.
    """

    def __init__(self, g):
        self.n = g.n
        self.a64 = adjacency_array(g)
        self.maxdeg = max((g.degree(i) for i in range(g.n)), default=0)
        self.powers = [np.eye(g.n, dtype=np.int64), self.a64.copy()]
        self.bound = self.maxdeg  # max-entry bound for the last power

    def power(self, j):
        while len(self.powers) <= j:
            last = self.powers[-1]
            newbound = self.bound * max(self.maxdeg, 1)
            if last.dtype == np.int64 and newbound < _INT64_SAFE:
                nxt = last @ self.a64
            else:
                nxt = np.dot(
                    last.astype(object), self.a64.astype(object)
                )
            self.powers.append(nxt)
            self.bound = newbound
        return self.powers[j]

    def trace(self, s):
        """tr(A^s) from powers up to ceil(s/2), via Frobenius pairing."""
        h = (s + 1) // 2
        pa = self.power(h)
        pb = self.power(s - h)
        # tr(A^s) = <A^h, A^(s-h)>_F since A is symmetric
        return int(np.sum(pa.astype(object) * pb.astype(object)))


def _det_int(mat):
    """Exact determinant of a small integer matrix (fraction-free)."""
    m = [list(map(int, row)) for row in mat]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = None
            for i in range(k + 1, n):
                if m[i][k]:
                    piv = i
                    break
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _solve_fraction(mat, rhs):
    """Solve a small nonsingular rational system exactly."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


def minimal_polynomial(g, powers=None):
    """Minimal polynomial of the adjacency matrix, ascending integer coeffs."""
    if g.n == 0:
        raise ValueError("empty graph has no spectrum")
    ps = powers if powers is not None else PowerSequence(g)
    traces = [g.n]

    def trace(s):
        while len(traces) <= s:
            traces.append(ps.trace(len(traces)))
        return traces[s]

    m = None
    for j in range(1, g.n + 1):
        h = [[trace(a + b) for b in range(j + 1)] for a in range(j + 1)]
        if _det_int(h) == 0:
            m = j
            break
    assert m is not None, "Hankel matrix stayed nonsingular past n"
    hank = [[trace(a + b) for b in range(m)] for a in range(m)]
    rhs = [-trace(m + a) for a in range(m)]
    coeffs = _solve_fraction(hank, rhs)
    out = []
    for c in coeffs:
        assert c.denominator == 1, "minimal polynomial must be integral"
        out.append(int(c))
    out.append(1)
    return poly_trim(out)


def eigenvalue_multiplicities(g, eigenvalues, powers=None):
    """Multiplicities of the given complete list of distinct eigenvalues.

    Solves the Vandermonde system sum_i m_i lam_i^s = tr(A^s) for
    s = 0..m-1; valid only when `eigenvalues` really is the full set of
    distinct eigenvalues (the caller established that via the minimal
    polynomial). Returns a list aligned with `eigenvalues`.
    """
    ps = powers if powers is not None else PowerSequence(g)
    m = len(eigenvalues)
    mat = [[lam**s for lam in eigenvalues] for s in range(m)]
    rhs = [g.n] + [ps.trace(s) for s in range(1, m)]
    sol = _solve_fraction(mat, rhs)
    mults = []
    for x in sol:
        assert x.denominator == 1 and x > 0, "multiplicities must be positive integers"
        mults.append(int(x))
    assert sum(mults) == g.n
    return mults
