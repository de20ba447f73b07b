"""Pure-Python elimination kernels.

Both kernels run fraction-free (Bareiss) elimination: every intermediate
entry is an exact minor of the input matrix, and each update divides
exactly by the previous pivot. gmpy2 integers are used when available
because the minors grow to thousands of bits on the large Gram matrices.
"""

try:
    from gmpy2 import divexact, mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int

    def divexact(a, b):
        return a // b

BACKEND = "python"


def bareiss_rank(mat):
    """Exact rank over the rationals of an integer matrix (list of rows).

    Full pivoting, choosing the smallest nonzero magnitude to limit
    coefficient growth. The input is not modified.
    """
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    m = [[mpz(x) for x in row] for row in mat]
    rank = 0
    prev = mpz(1)
    lim = min(nrows, ncols)
    while rank < lim:
        # full pivot scan over the active submatrix
        pr = pc = -1
        best = None
        for i in range(rank, nrows):
            row = m[i]
            for j in range(rank, ncols):
                v = row[j]
                if v:
                    a = abs(v)
                    if best is None or a < best:
                        best, pr, pc = a, i, j
        if best is None:
            break
        if pr != rank:
            m[pr], m[rank] = m[rank], m[pr]
        if pc != rank:
            for row in m:
                row[pc], row[rank] = row[rank], row[pc]
        p = m[rank][rank]
        prow = m[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            a = row[rank]
            if a:
                for j in range(rank + 1, ncols):
                    row[j] = divexact(p * row[j] - a * prow[j], prev)
            elif p != prev:
                for j in range(rank + 1, ncols):
                    row[j] = divexact(p * row[j], prev)
        prev = p
        rank += 1
    return rank


def psd_rank(mat):
    """Exact rank of a symmetric positive semidefinite integer matrix.

    Symmetric fraction-free elimination restricted to diagonal pivots.
    Correctness leans on two PSD facts: every Schur complement of a PSD
    matrix is PSD, and a PSD matrix with a zero diagonal entry has a zero
    row there. Rows whose diagonal vanishes are therefore dropped outright,
    and a pivot can always be found on the diagonal. Only the upper wedge
    is stored/updated; all reads go through canonical (min, max) order.

    Raises ValueError if a negative diagonal entry ever appears, which
    means the input was not PSD.
    """
    n = len(mat)
    m = [[mpz(x) for x in row] for row in mat]
    act = list(range(n))
    rank = 0
    prev = mpz(1)
    while act:
        keep = []
        for i in act:
            di = m[i][i]
            if di:
                if di < 0:
                    raise ValueError("matrix is not positive semidefinite")
                keep.append(i)
        act = keep
        if not act:
            break
        piv = act[0]
        best = m[piv][piv]
        for i in act[1:]:
            v = m[i][i]
            if v < best:
                best, piv = v, i
        act.remove(piv)
        rank += 1
        p = m[piv][piv]
        # pivot row/col values for the active set, read symmetrically
        pvals = {}
        for r in act:
            pvals[r] = m[piv][r] if r > piv else m[r][piv]
        na = len(act)
        for ri in range(na):
            r = act[ri]
            row = m[r]
            a = pvals[r]
            if a:
                for c in act[ri:]:
                    row[c] = divexact(p * row[c] - a * pvals[c], prev)
            elif p != prev:
                for c in act[ri:]:
                    row[c] = divexact(p * row[c], prev)
        prev = p
    return rank
