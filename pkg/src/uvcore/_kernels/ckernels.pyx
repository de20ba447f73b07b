# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels on raw GMP integers.

Same algorithms as pykernels (fraction-free elimination with exact
divisions), but the inner loops run directly on mpz_t limbs via gmpy2's
C API: in-place mpz_mul / mpz_submul / mpz_divexact with one scratch
integer, so the steady state allocates nothing and never boxes values
into Python objects. Results are identical to the pure lane.

Every matrix cell is a private mpz created at entry, which makes the
in-place mutation safe (gmpy2 does not intern mpz values).
"""

from gmpy2 cimport mpz, GMPy_MPZ_New, import_gmpy2, mpz_t

import_gmpy2()

from gmpy2 import mpz as make_mpz

cdef extern from "gmp.h":
    void mpz_mul(mpz_t rop, const mpz_t op1, const mpz_t op2)
    void mpz_submul(mpz_t rop, const mpz_t op1, const mpz_t op2)
    void mpz_divexact(mpz_t q, const mpz_t n, const mpz_t d)
    void mpz_set(mpz_t rop, const mpz_t op)
    void mpz_set_si(mpz_t rop, long op)
    int mpz_sgn(const mpz_t op)
    int mpz_cmpabs(const mpz_t op1, const mpz_t op2)
    int mpz_cmp(const mpz_t op1, const mpz_t op2)

BACKEND = "c"


cdef list _to_mpz_matrix(mat):
    cdef list out = []
    for row in mat:
        out.append([make_mpz(x) for x in row])
    return out


def bareiss_rank(mat):
    """Exact rational rank of an integer matrix; full smallest-entry pivoting."""
    cdef Py_ssize_t nrows = len(mat)
    cdef Py_ssize_t ncols = len(mat[0]) if nrows else 0
    cdef Py_ssize_t rank = 0, lim, i, j, pr, pc
    cdef list m = _to_mpz_matrix(mat)
    cdef list row, prow
    cdef mpz v, a, p, prev, best
    cdef mpz tmp = GMPy_MPZ_New(NULL)
    cdef bint have_best
    prev = GMPy_MPZ_New(NULL)
    mpz_set_si(prev.z, 1)
    lim = min(nrows, ncols)
    while rank < lim:
        pr = pc = -1
        have_best = False
        best = None
        for i in range(rank, nrows):
            row = <list>m[i]
            for j in range(rank, ncols):
                v = <mpz>row[j]
                if mpz_sgn(v.z) != 0:
                    if not have_best or mpz_cmpabs(v.z, best.z) < 0:
                        best = v
                        have_best = True
                        pr = i
                        pc = j
        if not have_best:
            break
        if pr != rank:
            m[pr], m[rank] = m[rank], m[pr]
        if pc != rank:
            for i in range(nrows):
                row = <list>m[i]
                row[pc], row[rank] = row[rank], row[pc]
        prow = <list>m[rank]
        p = <mpz>prow[rank]
        for i in range(rank + 1, nrows):
            row = <list>m[i]
            a = <mpz>row[rank]
            if mpz_sgn(a.z) != 0:
                for j in range(rank + 1, ncols):
                    v = <mpz>row[j]
                    mpz_mul(tmp.z, p.z, v.z)
                    mpz_submul(tmp.z, a.z, (<mpz>prow[j]).z)
                    mpz_divexact(v.z, tmp.z, prev.z)
            elif mpz_cmp(p.z, prev.z) != 0:
                for j in range(rank + 1, ncols):
                    v = <mpz>row[j]
                    mpz_mul(tmp.z, p.z, v.z)
                    mpz_divexact(v.z, tmp.z, prev.z)
        prev = p
        rank += 1
    return rank


def psd_rank(mat):
    """Exact rank of a symmetric PSD integer matrix (see pykernels.psd_rank)."""
    cdef Py_ssize_t n = len(mat)
    cdef Py_ssize_t rank = 0, na, ri, ci, r, c, i, piv
    cdef list m = _to_mpz_matrix(mat)
    cdef list act = list(range(n))
    cdef list keep, pvals, row
    cdef mpz v, a, p, prev, best, di
    cdef mpz tmp = GMPy_MPZ_New(NULL)
    cdef int sign
    prev = GMPy_MPZ_New(NULL)
    mpz_set_si(prev.z, 1)
    while act:
        keep = []
        for i in range(len(act)):
            r = <Py_ssize_t>act[i]
            di = <mpz>(<list>m[r])[r]
            sign = mpz_sgn(di.z)
            if sign != 0:
                if sign < 0:
                    raise ValueError("matrix is not positive semidefinite")
                keep.append(r)
        act = keep
        if not act:
            break
        piv = <Py_ssize_t>act[0]
        best = <mpz>(<list>m[piv])[piv]
        for i in range(1, len(act)):
            r = <Py_ssize_t>act[i]
            v = <mpz>(<list>m[r])[r]
            if mpz_cmp(v.z, best.z) < 0:
                best = v
                piv = r
        act.remove(piv)
        rank += 1
        p = <mpz>(<list>m[piv])[piv]
        na = len(act)
        pvals = [None] * na
        for i in range(na):
            r = <Py_ssize_t>act[i]
            pvals[i] = (<list>m[piv])[r] if r > piv else (<list>m[r])[piv]
        for ri in range(na):
            r = <Py_ssize_t>act[ri]
            row = <list>m[r]
            a = <mpz>pvals[ri]
            if mpz_sgn(a.z) != 0:
                for ci in range(ri, na):
                    c = <Py_ssize_t>act[ci]
                    v = <mpz>row[c]
                    mpz_mul(tmp.z, p.z, v.z)
                    mpz_submul(tmp.z, a.z, (<mpz>pvals[ci]).z)
                    mpz_divexact(v.z, tmp.z, prev.z)
            elif mpz_cmp(p.z, prev.z) != 0:
                for ci in range(ri, na):
                    c = <Py_ssize_t>act[ci]
                    v = <mpz>row[c]
                    mpz_mul(tmp.z, p.z, v.z)
                    mpz_divexact(v.z, tmp.z, prev.z)
        prev = p
    return rank
