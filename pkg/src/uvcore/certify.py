"""Canonical vector colorings, the exact rank test, and core certificates.

The canonical coloring of a 1-walk-regular graph is handled purely through
its Gram matrix: an integer matrix B that is a known multiple of the
projector onto the least eigenspace, plus an exact rational scale. The
vectors themselves are never materialized (their entries are irrational);
every statement used downstream is expressible through B.

The decision pipeline for one graph:

    spectral_data   ->  tau, d, phi_tau, c            (exact integers)
    canonical_gram  ->  B = phi_tau(A), scale n/(d c)
    uvc_test        ->  rank of the span of the edge matrices vs d(d+1)/2
    core_certificate -> one-sided core verdict with reason codes
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from ._kernels import psd_rank
from ._spectrum import (
    PowerSequence,
    adjacency_array,
    eigenvalue_multiplicities,
    minimal_polynomial,
)
from .errors import (
    EdgelessGraph,
    NonIntegerLeastEigenvalue,
    NotConnected,
    NotOneWalkRegular,
    NotRegular,
)
from .exact import (
    charpoly,
    divide_out_root,
    eval_poly_at_int,
    eval_poly_at_matrix,
    integer_roots,
    poly_mul,
    sturm_root_count,
)
from .graphs import (
    Graph,
    distance_two_graph,
    is_bipartite,
    is_complete_multipartite,
    is_connected,
    is_regular,
    is_spanning_subgraph,
    srg_params,
)
from .walkreg import walk_regularity

_INT64_SAFE = 1 << 62

TIGHT = "tight"
LOOSE = "loose"
CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SpectralData:
    """Exact spectral facts about a connected regular graph.

    phi is the characteristic polynomial (ascending coefficients), tau the
    least eigenvalue (an integer by construction or the call fails), d its
    multiplicity, phi_tau = phi / (x - tau)^d, and c = phi_tau(tau) != 0.
    integral_spectrum lists (eigenvalue, multiplicity) pairs in decreasing
    eigenvalue order when the whole spectrum is integral, else None.
    """

    phi: tuple
    tau: int
    d: int
    phi_tau: tuple
    c: int
    degree_k: int
    n: int
    integral_spectrum: tuple


@dataclass(frozen=True)
class CanonicalGram:
    """Integer Gram data of the canonical vector coloring.

    The actual Gram matrix is scale * b entrywise, with
    scale = n / (d * c) as an exact rational.
    """

    b: tuple
    scale: Fraction
    spectral: SpectralData

    def entry(self, i, j):
        return self.scale * self.b[i][j]


@dataclass(frozen=True)
class UvcResult:
    rank: int
    target: int
    verdict: str


@dataclass(frozen=True)
class CertReport:
    graph_id: object
    n: int
    degree: object
    srg: object
    tau: object
    d: object
    edges: int
    rank: object
    target: object
    verdict: object
    core: str
    reasons: tuple
    ms: int


@dataclass(frozen=True)
class SandwichCertificate:
    certified: bool
    reasons: tuple


def spectral_data(g):
    """Least eigenvalue, its multiplicity, and the split-off polynomial.

    The least eigenvalue must be an integer; this is detected, not
    assumed: the minimal polynomial's integer roots are extracted and a
    Sturm count below the smallest one proves nothing real lies below it,
    otherwise NonIntegerLeastEigenvalue is raised.
    """
    if g.edge_count() == 0:
        raise EdgelessGraph("spectral data needs at least one edge")
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    k = is_regular(g)
    if k is None:
        raise NotRegular("graph is not regular")
    ps = PowerSequence(g)
    psi = minimal_polynomial(g, powers=ps)
    m = len(psi) - 1
    roots = integer_roots(psi)
    if not roots:
        raise NonIntegerLeastEigenvalue("no integer eigenvalues at all")
    tau = min(roots)
    quot, rem = divide_out_root(psi, tau)
    assert rem == 0
    if len(quot) > 1 and sturm_root_count(quot, -k - 1, Fraction(tau)) > 0:
        raise NonIntegerLeastEigenvalue(
            "a non-integer eigenvalue lies below %d" % tau
        )
    if len(roots) == m:
        # fully integral spectrum: multiplicities from power traces
        eigs = sorted(roots, reverse=True)
        mults = eigenvalue_multiplicities(g, eigs, powers=ps)
        spectrum = tuple(zip(eigs, mults))
        d = dict(spectrum)[tau]
        phi = [1]
        for lam, mult in spectrum:
            for _ in range(mult):
                phi = poly_mul(phi, [-lam, 1])
    else:
        # mixed spectrum with integral least eigenvalue: fall back to the
        # division-free characteristic polynomial
        spectrum = None
        phi = charpoly(g.adjacency())
        d = 0
        p = phi
        while True:
            q, r = divide_out_root(p, tau)
            if r != 0:
                break
            p = q
            d += 1
    phi_tau = list(phi)
    for _ in range(d):
        phi_tau, r = divide_out_root(phi_tau, tau)
        assert r == 0
    c = eval_poly_at_int(phi_tau, tau)
    assert c != 0 and tau < 0 and -tau <= k
    assert (c > 0) == ((g.n - d) % 2 == 0)
    return SpectralData(
        phi=tuple(phi),
        tau=tau,
        d=d,
        phi_tau=tuple(phi_tau),
        c=c,
        degree_k=k,
        n=g.n,
        integral_spectrum=spectrum,
    )


def _projector_multiple(g, sd):
    """phi_tau(A) computed exactly, fast when the spectrum is integral.

    With a fully integral spectrum, prod over distinct non-tau eigenvalues
    of (A - lam I) already annihilates every other eigenspace, so it
    equals gamma * E_tau with gamma = prod (tau - lam). Scaling by the
    integer c/gamma then yields phi_tau(A) without a degree-(n-d) Horner.
    """
    if sd.integral_spectrum is not None:
        a64 = adjacency_array(g)
        n = g.n
        others = [lam for lam, _ in sd.integral_spectrum if lam != sd.tau]
        prod = np.eye(n, dtype=np.int64)
        bound = 1
        for lam in others:
            bound *= sd.degree_k + abs(lam)
            if prod.dtype == np.int64 and bound < _INT64_SAFE:
                prod = prod @ a64 - lam * prod
            else:
                prod = np.dot(prod.astype(object), a64.astype(object)) - lam * prod.astype(object)
        gamma = 1
        for lam in others:
            gamma *= sd.tau - lam
        scale = sd.c // gamma
        assert scale * gamma == sd.c
        # eigenvector identity check: A * prod = tau * prod
        if prod.dtype == np.int64 and bound * sd.degree_k < _INT64_SAFE:
            assert np.array_equal(a64 @ prod, sd.tau * prod)
        b = [[int(x) * scale for x in row] for row in prod]
        return b
    return eval_poly_at_matrix(list(sd.phi_tau), g.adjacency())


def canonical_gram(g, sd=None):
    """Gram data of the canonical vector coloring of a 1-walk-regular graph."""
    if sd is None:
        sd = spectral_data(g)
    if not walk_regularity(g).one_walk:
        raise NotOneWalkRegular("graph is not 1-walk-regular")
    b = _projector_multiple(g, sd)
    return CanonicalGram(
        b=tuple(tuple(row) for row in b),
        scale=Fraction(g.n, sd.d * sd.c),
        spectral=sd,
    )


def vector_chromatic(g):
    """Exact vector chromatic number 1 - k/tau of a 1-walk-regular graph."""
    sd = spectral_data(g)
    if not walk_regularity(g).one_walk:
        raise NotOneWalkRegular("graph is not 1-walk-regular")
    return 1 - Fraction(sd.degree_k, sd.tau)


def edge_gram_matrix(cg, g):
    """Gram matrix of the edge matrices, indexed by lexicographic edges.

    Entry for edges e={i,j}, f={k,l} is 2(B_jl B_ki + B_jk B_li); its rank
    equals the dimension spanned by the edge matrices because scaling the
    projector scales this whole matrix by a square.
    """
    b = cg.b
    edges = list(g.edges())
    m = len(edges)
    out = [[0] * m for _ in range(m)]
    for e in range(m):
        i, j = edges[e]
        bi = b[i]
        bj = b[j]
        for f in range(e, m):
            k, l = edges[f]
            v = 2 * (bj[l] * bi[k] + bj[k] * bi[l])
            out[e][f] = v
            out[f][e] = v
    return out


def _content_reduced(b):
    g = 0
    for row in b:
        for x in row:
            g = gcd(g, x)
        if g == 1:
            break
    if g in (0, 1):
        return [list(row) for row in b]
    return [[x // g for x in row] for row in b]


def _independent_columns(bp, d):
    """Indices of d exactly independent columns of bp (greedy elimination)."""
    n = len(bp)
    basis = []  # (pivot position, reduced integer vector)
    cols = []
    for c in range(n):
        v = [bp[i][c] for i in range(n)]
        for pos, w in basis:
            if v[pos]:
                f1, f2 = w[pos], v[pos]
                v = [f1 * x - f2 * y for x, y in zip(v, w)]
                cg = 0
                for x in v:
                    cg = gcd(cg, x)
                    if cg == 1:
                        break
                if cg > 1:
                    v = [x // cg for x in v]
        pos = next((i for i, x in enumerate(v) if x), None)
        if pos is not None:
            basis.append((pos, v))
            cols.append(c)
            if len(cols) == d:
                return cols
    raise AssertionError("projector multiple has rank below the multiplicity")


def _rank_via_vertex_basis(bp, edges, d):
    """dim span of the edge matrices through an integer eigenspace basis.

    Any basis change p -> T p maps the symmetric edge matrices through the
    linear isomorphism S -> T S T^T of symmetric matrices, so the spanned
    dimension computed from integer basis rows equals the one from the
    canonical (irrational) vectors. The rank of the D x D Gram K = Z^T Z
    of the coefficient matrix Z equals rank(Z).
    """
    n = len(bp)
    cols = _independent_columns(bp, d)
    v = np.array([[bp[i][c] for c in cols] for i in range(n)], dtype=object)
    dd = d * (d + 1) // 2
    iu = np.triu_indices(d)
    m = len(edges)
    maxv = max(1, int(abs(v).max()))
    int64_ok = m * (2 * maxv * maxv) ** 2 < _INT64_SAFE
    dtype = np.int64 if int64_ok else object
    z = np.zeros((m, dd), dtype=dtype)
    vv = v.astype(dtype)
    for e, (i, j) in enumerate(edges):
        s = np.outer(vv[i], vv[j])
        z[e] = (s + s.T)[iu]
    k = np.dot(z.T, z)
    return psd_rank([[int(x) for x in row] for row in k])


def _rank_via_edge_gram(bp, edges):
    m = len(edges)
    out = [[0] * m for _ in range(m)]
    for e in range(m):
        i, j = edges[e]
        bi = bp[i]
        bj = bp[j]
        for f in range(e, m):
            k, l = edges[f]
            val = 2 * (bj[l] * bi[k] + bj[k] * bi[l])
            out[e][f] = val
            out[f][e] = val
    return psd_rank(out)


def uvc_test(g, cg=None):
    """Rank of the edge-matrix span against the target d(d+1)/2.

    A tight verdict certifies that the canonical coloring is the unique
    optimal one. The rank is computed on a content-reduced projector
    multiple (pure rescaling, rank-invariant) and through whichever Gram
    formulation is smaller: edge-indexed or coefficient-indexed.
    """
    if cg is None:
        cg = canonical_gram(g)
    d = cg.spectral.d
    target = d * (d + 1) // 2
    edges = list(g.edges())
    bp = _content_reduced(cg.b)
    if target <= len(edges):
        rank = _rank_via_vertex_basis(bp, edges, d)
    else:
        rank = _rank_via_edge_gram(bp, edges)
    assert rank <= target
    return UvcResult(rank=rank, target=target, verdict=TIGHT if rank == target else LOOSE)


def is_locally_injective_gram(cg, g):
    """(injective, locally_injective) of the canonical coloring.

    Two unit vectors coincide iff their inner product equals the common
    squared norm, i.e. B_ij = B_ii.
    """
    b = cg.b
    diag = b[0][0]
    injective = True
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if b[i][j] == diag:
                injective = False
                break
        if not injective:
            break
    locally = True
    d2 = distance_two_graph(g)
    for i, j in d2.edges():
        if b[i][j] == diag:
            locally = False
            break
    return injective, locally


def augmented_graph(g, cg=None):
    """Add every pair whose coloring inner product meets the edge threshold.

    The threshold is tau/k, the common value on edges of a strict optimal
    coloring; comparisons are exact rationals, never floats.
    """
    if cg is None:
        cg = canonical_gram(g)
    sd = cg.spectral
    thr = Fraction(sd.tau, sd.degree_k)
    rows = [0] * g.n
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if cg.entry(i, j) <= thr:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    out = Graph(g.n, tuple(rows))
    assert is_spanning_subgraph(g, out)
    return out


def core_certificate(g, graph_id=None):
    """One-sided core certificate for a connected graph.

    CertifiedCore fires on either route: a tight rank test on a
    2-walk-regular, non-bipartite, non-complete-multipartite graph, or a
    tight rank test whose canonical Gram is locally injective. Everything
    else is Inconclusive with reason codes; no graph is ever declared a
    non-core. Disconnected or edgeless inputs are rejected outright.
    """
    t0 = time.perf_counter()
    if g.edge_count() == 0:
        raise EdgelessGraph("certificates need at least one edge")
    if not is_connected(g):
        raise NotConnected("certificates need a connected graph")

    def report(tau=None, d=None, rank=None, target=None, verdict=None,
               core=INCONCLUSIVE, reasons=()):
        return CertReport(
            graph_id=graph_id,
            n=g.n,
            degree=is_regular(g),
            srg=srg_params(g),
            tau=tau,
            d=d,
            edges=g.edge_count(),
            rank=rank,
            target=target,
            verdict=verdict,
            core=core,
            reasons=tuple(reasons),
            ms=int((time.perf_counter() - t0) * 1000),
        )

    try:
        sd = spectral_data(g)
    except NotRegular:
        return report(reasons=["not_regular"])
    except NonIntegerLeastEigenvalue:
        return report(reasons=["non_integer_least_eigenvalue"])
    wr = walk_regularity(g)
    if not wr.one_walk:
        return report(tau=sd.tau, d=sd.d, reasons=["not_one_walk_regular"])
    cg = canonical_gram(g, sd=sd)
    res = uvc_test(g, cg=cg)
    if res.verdict == LOOSE:
        return report(
            tau=sd.tau, d=sd.d, rank=res.rank, target=res.target,
            verdict=LOOSE, reasons=["loose"],
        )
    # tight: try the 2-walk-regular route, then local injectivity
    if wr.two_walk and not is_bipartite(g) and not is_complete_multipartite(g):
        return report(
            tau=sd.tau, d=sd.d, rank=res.rank, target=res.target,
            verdict=TIGHT, core=CERTIFIED, reasons=["via_two_walk_regular"],
        )
    _, locally = is_locally_injective_gram(cg, g)
    if locally:
        return report(
            tau=sd.tau, d=sd.d, rank=res.rank, target=res.target,
            verdict=TIGHT, core=CERTIFIED, reasons=["via_local_injectivity"],
        )
    reasons = []
    if not wr.two_walk:
        reasons.append("not_two_walk_regular")
    if is_bipartite(g):
        reasons.append("bipartite")
    elif is_complete_multipartite(g):
        reasons.append("complete_multipartite")
    reasons.append("not_locally_injective")
    return report(
        tau=sd.tau, d=sd.d, rank=res.rank, target=res.target,
        verdict=TIGHT, reasons=reasons,
    )


def sandwich_core_certificate(h, g):
    """Core certificate for any connected g squeezed between h and h'.

    Requires the base graph h to pass the tight rank test with an
    injective canonical Gram; then every connected graph between h and
    its augmentation is a core.
    """
    reasons = []
    cg = canonical_gram(h)
    if uvc_test(h, cg=cg).verdict != TIGHT:
        reasons.append("base_not_uvc")
    injective, _ = is_locally_injective_gram(cg, h)
    if not injective:
        reasons.append("base_gram_not_injective")
    if not is_connected(g):
        reasons.append("candidate_not_connected")
    if not is_spanning_subgraph(h, g):
        reasons.append("base_not_subgraph")
    if not is_spanning_subgraph(g, augmented_graph(h, cg=cg)):
        reasons.append("candidate_exceeds_augmentation")
    return SandwichCertificate(certified=not reasons, reasons=tuple(reasons))
