"""Gray maps to F_q, Lee weight, and minimum distance of linear codes over F_q.

The ring map sends b = (n1, n2, n3, n4) in kappa coordinates to (n1, n2, n3, n4) M,
with M = 1/2 [[1,1,1,1],[1,-1,1,-1],[1,1,-1,-1],[1,-1,-1,1]] so that M M^T = I.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

import numba
import numpy as np

from . import linalg
from .errors import BudgetExceeded, EmptyCode, RankDeficient
from .gf import GF
from .mixedcode import MixedCode, MixedWord, minimal_generating_set

SIGNS = np.array([[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]])

DEFAULT_DISTANCE_BUDGET = 50_000_000
ENUMERATE_LIMIT = 1 << 16


def gray_matrix(F: GF, signs=SIGNS, scale=None) -> np.ndarray:
    """The 4x4 matrix over F_q; ``scale`` defaults to 1/2."""
    half = F.inv(F.from_int(2)) if scale is None else scale
    mhalf = F.neg(half)
    return np.array([[half if e > 0 else mhalf for e in row] for row in signs], dtype=np.int64)


def gray_lambda(F: GF, M: np.ndarray) -> int | None:
    """lambda with M M^T = lambda I, or None if M is not of that shape."""
    P = linalg.matmul(F, M, M.T)
    lam = int(P[0, 0])
    if np.array_equal(P, np.diag([lam] * 4)):
        return lam
    return None


def phi1(F: GF, b, M: np.ndarray | None = None) -> np.ndarray:
    M = gray_matrix(F) if M is None else M
    return linalg.matmul(F, np.asarray(b, dtype=np.int64).reshape(1, 4), M)[0]


def gray_transform(F: GF, r: int, s: int, M: np.ndarray | None = None) -> np.ndarray:
    """Block-diagonal T with Phi(v) = v T for kappa-model row vectors v."""
    M = gray_matrix(F) if M is None else M
    T = np.zeros((r + 4 * s, r + 4 * s), dtype=np.int64)
    T[:r, :r] = np.eye(r, dtype=np.int64)
    for j in range(s):
        T[r + 4 * j : r + 4 * j + 4, r + 4 * j : r + 4 * j + 4] = M
    return T


def big_phi(F: GF, w: MixedWord, M: np.ndarray | None = None) -> np.ndarray:
    """(g_0, ..., g_{r-1}, b_0 M, ..., b_{s-1} M)."""
    M = gray_matrix(F) if M is None else M
    parts = [np.asarray(w.g, dtype=np.int64)]
    parts += [phi1(F, bj, M) for bj in w.b]
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def gray_rows(F: GF, r: int, s: int, V: np.ndarray, M: np.ndarray | None = None) -> np.ndarray:
    V = linalg.as_matrix(V, r + 4 * s)
    if V.shape[0] == 0:
        return V
    return linalg.matmul(F, V, gray_transform(F, r, s, M))


def hamming_weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v)))


def lee_weight(F: GF, w: MixedWord, M: np.ndarray | None = None) -> int:
    """Hamming weight of the field block plus that of each b_j M."""
    return hamming_weight(big_phi(F, w, M))


# ----------------------------------------------------------------------------
# linear codes over F_q


@dataclass
class LinearCodeFq:
    field: GF
    G: np.ndarray
    H: np.ndarray
    n: int
    k: int

    @classmethod
    def from_generator(cls, F: GF, G, n: int | None = None) -> "LinearCodeFq":
        G = linalg.as_matrix(G, n)
        n = G.shape[1] if n is None else n
        R, _ = linalg.rref(F, G) if G.size else (np.zeros((0, n), dtype=np.int64), [])
        H = linalg.nullspace(F, R, n)
        return cls(F, R, H, n, R.shape[0])

    def params(self, d=None) -> str:
        d = "?" if d is None else d
        return f"[{self.n},{self.k},{d}]_{self.field.q}"

    def dual(self) -> "LinearCodeFq":
        return LinearCodeFq.from_generator(self.field, self.H, self.n)

    def contains(self, other: "LinearCodeFq") -> bool:
        return linalg.row_space_contains(self.field, self.G, other.G)

    def to_json(self) -> dict:
        F = self.field
        return {
            "n": self.n,
            "k": self.k,
            "q": F.q,
            "G": [[F.fmt(int(a)) for a in row] for row in self.G],
            "H": [[F.fmt(int(a)) for a in row] for row in self.H],
        }


def gray_image_code(code: MixedCode, M: np.ndarray | None = None) -> LinearCodeFq:
    """Phi of the generating set; its rank must equal the code dimension."""
    F = code.ctx.field
    n = code.n_gray
    G = gray_rows(F, code.r, code.s, minimal_generating_set(code).matrix(code.r, code.s), M)
    lc = LinearCodeFq.from_generator(F, G, n)
    if lc.k != code.k:
        raise RankDeficient(f"Gray image has rank {lc.k}, expected {code.k}")
    return lc


# ----------------------------------------------------------------------------
# minimum distance


@dataclass
class DistanceReport:
    distance: int | None
    proved_exact: bool
    lower_bound: int
    upper_bound: int
    strategy: str
    work_count: int
    witness: list | None = dc_field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "distance": self.distance,
            "proved_exact": self.proved_exact,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "strategy": self.strategy,
            "work_count": self.work_count,
        }


@numba.njit(cache=True, nogil=True)
def _fmul(a, b, exp, log):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


@numba.njit(cache=True, nogil=True)
def _fadd(a, b, exp, log, zech, qm1):
    if a == 0:
        return b
    if b == 0:
        return a
    la = log[a]
    d = log[b] - la
    if d < 0:
        d += qm1
    z = zech[d]
    if z < 0:
        return 0
    return exp[la + z]


@numba.njit(cache=True, nogil=True)
def _dependent_subset(cols, w, first_lo, first_hi, exp, log, zech, neg, qm1, max_work, out_idx):
    """Look for w columns (first index in [first_lo, first_hi)) that are linearly dependent.

    Depth-first over increasing index tuples with incremental elimination.
    Returns (size, work): size is the number of columns in the dependent set
    found (stored in ``out_idx[:size]``), 0 if none, -1 if ``max_work`` ran out.
    """
    n = cols.shape[0]
    nr = cols.shape[1]
    basis = np.zeros((w, nr), dtype=np.int64)
    piv = np.zeros(w, dtype=np.int64)
    idx = np.zeros(w, dtype=np.int64)
    v = np.zeros(nr, dtype=np.int64)
    work = 0
    depth = 0
    idx[0] = first_lo - 1
    while depth >= 0:
        idx[depth] += 1
        c = idx[depth]
        if c > n - (w - depth) or (depth == 0 and c >= first_hi):
            depth -= 1
            continue
        work += 1
        if work > max_work:
            return -1, work
        for e in range(nr):
            v[e] = cols[c, e]
        for t in range(depth):
            a = v[piv[t]]
            if a != 0:
                na = neg[a]
                for e in range(nr):
                    bt = basis[t, e]
                    if bt != 0:
                        v[e] = _fadd(v[e], _fmul(na, bt, exp, log), exp, log, zech, qm1)
        p = -1
        for e in range(nr):
            if v[e] != 0:
                p = e
                break
        if p < 0:
            for t in range(depth + 1):
                out_idx[t] = idx[t]
            return depth + 1, work
        if depth == w - 1:
            continue
        inv = exp[(qm1 - log[v[p]]) % qm1]
        for e in range(nr):
            basis[depth, e] = _fmul(v[e], inv, exp, log)
        piv[depth] = p
        depth += 1
        idx[depth] = c
    return 0, work


def _witness_from_support(F: GF, H: np.ndarray, support: list[int], n: int) -> list[int]:
    sub = H[:, support] if H.shape[0] else np.zeros((0, len(support)), dtype=np.int64)
    null = linalg.nullspace(F, sub, len(support))
    word = np.zeros(n, dtype=np.int64)
    word[support] = null[0]
    return word.tolist()


def _support_search(lc: LinearCodeFq, budget: int, workers: int) -> DistanceReport:
    F = lc.field
    n, k = lc.n, lc.k
    upper = n - k + 1
    H = lc.H
    cols = np.ascontiguousarray(H.T if H.shape[0] else np.zeros((n, 0), dtype=np.int64))
    exp = np.asarray(F._exp, dtype=np.int64)
    log = np.asarray([max(x, 0) for x in F._log], dtype=np.int64)
    zech = np.asarray(F._zech, dtype=np.int64)
    neg = np.asarray(F._neg, dtype=np.int64)
    qm1 = F.q - 1
    total = 0
    workers = max(1, workers)
    for w in range(1, upper + 1):
        remaining = budget - total
        chunks = _partition(n - w + 1, workers)

        def job(lohi):
            out = np.zeros(w, dtype=np.int64)
            size, work = _dependent_subset(
                cols, w, lohi[0], lohi[1], exp, log, zech, neg, qm1, remaining, out
            )
            return size, work, out[: max(size, 0)]

        if len(chunks) == 1:
            results = [job(chunks[0])]
        else:
            with ThreadPoolExecutor(len(chunks)) as pool:
                results = list(pool.map(job, chunks))
        total += sum(r[1] for r in results)
        hits = [r[2].tolist() for r in results if r[0] > 0]
        if hits:
            support = min(hits, key=lambda h: (len(h), h))
            d = len(support)
            return DistanceReport(d, True, d, d, "support_search", total, _witness_from_support(F, H, support, n))
        if total > budget or any(r[0] < 0 for r in results):
            raise BudgetExceeded(
                f"support search exceeded {budget} steps",
                partial=DistanceReport(None, False, w, upper, "support_search", total),
            )
    raise AssertionError("unreachable: n - k + 1 columns of H are always dependent")


def _partition(count: int, workers: int) -> list[tuple[int, int]]:
    if workers <= 1 or count <= 1:
        return [(0, count)]
    # early first indices own far more subsets; split them finely
    bounds = sorted({0, count} | {int(count * (1 - math.sqrt(1 - j / workers))) for j in range(1, workers)})
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if b > a]


def _enumerate(lc: LinearCodeFq, budget: int) -> DistanceReport:
    F = lc.field
    q, k, n = F.q, lc.k, lc.n
    if q**k > budget:
        raise BudgetExceeded(
            f"q^k = {q}^{k} exceeds budget {budget}",
            partial=DistanceReport(None, False, 1, n - k + 1, "enumerate", 0),
        )
    G = lc.G
    best, best_word = n + 1, None
    total = q**k
    chunk = 1 << 14
    powers = q ** np.arange(k, dtype=np.int64)
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coeffs = (idx[:, None] // powers[None, :]) % q  # digits are additive-group codes
        words = np.zeros((idx.size, n), dtype=np.int64)
        for j in range(k):
            words = F.vadd(words, F.vmul(coeffs[:, j, None], G[j][None, :]))
        wts = np.count_nonzero(words, axis=1)
        i = int(np.argmin(wts))
        if wts[i] < best:
            best, best_word = int(wts[i]), words[i].tolist()
    return DistanceReport(best, True, best, best, "enumerate", total - 1, best_word)


def _support_cost(n: int, k: int) -> int:
    """Worst-case rank checks of support_search (d <= n - k + 1)."""
    return sum(math.comb(n, w) for w in range(1, n - k + 2))


def min_distance(
    lc: LinearCodeFq,
    strategy: str = "auto",
    budget: int | None = None,
    workers: int | None = None,
) -> DistanceReport:
    """Exact minimum Hamming distance with provenance.

    ``enumerate`` walks all q^k codewords; ``support_search`` finds the
    smallest linearly dependent set of parity-check columns.
    """
    if lc.k == 0:
        raise EmptyCode("empty code has no distance")
    if budget is None:
        budget = int(os.environ.get("SKEWCODEC_BUDGET", DEFAULT_DISTANCE_BUDGET))
    workers = workers or 1
    if strategy == "support":
        strategy = "support_search"
    if strategy == "auto":
        words = lc.field.q**lc.k
        small = words <= min(budget, ENUMERATE_LIMIT)
        strategy = "enumerate" if small and words <= _support_cost(lc.n, lc.k) else "support_search"
    if strategy == "enumerate":
        return _enumerate(lc, budget)
    if strategy == "support_search":
        return _support_search(lc, budget, workers)
    raise ValueError(f"unknown strategy {strategy!r}")


def params_string(n: int, k: int, d, q: int) -> str:
    return f"[{n},{k},{d}]_{q}"
