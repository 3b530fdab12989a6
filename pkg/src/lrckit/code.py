"""Linear codes as first-class objects.

A code is held by a parity-check matrix (possibly with redundant rows; the
strict-availability constructions deliberately keep all local checks) and an
optional generator.  The dimension is always derived from rank, never
trusted from metadata.  Includes puncturing/shortening/dual, brute-force
minimum distance, generalized Hamming weights (minimum support weights) and
an MDS test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from .field import GF
from .matrix import Mat, mat_nullspace, mat_rank, rref

#: enumeration ceilings, surfaced in verification reports
MIN_DISTANCE_BUDGET = 2 ** 24
SUPPORT_WEIGHT_BUDGET = 10 ** 6
IS_MDS_BUDGET = 10 ** 6


class BudgetExceeded(RuntimeError):
    """Exact enumeration would exceed the declared budget."""


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class CodeParams:
    """Declared parameters of a code; `role` tags the family it comes from."""
    n: int
    k: int
    r: Optional[int] = None
    t: Optional[int] = None
    d_min: Optional[int] = None
    q: Optional[int] = None
    role: Optional[str] = None  # LR | S-LR | availability | SA | MR | PMR | MDS

    def __post_init__(self):
        numeric = [self.n, self.k, self.r, self.t, self.d_min, self.q]
        if any(v is not None and v < 0 for v in numeric):
            raise ValueError("parameters must be nonnegative")
        if self.d_min is not None and self.d_min > self.n - self.k + 1:
            raise ValueError("d_min exceeds the classical limit n - k + 1")

    def as_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


@dataclass(frozen=True)
class ErasurePattern:
    indices: Tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(self.indices))
        if len(set(idx)) != len(idx):
            raise IndexOutOfRange("repeated erasure index")
        object.__setattr__(self, "indices", idx)

    def check_range(self, n: int) -> None:
        if self.indices and (self.indices[0] < 0 or self.indices[-1] >= n):
            raise IndexOutOfRange(f"erasure index outside [0, {n})")


class LinearCode:
    """An [n, k] linear code over GF(q) given by a parity-check matrix."""

    def __init__(self, H: Mat, G: Optional[Mat] = None,
                 params: Optional[CodeParams] = None,
                 provenance: Optional[dict] = None):
        self.gf: GF = H.gf
        self.H = H
        self.n = H.cols
        self._rank_h = mat_rank(H)
        self.k = self.n - self._rank_h
        self._G = G
        if G is not None:
            if G.cols != self.n or mat_rank(G) != self.k:
                raise ValueError("generator inconsistent with parity check")
            if not H.mul(G.transpose()).is_zero():
                raise ValueError("G H^T != 0")
        self.params = params
        self.provenance = provenance or {}

    # -- basic views --

    def generator(self) -> Mat:
        if self._G is None:
            self._G = mat_nullspace(self.H)
        return self._G

    def full_rank_checks(self) -> Mat:
        """A full-row-rank parity-check matrix (RREF rows of H)."""
        R, _ = rref(self.H)
        return R

    def rate(self):
        from fractions import Fraction
        return Fraction(self.k, self.n)

    def codewords(self) -> Iterator[Tuple[int, ...]]:
        """All q^k codewords (use only when that is small)."""
        gf = self.gf
        G = self.generator()
        msg = [0] * self.k
        while True:
            yield G.transpose().mul_vec(msg)
            i = 0
            while i < self.k:
                msg[i] += 1
                if msg[i] < gf.q:
                    break
                msg[i] = 0
                i += 1
            if i == self.k:
                return

    def __repr__(self) -> str:
        return f"LinearCode[n={self.n}, k={self.k}] over {self.gf}"


def code_from_parity(H: Mat, params: Optional[CodeParams] = None,
                     provenance: Optional[dict] = None) -> LinearCode:
    return LinearCode(H, params=params, provenance=provenance)


def code_from_generator(G: Mat, params: Optional[CodeParams] = None,
                        provenance: Optional[dict] = None) -> LinearCode:
    H = mat_nullspace(G)
    return LinearCode(H, G=rref(G)[0], params=params, provenance=provenance)


def dual(c: LinearCode) -> LinearCode:
    """The dual code: parity checks and generators swap roles."""
    return LinearCode(rref(c.generator())[0] if c.k else
                      Mat.identity(c.gf, c.n),
                      G=c.full_rank_checks() if c.k < c.n else None)


def _complement(n: int, S: Sequence[int]) -> List[int]:
    s = set(S)
    if s and (min(s) < 0 or max(s) >= n):
        raise IndexOutOfRange(f"coordinate set outside [0, {n})")
    return [i for i in range(n) if i not in s]


def puncture(c: LinearCode, S: Sequence[int]) -> LinearCode:
    """Restrict all codewords to the coordinates outside S."""
    keep = _complement(c.n, S)
    Gp = c.generator().select_columns(keep)
    return code_from_generator(rref(Gp)[0])


def shorten(c: LinearCode, S: Sequence[int]) -> LinearCode:
    """Keep codewords that vanish on S, then drop those coordinates."""
    keep = _complement(c.n, S)
    G = c.generator()
    if not S:
        return code_from_generator(G)
    # messages whose encoding is zero on S
    Gs = G.select_columns(list(S))
    kernel = mat_nullspace(Gs.transpose())  # rows: messages
    Gk = kernel.mul(G).select_columns(keep)
    R, _ = rref(Gk)
    if R.rows == 0:
        return LinearCode(Mat.identity(c.gf, len(keep)))
    return code_from_generator(R)


# ---------------------------------------------------------------------------
# minimum distance
# ---------------------------------------------------------------------------

def _min_distance_gf2(c: LinearCode) -> int:
    """Gray-code enumeration of all nonzero codewords, bit-packed."""
    basis = c.generator().bitrows()
    k = len(basis)
    best = c.n + 1
    cw = 0
    prev = 0
    for t in range(1, 1 << k):
        gray = t ^ (t >> 1)
        diff = gray ^ prev
        cw ^= basis[(diff & -diff).bit_length() - 1]
        prev = gray
        w = cw.bit_count()
        if 0 < w < best:
            best = w
    return best


def _min_distance_enum(c: LinearCode) -> int:
    best = c.n + 1
    first = True
    for cw in c.codewords():
        if first:
            first = False
            continue  # zero codeword comes first
        w = sum(1 for x in cw if x)
        if 0 < w < best:
            best = w
    return best


def _min_distance_columns(c: LinearCode) -> int:
    """Smallest number of linearly dependent columns of a full-rank H."""
    H = c.full_rank_checks()
    n = c.n
    for w in range(1, n - c.k + 2):
        for cols in combinations(range(n), w):
            sub = H.select_columns(cols)
            if mat_rank(sub) < w:
                return w
    raise AssertionError("no dependent column set found")


def min_distance(c: LinearCode, budget: int = MIN_DISTANCE_BUDGET) -> int:
    """Exact minimum Hamming weight over the nonzero codewords.

    Picks the cheapest exact strategy: codeword enumeration (bit-packed over
    GF(2)) or a search for the smallest dependent column set of H.  Raises
    BudgetExceeded when neither fits, signalling the caller to fall back to a
    sampled lower bound.
    """
    if c.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    try:
        enum_cost = c.gf.q ** c.k
    except OverflowError:  # pragma: no cover
        enum_cost = budget + 1
    col_cost = sum(math.comb(c.n, w) for w in range(1, c.n - c.k + 2))
    if enum_cost <= budget and (c.gf.q == 2 or enum_cost <= col_cost
                                or col_cost > budget):
        if c.gf.q == 2:
            return _min_distance_gf2(c)
        return _min_distance_enum(c)
    if col_cost <= budget:
        return _min_distance_columns(c)
    raise BudgetExceeded(
        f"min_distance needs min({enum_cost}, {col_cost}) > {budget} steps")


def min_weight_sample(c: LinearCode, samples: int, seed: int = 0) -> int:
    """Sampled upper bound on the minimum distance (never exact)."""
    import random
    rng = random.Random(seed)
    gf, G = c.gf, c.generator()
    Gt = G.transpose()
    best = c.n + 1
    for _ in range(samples):
        msg = [rng.randrange(gf.q) for _ in range(c.k)]
        if not any(msg):
            continue
        w = sum(1 for x in Gt.mul_vec(msg) if x)
        if 0 < w < best:
            best = w
    return best


# ---------------------------------------------------------------------------
# generalized Hamming weights (minimum support weights)
# ---------------------------------------------------------------------------

def _gaussian_binomial(k: int, i: int, q: int) -> int:
    num = den = 1
    for j in range(i):
        num *= q ** (k - j) - 1
        den *= q ** (j + 1) - 1
    return num // den


def _subspace_bases(k: int, i: int, q: int) -> Iterator[List[List[int]]]:
    """All i-dim subspaces of GF(q)^k, as canonical RREF basis matrices."""
    for pivots in combinations(range(k), i):
        free_positions = []
        for row, pc in enumerate(pivots):
            for col in range(pc + 1, k):
                if col not in pivots:
                    free_positions.append((row, col))
        nfree = len(free_positions)
        for code in range(q ** nfree):
            basis = [[0] * k for _ in range(i)]
            for row, pc in enumerate(pivots):
                basis[row][pc] = 1
            v = code
            for (row, col) in free_positions:
                basis[row][col] = v % q
                v //= q
            yield basis


def support_weight(c: LinearCode, i: int,
                   budget: int = SUPPORT_WEIGHT_BUDGET) -> int:
    """i-th minimum support weight: the smallest support of an i-dimensional
    subcode.  i = 1 gives the minimum distance."""
    if not 1 <= i <= c.k:
        raise ValueError(f"need 1 <= i <= k, got {i}")
    count = _gaussian_binomial(c.k, i, c.gf.q)
    if count > budget:
        raise BudgetExceeded(f"{count} subspaces > budget {budget}")
    gf = c.gf
    G = c.generator()
    Gt = G.transpose()
    best = c.n + 1
    for basis in _subspace_bases(c.k, i, gf.q):
        support = set()
        for msg in basis:
            for j, x in enumerate(Gt.mul_vec(msg)):
                if x:
                    support.add(j)
            if len(support) >= best:
                break
        if len(support) < best:
            best = len(support)
    return best


def is_mds(c: LinearCode, budget: int = IS_MDS_BUDGET) -> bool:
    """True iff every k columns of G are linearly independent."""
    if c.k == 0 or c.k == c.n:
        return True
    use_h = (c.n - c.k) < c.k
    M = c.full_rank_checks() if use_h else rref(c.generator())[0]
    w = c.n - c.k if use_h else c.k
    if math.comb(c.n, w) > budget:
        raise BudgetExceeded(f"C({c.n},{w}) column subsets > {budget}")
    for cols in combinations(range(c.n), w):
        if mat_rank(M.select_columns(cols)) < w:
            return False
    return True
