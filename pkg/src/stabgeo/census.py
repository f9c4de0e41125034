"""Exhaustive enumeration and verification of stabilizer-state counts.

Closed-form counts (total states, k-neighbors, orthogonal states, limit
envelopes), a constructive enumeration of all n-qubit stabilizer states
for small n, the angle histogram of one state against all others,
greedy local search toward arbitrary targets, and brute-force maximum
overlap for the stabilizer-evading families.

The enumeration is structured, not rejection-based: a stabilizer group
modulo signs is a maximal isotropic subspace of GF(2)^2n, parametrized
by (i) the row space of the X parts, an RREF subspace of dimension r,
and (ii) a symmetric r x r binary matrix fixing the Z parts of the X
rows against the pivots; the Z-only rows are forced to the dual space.
Distinct parameters give distinct groups, so nothing is deduplicated,
and each group fans out into 2^n sign vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

from .errors import DimensionError
from .exact import CycQ8, QuadReal
from .fixtures import AMPLITUDE_TOKENS
from .geometry import k_neighbor_class, nearest_neighbors
from .tableau import StabilizerMatrix, canonicalize, rep_vector

DEFAULT_ENUM_BOUND = 4


def count_states(n: int) -> int:
    """N(n) = 2^n * prod_{k=0..n-1} (2^(n-k) + 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 1 << n
    for k in range(n):
        total *= (1 << (n - k)) + 1
    return total


def count_states_recurrence(n: int) -> int:
    """The same count via N(n) = 2(2^n + 1) N(n-1), N(1) = 6."""
    total = 6
    for m in range(2, n + 1):
        total *= 2 * ((1 << m) + 1)
    return total


def count_k_neighbors(n: int, k: int) -> int:
    """Number of states at inner-product magnitude 2^(-k/2) from any
    fixed state: 2^(k(k+1-n)) * prod_{j<k} (4^n/2^j - 2^n)/(2^k - 2^j)."""
    if not 1 <= k <= n:
        raise ValueError("k must satisfy 1 <= k <= n")
    value = Fraction(2) ** (k * (k + 1 - n))
    for j in range(k):
        value *= Fraction(4 ** n // 2 ** j - 2 ** n, 2 ** k - 2 ** j)
    assert value.denominator == 1
    return value.numerator


def count_orthogonal(n: int) -> int:
    """Number of states orthogonal to any fixed state:
    N(n) (2^n - 1) / (3 * 2^n)."""
    num = count_states(n) * ((1 << n) - 1)
    den = 3 * (1 << n)
    assert num % den == 0
    return num // den


def limit_bounds(k: int) -> tuple[float, float]:
    """Envelope [l(k), u(k)] for the n->infinity limit of
    L_n(n-k)/N(n); rational product factors, float exponentials."""
    if k < 0:
        raise ValueError("k must be non-negative")
    m5 = Fraction(1)
    for j in range(1, 6):
        m5 *= 1 / (1 - Fraction(1, 2 ** j))
        m5 *= 1 - Fraction(2, 2 ** (j + k) + 1)
    lower = float(m5) / 2.0 ** (k * (k + 5) / 2) * math.exp(
        Fraction(1, 32) - Fraction(2, 2 ** (k + 5) - 1))
    upper = float(m5) / 2.0 ** (k * (k + 3) / 2) * math.exp(
        Fraction(1, 15) - Fraction(2, 2 ** (k + 5) + 1))
    return lower, upper


def neighbor_fraction(n: int, k: int) -> Fraction:
    """a_{n,k} = L_n(k)/N(n)."""
    return Fraction(count_k_neighbors(n, k), count_states(n))


def mean_abs_overlap(n: int) -> QuadReal:
    """Exact E|<psi|phi>| over a uniformly random second state
    (the reference state itself included with overlap 1)."""
    total = count_states(n)
    rat = Fraction(1, total)  # the parallel term
    root2 = Fraction(0)
    for k in range(1, n + 1):
        w = Fraction(count_k_neighbors(n, k), total)
        if k % 2 == 0:
            rat += w / 2 ** (k // 2)
        else:
            root2 += w / 2 ** ((k + 1) // 2)
    return QuadReal(rat, root2)


# -- enumeration -------------------------------------------------------


def _rref_bases(n: int, r: int) -> Iterator[list[int]]:
    """All RREF bases of r-dimensional subspaces of GF(2)^n as bitmask
    rows (bit n-1-c = column c), pivots ascending."""
    if r == 0:
        yield []
        return
    for pivots in combinations(range(n), r):
        free_cols = [[c for c in range(n) if c > pivots[i] and c not in pivots]
                     for i in range(r)]
        counts = [len(f) for f in free_cols]

        def fill(i: int, rows: list[int]):
            if i == r:
                yield rows.copy()
                return
            base = 1 << (n - 1 - pivots[i])
            for bits in range(1 << counts[i]):
                row = base
                for t, c in enumerate(free_cols[i]):
                    if bits & (1 << t):
                        row |= 1 << (n - 1 - c)
                rows.append(row)
                yield from fill(i + 1, rows)
                rows.pop()

        yield from fill(0, [])


def _dual_basis(n: int, x_rows: list[int], pivots: list[int]) -> list[int]:
    """Basis of the dot-product dual of the row space: one vector per
    non-pivot column c, with 1 at c and the pivot entries x_i[c]."""
    pivot_set = set(pivots)
    out = []
    for c in range(n):
        if c in pivot_set:
            continue
        w = 1 << (n - 1 - c)
        for i, p in enumerate(pivots):
            if x_rows[i] & (1 << (n - 1 - c)):
                w |= 1 << (n - 1 - p)
        out.append(w)
    return out


def enumerate_groups(n: int) -> Iterator[StabilizerMatrix]:
    """All N(n)/2^n dissimilar canonical matrices (all-plus signs)."""
    for r in range(n + 1):
        for x_rows in _rref_bases(n, r):
            pivots = [n - x.bit_length() for x in x_rows]
            z_only = _dual_basis(n, x_rows, pivots)
            sym_bits = r * (r + 1) // 2
            pairs = [(i, j) for i in range(r) for j in range(i, r)]
            for code in range(1 << sym_bits):
                zs = [0] * r
                for t, (i, j) in enumerate(pairs):
                    if code & (1 << t):
                        zs[i] |= 1 << (n - 1 - pivots[j])
                        if i != j:
                            zs[j] |= 1 << (n - 1 - pivots[i])
                xs = list(x_rows) + [0] * len(z_only)
                zvec = zs + z_only
                mat = StabilizerMatrix(n, xs, zvec, [0] * n, validate=False)
                mat._canonicalize_inplace()
                yield mat


def enumerate_states(n: int, bound: int = DEFAULT_ENUM_BOUND
                     ) -> Iterator[StabilizerMatrix]:
    """Every n-qubit stabilizer state exactly once: each dissimilar
    canonical matrix crossed with its 2^n sign vectors."""
    if n > bound:
        raise ValueError(
            f"enumeration of {count_states(n)} states at n={n} exceeds the "
            f"bound {bound}; raise it explicitly if you mean it")
    for base in enumerate_groups(n):
        for signs in range(1 << n):
            phases = [2 if signs & (1 << t) else 0 for t in range(n)]
            yield StabilizerMatrix(n, base.xs.copy(), base.zs.copy(),
                                   phases, validate=False)


@dataclass
class CountReport:
    """Angle distribution of one reference state against all others."""

    n: int
    total: int
    per_k: dict[int, int]
    orthogonal: int

    def fraction(self, key) -> Fraction:
        others = self.total - 1
        if key == "orth":
            return Fraction(self.orthogonal, others)
        return Fraction(self.per_k.get(key, 0), others)

    def rows(self) -> list[tuple[int, str, int, Fraction]]:
        out = [(self.n, str(k), self.per_k[k], self.fraction(k))
               for k in sorted(self.per_k)]
        out.append((self.n, "orth", self.orthogonal, self.fraction("orth")))
        return out


def angle_histogram(n: int, reference: Optional[StabilizerMatrix] = None,
                    bound: int = DEFAULT_ENUM_BOUND) -> CountReport:
    """Classify every enumerated state against the reference state."""
    if reference is None:
        reference = StabilizerMatrix.zero_state(n)
    if reference.n != n:
        raise DimensionError("reference state has the wrong qubit count")
    per_k: dict[int, int] = {}
    orth = 0
    parallel = 0
    total = 0
    for state in enumerate_states(n, bound=bound):
        total += 1
        cls = k_neighbor_class(reference, state)
        if cls.kind == "orthogonal":
            orth += 1
        elif cls.kind == "parallel":
            parallel += 1
        else:
            per_k[cls.k] = per_k.get(cls.k, 0) + 1
    assert parallel == 1
    return CountReport(n, total, per_k, orth)


# -- dense targets and search ------------------------------------------


class DenseState:
    """An exact (possibly unnormalized) vector with amplitudes in Q(w).

    Used for local-search and evading-state targets; comparisons against
    stabilizer states go through exact inner products, so no floating
    point is involved.
    """

    def __init__(self, n: int, amplitudes: list[CycQ8]):
        if len(amplitudes) != 1 << n:
            raise DimensionError("amplitude vector has the wrong length")
        self.n = n
        self.amplitudes = amplitudes

    @classmethod
    def from_matrix(cls, m: StabilizerMatrix) -> "DenseState":
        return cls(m.n, rep_vector(m))

    @classmethod
    def from_tokens(cls, tokens) -> "DenseState":
        n = (len(tokens) - 1).bit_length()
        amps = []
        for tok in tokens:
            re, im = AMPLITUDE_TOKENS[tok]
            amps.append(CycQ8.from_gauss(Fraction(re), Fraction(im)))
        return cls(n, amps)

    @classmethod
    def spiked_uniform(cls, n: int, epsilon: Fraction) -> "DenseState":
        """(1 + epsilon)|0...0> + sum of all other basis states,
        unnormalized."""
        amps = [CycQ8.one() for _ in range(1 << n)]
        amps[0] = CycQ8(1 + Fraction(epsilon))
        return cls(n, amps)

    @classmethod
    def evading(cls, pairs: int) -> "DenseState":
        """The 2*pairs-qubit family ((|00>+|01>+|10>)/sqrt(3))^(x pairs),
        unnormalized (norm^2 = 3^pairs).  Not a stabilizer state: its
        double cofactors on each pair have support three."""
        amps = [CycQ8.one()]
        for _ in range(pairs):
            block = []
            for a in amps:
                block.extend([a, a, a, CycQ8.zero()])
            amps = block
        return cls(2 * pairs, amps)

    def norm_sq(self) -> QuadReal:
        total = QuadReal(0, 0)
        for a in self.amplitudes:
            v = a.abs2()
            total = QuadReal(total.a + v.a, total.b + v.b)
        return total

    def inner_with_matrix(self, m: StabilizerMatrix) -> CycQ8:
        """<rep(m) | self>, exact."""
        out = CycQ8.zero()
        for amp_m, amp_t in zip(rep_vector(m), self.amplitudes):
            if not amp_m.is_zero() and not amp_t.is_zero():
                out = out + amp_m.conjugate() * amp_t
        return out

    def overlap_sq_with(self, m: StabilizerMatrix) -> QuadReal:
        """|<rep(m)|self>|^2 / ||self||^2, exact in Q(sqrt(2))."""
        ip = self.inner_with_matrix(m).abs2()
        norm = self.norm_sq()
        # divide (a + b sqrt2) by (c + d sqrt2) exactly; the denominator
        # c^2 - 2 d^2 vanishes over the rationals only for the zero vector
        c, d = norm.a, norm.b
        den = c * c - 2 * d * d
        if den == 0:
            raise ValueError("overlap against the zero vector")
        return QuadReal((ip.a * c - 2 * ip.b * d) / den,
                        (ip.b * c - ip.a * d) / den)


def local_search(target: DenseState, start: StabilizerMatrix
                 ) -> tuple[StabilizerMatrix, list[StabilizerMatrix]]:
    """Greedy walk over nearest neighbors maximizing |<phi|target>|.

    Moves only on strict improvement (first maximizer wins ties among
    neighbors) and stops at a local maximum, which need not be the
    closest stabilizer state to the target.
    """
    if target.n != start.n:
        raise DimensionError("target and start qubit counts differ")
    current = canonicalize(start)
    score = target.overlap_sq_with(current)
    trace = [current]
    while True:
        best = None
        best_score = score
        for nb in nearest_neighbors(current):
            s = target.overlap_sq_with(nb)
            if best_score < s:
                best, best_score = nb, s
        if best is None:
            return current, trace
        current, score = best, best_score
        trace.append(current)


def max_overlap(target: DenseState, bound: int = DEFAULT_ENUM_BOUND
                ) -> tuple[QuadReal, StabilizerMatrix]:
    """Exhaustively maximize |<s|target>| over all stabilizer states;
    returns (squared overlap against the normalized target, argmax)."""
    best_sq = None
    best_state = None
    for state in enumerate_states(target.n, bound=bound):
        sq = target.overlap_sq_with(state)
        if best_sq is None or best_sq < sq:
            best_sq, best_state = sq, state
    return best_sq, best_state
