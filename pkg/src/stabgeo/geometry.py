"""Computational geometry of stabilizer states.

Inner products (real magnitude and full complex value), the k-neighbor
classification, unbiased two-basis-state sums, nearest-neighbor
generation, tensor and wedge products, orthogonalization of stabilizer
superpositions, and the Gramian linear-dependence test.  Everything is
exact: magnitudes are powers of 2^(-1/2), phases are powers of
w = exp(i*pi/4), and superposition coefficients live in Q(w).
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional

from .clifford import (
    CliffordCircuit,
    apply_circuit_with_phase,
    conjugate_circuit,
    inverse_circuit,
)
from .errors import (
    DimensionError,
    MalformedMatrixError,
    NonCanonicalError,
    NotStabilizerBivector,
    ParallelStatesError,
)
from .exact import CycQ8, ExactScalar, SqrtFraction
from .pauli import PauliOp, commutes, pauli_mul
from .synth import basis_norm_circuit
from .tableau import (
    StabilizerMatrix,
    _amplitude_in,
    _support_rep,
    canonicalize,
    cofactor,
    is_canonical,
    rep_vector,
    x_row_count,
)


def _require_pure_pair(m1: StabilizerMatrix, m2: StabilizerMatrix):
    if m1.n != m2.n:
        raise DimensionError("states act on different qubit counts")
    if not (m1.is_pure and m2.is_pure):
        raise MalformedMatrixError("inner products require pure matrices")


def inner_product_abs(m_psi: StabilizerMatrix, m_phi: StabilizerMatrix
                      ) -> ExactScalar:
    """|<psi|phi>|: zero, or 2^(-k/2) with k the number of X/Y rows left
    after normalizing psi to a basis state and carrying phi along.

    Orthogonality of I/Z-only rows is decided by rebuilding each such
    row from the basis-form generators and comparing signs.  O(n^3).
    """
    _require_pure_pair(m_psi, m_phi)
    circuit, _, basis = basis_norm_circuit(m_psi)
    phi = canonicalize(conjugate_circuit(m_phi, circuit))
    n = phi.n
    k = 0
    for i in range(phi.num_rows):
        if phi.xs[i]:
            k += 1
            continue
        row = phi.row(i)
        acc = PauliOp.identity(n)
        for j in range(n):
            if phi.zs[i] & phi.column_bit(j):
                acc = pauli_mul(basis.row(j), acc)
        if acc.phase_exp % 2:
            raise MalformedMatrixError(
                "rebuilt row has odd phase: corrupt stabilizer matrix")
        assert acc.z == row.z and acc.x == 0
        if acc.phase_exp != row.phase_exp:
            return ExactScalar.zero_value()
    return ExactScalar.of(0, k)


def inner_product_complex(m_psi: StabilizerMatrix, m_phi: StabilizerMatrix
                          ) -> ExactScalar:
    """The complex inner product of the canonical representative states
    (first non-zero amplitude of each state positive real).

    Both states are pushed through psi's basis-normalization circuit
    with global-phase tracking; the product is conj(alpha) * beta times
    the amplitude phi's image assigns to psi's image basis state.
    """
    _require_pure_pair(m_psi, m_phi)
    circuit, b, _ = basis_norm_circuit(m_psi)
    _, alpha = apply_circuit_with_phase(m_psi, circuit)
    phi_b, beta = apply_circuit_with_phase(m_phi, circuit)
    phi_c = canonicalize(phi_b)
    amp = _amplitude_in(phi_c, b)
    if amp.zero:
        return ExactScalar.zero_value()
    k = x_row_count(phi_c)
    return (alpha.scalar().conjugate() * beta.scalar() * amp
            * ExactScalar.of(0, k))


class NeighborClass(NamedTuple):
    """Classification of a pair of states by inner-product magnitude."""

    kind: str          # "parallel", "neighbor" or "orthogonal"
    k: Optional[int]   # the k of |<psi|phi>| = 2^(-k/2) for "neighbor"


def k_neighbor_class(m_psi: StabilizerMatrix, m_phi: StabilizerMatrix
                     ) -> NeighborClass:
    ip = inner_product_abs(m_psi, m_phi)
    if ip.zero:
        return NeighborClass("orthogonal", None)
    if ip.half_exp == 0:
        return NeighborClass("parallel", None)
    return NeighborClass("neighbor", ip.half_exp)


def sum_basis_states(n: int, b1: int, b2: int, t: int) -> StabilizerMatrix:
    """Canonical matrix of the unbiased sum (|b1> + i^t |b2>)/sqrt(2).

    Built in the frame where b1 is all-zeros: plain Z rows off the
    differing qubits, a GHZ-style ladder of adjacent ZZ rows on them,
    and one flip row of X letters (with a single Y when t is odd) whose
    sign is fixed so the row maps |0...0> to exactly i^t |b1 xor b2>.
    Conjugating by X on the set bits of b1 shifts the frame back.
    """
    if not 0 <= b1 < (1 << n) or not 0 <= b2 < (1 << n):
        raise IndexError("basis index out of range")
    if b1 == b2:
        raise ValueError("basis indices must differ")
    t %= 4
    diff = b1 ^ b2
    dq = [q for q in range(n) if diff & (1 << (n - 1 - q))]
    xs, zs, phases = [], [], []
    for q in range(n):
        bit = 1 << (n - 1 - q)
        if not diff & bit:
            xs.append(0)
            zs.append(bit)
            phases.append(0)
    for a, b in zip(dq, dq[1:]):
        xs.append(0)
        zs.append((1 << (n - 1 - a)) | (1 << (n - 1 - b)))
        phases.append(0)
    y_count = t % 2
    flip_z = (1 << (n - 1 - dq[-1])) if y_count else 0
    xs.append(diff)
    zs.append(flip_z)
    phases.append((t - y_count) % 4)
    # move the frame from |0...0> to |b1>: X gates flip signs of rows
    # with Z/Y literals on the set bits of b1
    for i in range(len(phases)):
        if (zs[i] & b1).bit_count() % 2:
            phases[i] = (phases[i] + 2) % 4
    out = StabilizerMatrix(n, xs, zs, phases, validate=False)
    out._canonicalize_inplace()
    return out


def nearest_neighbors(m: StabilizerMatrix) -> list[StabilizerMatrix]:
    """All 4(2^n - 1) states at inner-product magnitude 2^(-1/2):
    the unbiased sums (|psi> + i^l P|psi>)/sqrt(2), generated in the
    basis frame and conjugated back."""
    if not m.is_pure:
        raise MalformedMatrixError("nearest neighbors of pure states only")
    circuit, b, _ = basis_norm_circuit(m)
    back = inverse_circuit(circuit)
    out = []
    for b2 in range(1 << m.n):
        if b2 == b:
            continue
        for t in range(4):
            s = sum_basis_states(m.n, b, b2, t)
            out.append(canonicalize(conjugate_circuit(s, back)))
    return out


def tensor(m1: StabilizerMatrix, m2: StabilizerMatrix) -> StabilizerMatrix:
    """Generators of |psi> (x) |phi>: each row padded with identities."""
    n1, n2 = m1.n, m2.n
    xs = [x << n2 for x in m1.xs] + list(m2.xs)
    zs = [z << n2 for z in m1.zs] + list(m2.zs)
    phases = list(m1.phases) + list(m2.phases)
    return StabilizerMatrix(n1 + n2, xs, zs, phases, validate=False)


def wedge_norm(m_psi: StabilizerMatrix, m_phi: StabilizerMatrix) -> SqrtFraction:
    """Parallelogram area sqrt(1 - |<psi|phi>|^2) = sqrt(1 - 2^-k)."""
    ip = inner_product_abs(m_psi, m_phi)
    if ip.zero:
        return SqrtFraction(Fraction(1))
    return SqrtFraction(1 - Fraction(1, 1 << ip.half_exp))


def bivector(m_psi: StabilizerMatrix, m_phi: StabilizerMatrix
             ) -> StabilizerMatrix:
    """The 2n-qubit stabilizer matrix of |psi ^ phi| (up to phase and
    normalization), when the wedge product is a stabilizer state.

    That happens exactly when the states are orthogonal with similar
    canonical matrices, or nearest neighbors; nearest neighbors are
    first replaced by the equivalent orthogonal pair (psi, P psi).
    Pipeline: tensor both orders, synthesize the shared
    basis-normalization circuit, take the phase-tracked difference of
    the two image basis states, and conjugate back.  O(n^3).
    """
    _require_pure_pair(m_psi, m_phi)
    ip = inner_product_abs(m_psi, m_phi)
    a = canonicalize(m_psi)
    b = canonicalize(m_phi)
    if not ip.zero and ip.half_exp == 0:
        raise ParallelStatesError("the wedge product of parallel states is zero")
    similar = a.letters_key() == b.letters_key()
    if ip.zero and not similar:
        raise NotStabilizerBivector(
            "orthogonal states with dissimilar matrices have no stabilizer wedge")
    if not ip.zero and ip.half_exp > 1:
        raise NotStabilizerBivector(
            f"k={ip.half_exp} neighbors have no stabilizer wedge")
    if not similar:
        # nearest neighbors: psi ^ phi is proportional to psi ^ (P psi)
        # for the first generator P of phi outside +/-S(psi)
        p = next(row for row in b.rows
                 if any(not commutes(row, other) for other in a.rows))
        flipped = a.copy()
        for i in range(flipped.num_rows):
            if not commutes(p, flipped.row(i)):
                flipped.phases[i] = (flipped.phases[i] + 2) % 4
        b = flipped
    t1 = tensor(a, b)
    t2 = tensor(b, a)
    circuit, b1, _ = basis_norm_circuit(t1)
    _, alpha1 = apply_circuit_with_phase(t1, circuit)
    t2_mapped, alpha2 = apply_circuit_with_phase(t2, circuit)
    from .tableau import is_basis_form
    b2 = is_basis_form(t2_mapped)
    assert b2 is not None and b2 != b1
    d = (alpha2.omega_exp - alpha1.omega_exp) % 8
    assert d % 2 == 0
    ell = (d // 2 + 2) % 4  # i^ell = -alpha2/alpha1
    summed = sum_basis_states(2 * m_psi.n, b1, b2, ell)
    return canonicalize(conjugate_circuit(summed, inverse_circuit(circuit)))


class StabilizerSum:
    """A linear combination of stabilizer states: (coefficient, matrix)
    pairs over canonical matrices, merged so no two terms share a matrix."""

    def __init__(self, n: int, terms=()):
        self.n = n
        self.terms: list[tuple[CycQ8, StabilizerMatrix]] = []
        for coeff, mat in terms:
            self.insert(coeff, mat)

    def insert(self, coeff: CycQ8, mat: StabilizerMatrix):
        if mat.n != self.n:
            raise DimensionError("term acts on the wrong number of qubits")
        if not is_canonical(mat):
            raise NonCanonicalError("sum terms must be canonical matrices")
        if not isinstance(coeff, CycQ8):
            coeff = coeff.to_cyc() if isinstance(coeff, ExactScalar) else CycQ8(coeff)
        for i, (c, m) in enumerate(self.terms):
            if m == mat:
                merged = c + coeff
                if merged.is_zero():
                    del self.terms[i]
                else:
                    self.terms[i] = (merged, m)
                return
        if not coeff.is_zero():
            self.terms.append((coeff, mat))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def dense(self) -> list[CycQ8]:
        """The exact vector sum over canonical representative states."""
        out = [CycQ8.zero() for _ in range(1 << self.n)]
        for coeff, mat in self.terms:
            for idx, amp in enumerate(rep_vector(mat)):
                if not amp.is_zero():
                    out[idx] = out[idx] + coeff * amp
        return out


_INV_SQRT2 = CycQ8.sqrt2() * Fraction(1, 2)


def _column_letters(m: StabilizerMatrix, j: int):
    bit = m.column_bit(j)
    return tuple((1 if m.xs[i] & bit else 0, 1 if m.zs[i] & bit else 0)
                 for i in range(m.num_rows))


def _decompose(mat: StabilizerMatrix, j: int, outcome: int
               ) -> tuple[StabilizerMatrix, ExactScalar]:
    """Nearest-neighbor cofactor of a state random on qubit j, plus the
    phase factor gamma with rep(mat) = sum_a gamma_a/sqrt(2) rep(child_a)."""
    child = cofactor(mat, j, outcome)
    gamma = _amplitude_in(canonicalize(mat), _support_rep(child))
    return child, gamma


def orthogonalize(s: StabilizerSum) -> StabilizerSum:
    """Rewrite the sum over pairwise-similar (hence pairwise-orthogonal)
    canonical matrices, preserving the dense vector exactly.

    Repeatedly sweeps the qubits; whenever two terms disagree on a
    column's literals, every term with X/Y in that column is split into
    its two signed-Z cofactors weighted by gamma/sqrt(2).  Each split
    lowers a term's X/Y row count, so the sweep reaches a fixpoint of
    pairwise-similar matrices.
    """
    terms = list(s.terms)
    while True:
        for j in range(s.n):
            profiles = {_column_letters(m, j) for _, m in terms}
            if len(profiles) <= 1:
                continue
            out = StabilizerSum(s.n)
            for coeff, mat in terms:
                bit = mat.column_bit(j)
                if any(x & bit for x in mat.xs):
                    for a in (0, 1):
                        child, gamma = _decompose(mat, j, a)
                        out.insert(coeff * gamma.to_cyc() * _INV_SQRT2, child)
                else:
                    out.insert(coeff, mat)
            terms = list(out.terms)
        keys = {m.letters_key() for _, m in terms}
        if len(keys) <= 1:
            break
    result = StabilizerSum(s.n)
    for coeff, mat in terms:
        result.insert(coeff, mat)
    return result


def gramian_dependent(states: list[StabilizerMatrix]) -> bool:
    """Exact singularity test of the pairwise inner-product matrix."""
    k = len(states)
    if k == 0:
        return False
    gram = [[inner_product_complex(states[j], states[i]).to_cyc()
             for i in range(k)] for j in range(k)]
    return _determinant(gram).is_zero()


def _determinant(matrix: list[list[CycQ8]]) -> CycQ8:
    """Gaussian elimination over Q(w); exact field arithmetic."""
    k = len(matrix)
    m = [row.copy() for row in matrix]
    det = CycQ8.one()
    for col in range(k):
        pivot = next((r for r in range(col, k) if not m[r][col].is_zero()), None)
        if pivot is None:
            return CycQ8.zero()
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, k):
            if m[r][col].is_zero():
                continue
            factor = m[r][col] * inv
            for c in range(col, k):
                m[r][c] = m[r][c] - factor * m[col][c]
    return det
