"""Stabilizer matrices: canonical form, amplitudes, cofactors, traces.

A stabilizer matrix is a list of sign-carrying Pauli rows generating an
abelian group that fixes a state.  Pure states have n rows; mixed states
(from partial traces) have fewer.  Internally the rows live in three
parallel lists of integers (x bitmask, z bitmask, phase exponent), so a
row product is a pair of XORs plus a popcount scan.

The canonical form is the row-reduced echelon arrangement: a minimal
block of rows carrying X/Y literals on top (leading X/Y literal of each
row strictly to the right of the one above), rows of Z literals only in
echelon form below.  It is unique per state and is the workhorse behind
basis-form detection, amplitude extraction and inner products.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import (
    DimensionError,
    MalformedMatrixError,
    NonCanonicalError,
    OracleSizeError,
    ParseError,
    ZeroCofactorError,
)
from .exact import CycQ8, ExactScalar
from .pauli import PauliOp, _product_phase, apply_to_basis, parse_pauli

DEFAULT_ORACLE_BOUND = 10


class StabilizerMatrix:
    """Generator rows for a pure (rank n) or mixed (rank < n) stabilizer state."""

    __slots__ = ("n", "xs", "zs", "phases")

    def __init__(self, n: int, xs: list[int], zs: list[int], phases: list[int],
                 validate: bool = True):
        self.n = n
        self.xs = xs
        self.zs = zs
        self.phases = phases
        if validate:
            self._validate()

    # -- construction ------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[PauliOp], validate: bool = True) -> "StabilizerMatrix":
        rows = list(rows)
        if not rows:
            raise MalformedMatrixError("a stabilizer matrix needs at least one row")
        n = rows[0].n
        for p in rows:
            if p.n != n:
                raise DimensionError("rows act on different qubit counts")
        return cls(n, [p.x for p in rows], [p.z for p in rows],
                   [p.phase_exp for p in rows], validate=validate)

    @classmethod
    def zero_state(cls, n: int) -> "StabilizerMatrix":
        """The all-zeros basis state |0...0>, rows +Z_j."""
        return cls.basis_state(n, 0)

    @classmethod
    def basis_state(cls, n: int, index: int) -> "StabilizerMatrix":
        if not 0 <= index < (1 << n):
            raise IndexError(f"basis index {index} out of range")
        xs, zs, phases = [], [], []
        for q in range(n):
            bit = 1 << (n - 1 - q)
            xs.append(0)
            zs.append(bit)
            phases.append(2 if index & bit else 0)
        return cls(n, xs, zs, phases, validate=False)

    @classmethod
    def ghz_state(cls, n: int) -> "StabilizerMatrix":
        """(|0...0> + |1...1>)/sqrt(2): rows X...X and adjacent ZZ pairs."""
        full = (1 << n) - 1
        xs, zs, phases = [full], [0], [0]
        for q in range(n - 1):
            pair = (1 << (n - 1 - q)) | (1 << (n - 2 - q))
            xs.append(0)
            zs.append(pair)
            phases.append(0)
        return cls(n, xs, zs, phases, validate=False)

    # -- plumbing ----------------------------------------------------

    @property
    def num_rows(self) -> int:
        return len(self.xs)

    @property
    def is_pure(self) -> bool:
        return self.num_rows == self.n

    def row(self, i: int) -> PauliOp:
        return PauliOp(self.n, self.xs[i], self.zs[i], self.phases[i])

    @property
    def rows(self) -> list[PauliOp]:
        return [self.row(i) for i in range(self.num_rows)]

    def copy(self) -> "StabilizerMatrix":
        return StabilizerMatrix(self.n, self.xs.copy(), self.zs.copy(),
                                self.phases.copy(), validate=False)

    def column_bit(self, qubit: int) -> int:
        if not 0 <= qubit < self.n:
            raise IndexError(f"qubit {qubit} out of range for n={self.n}")
        return 1 << (self.n - 1 - qubit)

    def key(self):
        return (self.n, tuple(self.xs), tuple(self.zs), tuple(self.phases))

    def letters_key(self):
        return (self.n, tuple(self.xs), tuple(self.zs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, StabilizerMatrix):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self) -> str:
        return emit_matrix(self)

    def __repr__(self) -> str:
        rows = ", ".join(str(r) for r in self.rows)
        return f"StabilizerMatrix[{rows}]"

    def _validate(self):
        r = self.num_rows
        if r == 0:
            return
        if r > self.n:
            raise MalformedMatrixError(
                f"{r} rows exceed the qubit count {self.n}")
        mask = (1 << self.n) - 1
        for i in range(r):
            if self.xs[i] & ~mask or self.zs[i] & ~mask:
                raise MalformedMatrixError("row mask exceeds qubit count")
            if self.phases[i] % 2:
                raise MalformedMatrixError(
                    f"row {i} carries an odd phase exponent (i or -i)")
        for i in range(r):
            for j in range(i + 1, r):
                anti = ((self.xs[i] & self.zs[j]).bit_count()
                        + (self.zs[i] & self.xs[j]).bit_count()) % 2
                if anti:
                    raise MalformedMatrixError(f"rows {i} and {j} anticommute")
        # independence over GF(2); also excludes -I from the group
        vecs = [(self.xs[i] << self.n) | self.zs[i] for i in range(r)]
        basis: list[int] = []
        for v in vecs:
            for b in basis:
                v = min(v, v ^ b)
            if v == 0:
                raise MalformedMatrixError("rows are dependent over the group")
            basis.append(v)
            basis.sort(reverse=True)

    # -- internal row surgery ---------------------------------------

    def _row_mult(self, m: int, i: int):
        """Replace row m by (row i) * (row m); phases composed mod 4."""
        ph = (self.phases[i] + self.phases[m]
              + _product_phase(self.xs[i], self.zs[i],
                               self.xs[m], self.zs[m])) % 4
        if ph % 2:
            raise MalformedMatrixError(
                "row product has odd phase: input rows anticommute")
        self.xs[m] ^= self.xs[i]
        self.zs[m] ^= self.zs[i]
        self.phases[m] = ph

    def _swap(self, i: int, j: int):
        if i != j:
            self.xs[i], self.xs[j] = self.xs[j], self.xs[i]
            self.zs[i], self.zs[j] = self.zs[j], self.zs[i]
            self.phases[i], self.phases[j] = self.phases[j], self.phases[i]

    def _canonicalize_inplace(self):
        xs, zs = self.xs, self.zs
        r = self.num_rows
        i = 0
        for j in range(self.n):
            mask = 1 << (self.n - 1 - j)
            k = next((t for t in range(i, r) if xs[t] & mask), None)
            if k is None:
                continue
            self._swap(i, k)
            for m in range(r):
                if m != i and xs[m] & mask:
                    self._row_mult(m, i)
            i += 1
        for j in range(self.n):
            mask = 1 << (self.n - 1 - j)
            k = next((t for t in range(i, r) if zs[t] & mask), None)
            if k is None:
                continue
            self._swap(i, k)
            for m in range(r):
                if m != i and zs[m] & mask:
                    self._row_mult(m, i)
            i += 1
        # dependent inputs reduce to identity rows at the bottom
        for t in range(i, r):
            if self.phases[t] % 4 == 2:
                raise MalformedMatrixError("-I lies in the generated group")
        del self.xs[i:], self.zs[i:], self.phases[i:]


# -- public operations ----------------------------------------------


def row_mult(m: StabilizerMatrix, i: int, j: int) -> StabilizerMatrix:
    """Return a copy with row i replaced by (row j) * (row i).

    A pure row operation: the represented state is unchanged.
    """
    if i == j:
        raise ValueError("row indices must differ")
    if not (0 <= i < m.num_rows and 0 <= j < m.num_rows):
        raise IndexError("row index out of range")
    out = m.copy()
    out._row_mult(i, j)
    return out


def canonicalize(m: StabilizerMatrix) -> StabilizerMatrix:
    """Reduce to the unique row-reduced echelon form.

    Two passes of Gauss-Jordan elimination over the rows: the first
    isolates one X/Y literal per pivot column and stacks those rows on
    top, the second does the same for Z literals below.  Dependent
    inputs lose their identity rows, so the result's row count is the
    true rank.  O(n^3) time.
    """
    out = m.copy()
    out._canonicalize_inplace()
    return out


def is_canonical(m: StabilizerMatrix) -> bool:
    return canonicalize(m) == m


def x_row_count(m: StabilizerMatrix) -> int:
    """Number of rows carrying X/Y literals (call on canonical matrices)."""
    return sum(1 for x in m.xs if x)


def is_basis_form(m: StabilizerMatrix) -> Optional[int]:
    """Detect the diagonal-Z pattern; return its basis index, else None.

    Row j must be exactly +/-Z on qubit j; a minus sign puts qubit j in
    |1>.  Only pure matrices qualify.
    """
    if not m.is_pure:
        return None
    index = 0
    for j in range(m.n):
        bit = m.column_bit(j)
        if m.xs[j] != 0 or m.zs[j] != bit:
            return None
        if m.phases[j] == 2:
            index |= bit
    return index


def is_similar(m1: StabilizerMatrix, m2: StabilizerMatrix) -> bool:
    """True iff the canonical matrices carry the same Pauli literals,
    ignoring row signs."""
    if m1.n != m2.n:
        raise DimensionError("matrices act on different qubit counts")
    if not is_canonical(m1) or not is_canonical(m2):
        raise NonCanonicalError("is_similar requires canonical matrices")
    return m1.letters_key() == m2.letters_key()


def _support_rep(canon: StabilizerMatrix) -> int:
    """Smallest basis index with non-zero amplitude (canonical input)."""
    v = 0
    for t in range(canon.num_rows):
        if canon.xs[t]:
            continue
        pivot = 1 << (canon.zs[t].bit_length() - 1)
        # Gauss-Jordan cleared this pivot from every other row, so the
        # sign constraint of row t is settled by the pivot bit alone.
        parity = (canon.zs[t] & v).bit_count() % 2
        if parity != canon.phases[t] // 2:
            v ^= pivot
    for t in range(canon.num_rows):
        if not canon.xs[t]:
            continue
        pivot = 1 << (canon.xs[t].bit_length() - 1)
        if v & pivot:
            v ^= canon.xs[t]
    return v


def _amplitude_in(canon: StabilizerMatrix, index: int) -> ExactScalar:
    """Amplitude of |index> relative to amplitude 1 at the support
    representative (canonical input)."""
    rep = _support_rep(canon)
    d = index ^ rep
    chosen = []
    for t in range(canon.num_rows):
        if not canon.xs[t]:
            continue
        pivot = 1 << (canon.xs[t].bit_length() - 1)
        if d & pivot:
            chosen.append(t)
            d ^= canon.xs[t]
    if d:
        return ExactScalar.zero_value()
    idx, phase = rep, 0
    for t in chosen:
        idx, dp = apply_to_basis(canon.row(t), idx)
        phase = (phase + dp) % 4
    assert idx == index
    return ExactScalar.from_i_power(phase)


def amplitude_at(m: StabilizerMatrix, index: int) -> ExactScalar:
    """Exact amplitude of |index>, normalized so the first non-zero
    amplitude in index order is 1.  Zero when outside the support."""
    if not m.is_pure:
        raise MalformedMatrixError("amplitudes are defined for pure matrices")
    if not 0 <= index < (1 << m.n):
        raise IndexError(f"basis index {index} out of range")
    return _amplitude_in(canonicalize(m), index)


def sample_amplitudes(m: StabilizerMatrix, count: int = 1
                      ) -> list[tuple[int, ExactScalar]]:
    """One (or two) non-zero basis amplitudes solved from the generators.

    The first sample is the lowest-index support element, whose
    amplitude is 1 under the normalization.  With ``count=2`` the second
    sample prefers an imaginary-amplitude support element (one real plus
    one imaginary is what the Hadamard global-phase rule wants) and
    falls back to the next support element otherwise.  A basis state has
    no second sample at all: the single-element list is the flag.
    """
    if count not in (1, 2):
        raise ValueError("count must be 1 or 2")
    if not m.is_pure:
        raise MalformedMatrixError("amplitudes are defined for pure matrices")
    canon = canonicalize(m)
    rep = _support_rep(canon)
    samples = [(rep, ExactScalar.one())]
    if count == 2:
        # iff imaginary amplitudes exist, some single X-block generator
        # already maps the representative to one
        fallback = None
        for t in range(canon.num_rows):
            if not canon.xs[t]:
                continue
            idx, phase = apply_to_basis(canon.row(t), rep)
            if phase % 2:
                samples.append((idx, ExactScalar.from_i_power(phase)))
                break
            if fallback is None:
                fallback = (idx, ExactScalar.from_i_power(phase))
        else:
            if fallback is not None:
                samples.append(fallback)
    return samples


def to_dense(m: StabilizerMatrix, max_qubits: int = DEFAULT_ORACLE_BOUND
             ) -> list[ExactScalar]:
    """Exact amplitude vector of length 2^n, first non-zero amplitude 1.

    The support has size 2^k where k is the number of X/Y rows; dividing
    by sqrt(support) gives the unit vector.  Guarded by ``max_qubits``
    since the output is exponential.
    """
    if m.n > max_qubits:
        raise OracleSizeError(
            f"dense conversion of {m.n} qubits exceeds the bound {max_qubits}")
    if not m.is_pure:
        raise MalformedMatrixError("dense vectors are defined for pure matrices")
    canon = canonicalize(m)
    rep = _support_rep(canon)
    amps = {rep: 0}
    for t in range(canon.num_rows):
        if not canon.xs[t]:
            continue
        row = canon.row(t)
        for idx, ph in list(amps.items()):
            idx2, dp = apply_to_basis(row, idx)
            amps[idx2] = (ph + dp) % 4
    out = [ExactScalar.zero_value()] * (1 << m.n)
    for idx, ph in amps.items():
        out[idx] = ExactScalar.from_i_power(ph)
    return out


def support_size(m: StabilizerMatrix) -> int:
    return 1 << x_row_count(canonicalize(m))


def rep_vector(m: StabilizerMatrix) -> list[CycQ8]:
    """The canonical unit-norm representative vector: the dense
    amplitudes divided by sqrt(support)."""
    canon = canonicalize(m)
    k = x_row_count(canon)
    return [a.to_cyc().mul_half_power(k) if not a.zero else CycQ8.zero()
            for a in to_dense(canon)]


def cofactor(m: StabilizerMatrix, qubit: int, outcome: int) -> StabilizerMatrix:
    """Post-projection matrix after forcing ``qubit`` to ``outcome``.

    Equivalent to applying the (+/-Z) measurement projector: rows that
    anticommute with Z on the qubit are repaired by row products against
    the first of them, which is then replaced by the signed Z row.
    Raises ZeroCofactorError when the projector annihilates the state.
    """
    if outcome not in (0, 1):
        raise ValueError("outcome must be 0 or 1")
    bit = m.column_bit(qubit)
    work = m.copy()
    xrows = [t for t in range(work.num_rows) if work.xs[t] & bit]
    if xrows:
        p = xrows[0]
        for t in xrows[1:]:
            work._row_mult(t, p)
        work.xs[p] = 0
        work.zs[p] = bit
        work.phases[p] = 2 if outcome else 0
        work._canonicalize_inplace()
        return work
    canon = canonicalize(work)
    for t in range(canon.num_rows):
        if canon.xs[t] == 0 and canon.zs[t] == bit:
            if (canon.phases[t] == 2) != (outcome == 1):
                raise ZeroCofactorError(
                    f"qubit {qubit} is fixed to {canon.phases[t] // 2}; "
                    f"the outcome-{outcome} cofactor is zero")
            return canon
    # mixed matrix with an unconstrained qubit: adjoin the Z row
    canon.xs.append(0)
    canon.zs.append(bit)
    canon.phases.append(2 if outcome else 0)
    canon._canonicalize_inplace()
    return canon


def partial_trace(m: StabilizerMatrix, qubit: int) -> StabilizerMatrix:
    """Trace out one qubit; the result may be mixed (fewer rows).

    The column of the traced qubit is first reduced to at most one X/Y
    row and at most one Z row; those rows and the column are removed.
    """
    bit = m.column_bit(qubit)
    work = m.copy()
    removed = set()
    xrows = [t for t in range(work.num_rows) if work.xs[t] & bit]
    if xrows:
        p = xrows[0]
        for t in xrows[1:]:
            work._row_mult(t, p)
        removed.add(p)
    zrows = [t for t in range(work.num_rows)
             if t not in removed and work.zs[t] & bit and not work.xs[t] & bit]
    if zrows:
        q = zrows[0]
        for t in zrows[1:]:
            work._row_mult(t, q)
        removed.add(q)
    pos = m.n - 1 - qubit
    low = (1 << pos) - 1

    def drop_bit(mask: int) -> int:
        return ((mask >> (pos + 1)) << pos) | (mask & low)

    xs, zs, phases = [], [], []
    for t in range(work.num_rows):
        if t in removed:
            continue
        assert not (work.xs[t] | work.zs[t]) & bit
        xs.append(drop_bit(work.xs[t]))
        zs.append(drop_bit(work.zs[t]))
        phases.append(work.phases[t])
    out = StabilizerMatrix(m.n - 1, xs, zs, phases, validate=False)
    out._canonicalize_inplace()
    return out


# -- text format -----------------------------------------------------


def parse_matrix(text: str) -> StabilizerMatrix:
    """Parse one generator row per line; ``#`` comments and blank lines
    are ignored.  Rejects inconsistent widths, odd phases, anticommuting
    or dependent rows, and more rows than qubits."""
    rows: list[PauliOp] = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            p = parse_pauli(line)
        except (ParseError, ValueError) as exc:
            raise ParseError(str(exc), line=lineno) from None
        if p.phase_exp % 2:
            raise ParseError("generator rows must have sign +/-1, not +/-i",
                             line=lineno)
        if width is None:
            width = p.n
        elif p.n != width:
            raise ParseError(
                f"row width {p.n} differs from previous width {width}",
                line=lineno)
        rows.append(p)
    if not rows:
        raise ParseError("no generator rows found")
    try:
        return StabilizerMatrix.from_rows(rows, validate=True)
    except (MalformedMatrixError, DimensionError) as exc:
        raise ParseError(str(exc)) from None


def emit_matrix(m: StabilizerMatrix) -> str:
    return "\n".join(str(r) for r in m.rows)
