"""Independent dense oracles for the test suite.

Everything here works on explicit 2^n-dimensional vectors and matrices
over the exact cyclotomic field, built from first principles (Kronecker
products of 2x2 matrices, eigenprojectors, Schroedinger-picture gate
action on state vectors).  None of it calls the tableau algorithms it
is used to check.
"""

from __future__ import annotations

from fractions import Fraction

from stabgeo.exact import CycQ8

ZERO = CycQ8.zero()
ONE = CycQ8.one()
I_ = CycQ8.i()
HALF = Fraction(1, 2)
INV_SQRT2 = CycQ8.sqrt2() * HALF

PAULI_2X2 = {
    "I": [[ONE, ZERO], [ZERO, ONE]],
    "X": [[ZERO, ONE], [ONE, ZERO]],
    "Y": [[ZERO, -I_], [I_, ZERO]],
    "Z": [[ONE, ZERO], [ZERO, -ONE]],
}

GATE_SMALL = {
    "H": [[INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]],
    "P": [[ONE, ZERO], [ZERO, I_]],
    "X": PAULI_2X2["X"],
    "Y": PAULI_2X2["Y"],
    "Z": PAULI_2X2["Z"],
    # 4x4 blocks in (control, target) order
    "CNOT": [
        [ONE, ZERO, ZERO, ZERO],
        [ZERO, ONE, ZERO, ZERO],
        [ZERO, ZERO, ZERO, ONE],
        [ZERO, ZERO, ONE, ZERO],
    ],
    "CZ": [
        [ONE, ZERO, ZERO, ZERO],
        [ZERO, ONE, ZERO, ZERO],
        [ZERO, ZERO, ONE, ZERO],
        [ZERO, ZERO, ZERO, -ONE],
    ],
    "CY": [
        [ONE, ZERO, ZERO, ZERO],
        [ZERO, ONE, ZERO, ZERO],
        [ZERO, ZERO, ZERO, -I_],
        [ZERO, ZERO, I_, ZERO],
    ],
}


def kron(a, b):
    ra, ca = len(a), len(a[0])
    rb, cb = len(b), len(b[0])
    out = [[ZERO] * (ca * cb) for _ in range(ra * rb)]
    for i in range(ra):
        for j in range(ca):
            if a[i][j].is_zero():
                continue
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l]
    return out


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[ZERO] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            if a[i][k].is_zero():
                continue
            for j in range(cols):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def mat_vec(a, v):
    out = [ZERO] * len(a)
    for i, row in enumerate(a):
        acc = ZERO
        for x, y in zip(row, v):
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        out[i] = acc
    return out


def identity_mat(dim):
    return [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]


def pauli_dense(letters: str, phase_exp: int = 0):
    """i^phase * kron of the single-qubit matrices; the literal-level
    definition, independent of bitmask arithmetic."""
    out = [[CycQ8.omega_power(2 * phase_exp)]]
    for ch in letters:
        out = kron(out, PAULI_2X2[ch])
    return out


def gate_dense(gate, n: int):
    """Embed a gate's small matrix on its qubits inside 2^n dimensions."""
    small = GATE_SMALL[gate.kind]
    qubits = list(gate.qubits())
    k = len(qubits)
    dim = 1 << n
    out = [[ZERO] * dim for _ in range(dim)]
    shifts = [n - 1 - q for q in qubits]
    for col in range(dim):
        scol = 0
        for s in shifts:
            scol = (scol << 1) | ((col >> s) & 1)
        for srow in range(1 << k):
            amp = small[srow][scol]
            if amp.is_zero():
                continue
            row = col
            for t, s in enumerate(shifts):
                bit = (srow >> (k - 1 - t)) & 1
                row = (row & ~(1 << s)) | (bit << s)
            out[row][col] = out[row][col] + amp
    return out


def apply_gate_vec(vec, gate, n: int):
    """Schroedinger-picture gate action on a dense vector."""
    kind = gate.kind
    tbit = 1 << (n - 1 - gate.target)
    out = list(vec)
    if kind == "H":
        for b in range(len(vec)):
            if b & tbit:
                continue
            lo, hi = vec[b], vec[b | tbit]
            out[b] = (lo + hi) * INV_SQRT2
            out[b | tbit] = (lo - hi) * INV_SQRT2
        return out
    if kind == "P":
        for b in range(len(vec)):
            if b & tbit:
                out[b] = vec[b] * I_
        return out
    if kind == "X":
        for b in range(len(vec)):
            out[b ^ tbit] = vec[b]
        return out
    if kind == "Y":
        for b in range(len(vec)):
            out[b ^ tbit] = vec[b] * (-I_ if b & tbit else I_)
        return out
    if kind == "Z":
        for b in range(len(vec)):
            if b & tbit:
                out[b] = -vec[b]
        return out
    cbit = 1 << (n - 1 - gate.control)
    if kind == "CNOT":
        for b in range(len(vec)):
            out[(b ^ tbit) if b & cbit else b] = vec[b]
        return out
    if kind == "CZ":
        for b in range(len(vec)):
            if b & cbit and b & tbit:
                out[b] = -vec[b]
        return out
    if kind == "CY":
        for b in range(len(vec)):
            if b & cbit:
                out[b ^ tbit] = vec[b] * (-I_ if b & tbit else I_)
            else:
                out[b] = vec[b]
        return out
    raise ValueError(kind)


def apply_circuit_vec(vec, circuit, n: int):
    for gate in circuit:
        vec = apply_gate_vec(vec, gate, n)
    return vec


def stabilized_vector(matrix):
    """Solve the eigenproblem: the product of projectors (I + g_i)/2
    over the generator rows, then the first non-zero column normalized
    to leading amplitude 1.  Pure matrices only."""
    n = matrix.n
    dim = 1 << n
    proj = identity_mat(dim)
    for row in matrix.rows:
        g = pauli_dense(row.letters, row.phase_exp)
        term = [[(identity_mat(dim)[i][j] + g[i][j]) * HALF for j in range(dim)]
                for i in range(dim)]
        proj = mat_mul(proj, term)
    for col in range(dim):
        column = [proj[r][col] for r in range(dim)]
        if any(not v.is_zero() for v in column):
            lead = next(v for v in column if not v.is_zero())
            inv = lead.inverse()
            return [v * inv for v in column]
    raise AssertionError("projector vanished: not a stabilizer group")


def density_from_matrix(matrix):
    """rho = (sum over all group elements)/2^n, valid for mixed ranks."""
    n = matrix.n
    dim = 1 << n
    rows = matrix.rows
    acc = [[ZERO] * dim for _ in range(dim)]
    for subset in range(1 << len(rows)):
        g = identity_mat(dim)
        for t, row in enumerate(rows):
            if subset & (1 << t):
                g = mat_mul(g, pauli_dense(row.letters, row.phase_exp))
        for i in range(dim):
            for j in range(dim):
                acc[i][j] = acc[i][j] + g[i][j]
    scale = Fraction(1, dim)
    return [[acc[i][j] * scale for j in range(dim)] for i in range(dim)]


def density_partial_trace(rho, qubit: int, n: int):
    """Trace out one qubit of a 2^n-dimensional density matrix."""
    bit = 1 << (n - 1 - qubit)
    low = bit - 1
    dim = 1 << (n - 1)
    out = [[ZERO] * dim for _ in range(dim)]
    for i in range(dim):
        ii = ((i & ~low) << 1) | (i & low)
        for j in range(dim):
            jj = ((j & ~low) << 1) | (j & low)
            out[i][j] = rho[ii][jj] + rho[ii | bit][jj | bit]
    return out


def vec_inner(u, v):
    """<u|v> with conjugation on the left."""
    acc = ZERO
    for a, b in zip(u, v):
        if not a.is_zero() and not b.is_zero():
            acc = acc + a.conjugate() * b
    return acc


def vec_equal(u, v):
    return all((a - b).is_zero() for a, b in zip(u, v))


def vec_proportional(u, v):
    """True iff u = c v for some non-zero scalar c (both non-zero)."""
    if all(a.is_zero() for a in u) or all(b.is_zero() for b in v):
        return False
    for a, b in zip(u, v):
        if a.is_zero() != b.is_zero():
            return False
    lead = next(i for i, a in enumerate(u) if not a.is_zero())
    c = v[lead] * u[lead].inverse()
    return all((a * c - b).is_zero() for a, b in zip(u, v))


def normalize_lead(vec):
    lead = next((v for v in vec if not v.is_zero()), None)
    if lead is None:
        return list(vec)
    inv = lead.inverse()
    return [v * inv for v in vec]
