"""Synthesis of basis-normalization circuits.

``basis_norm_circuit`` reduces a pure stabilizer matrix to basis form
(diagonal Z rows whose signs spell a computational-basis state) using
column conjugations grouped into the five-block template
H-CNOT-CZ-P-H.  Row operations never change the state; the column
operations do, and collected in order they form a circuit C with
C|psi> = |b>.  The CZ block dominates the gate count at O(n^2); with
Theta(n) work per gate the synthesis runs in O(n^3).
"""

from __future__ import annotations

from .clifford import CliffordCircuit, Gate, _conj_inplace
from .errors import MalformedMatrixError
from .tableau import StabilizerMatrix, canonicalize, is_basis_form

# template block order: the second H block is distinct from the first
_BLOCK_INDEX = {"H": (0, 4), "CNOT": (1,), "CZ": (2,), "P": (3,)}


def basis_norm_circuit(m: StabilizerMatrix
                       ) -> tuple[CliffordCircuit, int, StabilizerMatrix]:
    """Synthesize C with C|psi> = |b>; returns (C, b, basis-form matrix).

    Steps: canonicalize; swap rows so every diagonal literal is non-I,
    conjugating by H wherever a diagonal Z heads an entangled row; clear
    X/Y literals right of the diagonal with CNOTs; clear the remaining
    Z literals there with CZs; clean diagonal Y literals with P; map the
    diagonal X literals to Z with the final H block.  The basis index is
    read from the signs of the finished matrix.
    """
    if not m.is_pure:
        raise MalformedMatrixError("synthesis requires a pure matrix")
    n = m.n
    work = canonicalize(m)
    gates: list[Gate] = []

    def conj(gate: Gate):
        _conj_inplace(work, gate)
        gates.append(gate)

    # H block: diagonalize by row transpositions, then fix entangled
    # diagonal Z literals with Hadamards
    order = _diagonal_matching(work)
    occupant = list(range(n))   # original row sitting at each position
    where = list(range(n))      # current position of each original row
    for j in range(n):
        r = order[j]
        at = where[r]
        if at != j:
            work._swap(j, at)
            other = occupant[j]
            occupant[j], occupant[at] = r, other
            where[r], where[other] = j, at
    for j in range(n):
        bit = work.column_bit(j)
        if work.zs[j] & bit and not work.xs[j] & bit:
            tail = bit - 1  # columns j+1..n-1
            if (work.xs[j] | work.zs[j]) & tail:
                conj(Gate("H", j))
    # CNOT block: clear X/Y literals right of the diagonal
    for j in range(n):
        for k in range(j + 1, n):
            if work.xs[j] & work.column_bit(k):
                conj(Gate("CNOT", k, control=j))
    # CZ block: clear Z literals right of the diagonal
    for j in range(n):
        for k in range(j + 1, n):
            kbit = work.column_bit(k)
            if work.zs[j] & kbit and not work.xs[j] & kbit:
                conj(Gate("CZ", k, control=j))
    # P block: diagonal Y -> X
    for j in range(n):
        bit = work.column_bit(j)
        if work.xs[j] & bit and work.zs[j] & bit:
            conj(Gate("P", j))
    # final H block: diagonal X -> Z
    for j in range(n):
        bit = work.column_bit(j)
        if work.xs[j] & bit and not work.zs[j] & bit:
            conj(Gate("H", j))

    # the state is now a basis state; stray below-diagonal Z literals are
    # cleaned up by row reduction, which costs no gates
    work._canonicalize_inplace()
    index = is_basis_form(work)
    if index is None:
        raise MalformedMatrixError(
            "synthesis did not reach basis form; the input matrix is corrupt")
    return CliffordCircuit(n, tuple(gates)), index, work


def _diagonal_matching(work: StabilizerMatrix) -> list[int]:
    """Assign one row to each column so every diagonal literal is non-I.

    Prefers the greedy choice per column (first row with X/Y there, else
    the last row with Z); when a later column would be starved, an
    augmenting pass reshuffles earlier assignments.  A full assignment
    always exists: k independent commuting rows cannot act on fewer than
    k qubits, so Hall's condition holds.
    """
    n = work.n

    def candidates(j: int) -> list[int]:
        bit = work.column_bit(j)
        xy = [r for r in range(n) if work.xs[r] & bit]
        z = [r for r in range(n)
             if work.zs[r] & bit and not work.xs[r] & bit]
        return xy + z[::-1]

    row_to_col: list = [None] * n
    col_to_row: list = [None] * n

    def augment(j: int, seen: set) -> bool:
        cands = candidates(j)
        for pass_matched in (False, True):
            for r in cands:
                if r in seen or (row_to_col[r] is not None) != pass_matched:
                    continue
                seen.add(r)
                if row_to_col[r] is None or augment(row_to_col[r], seen):
                    row_to_col[r] = j
                    col_to_row[j] = r
                    return True
        return False

    for j in range(n):
        if not augment(j, set()):
            raise MalformedMatrixError(
                f"no generator supports qubit {j}: matrix is not pure")
    return col_to_row


def verify_template(circuit: CliffordCircuit) -> bool:
    """True iff the gate kinds follow the H-CNOT-CZ-P-H block order,
    with the trailing H block distinguished from the leading one."""
    state = 0
    for g in circuit:
        blocks = _BLOCK_INDEX.get(g.kind)
        if blocks is None:
            return False
        nxt = next((b for b in blocks if b >= state), None)
        if nxt is None:
            return False
        state = nxt
    return True
