"""Clifford-gate conjugation, measurement, and exact global phases.

Gates are conjugated column-locally onto the generator rows, so each
gate costs Theta(rows) word operations.  The controlled-Z and
controlled-Y updates are table-driven; the 16-entry tables are built
once at import time by conjugating every two-qubit literal pair through
the gates' decompositions into H/P/CNOT/Pauli gates.

Global phases: a stabilizer matrix only fixes a state up to phase, so
the library fixes the representative whose first non-zero basis
amplitude is positive real.  ``apply_circuit_with_phase`` tracks the
power of w = exp(i*pi/4) by which the true circuit output differs from
the representative of the conjugated matrix, by sampling one basis
amplitude before and after each gate (two for a Hadamard, whose image
of a single sampled term can interfere to zero).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DimensionError, MalformedMatrixError, ParseError
from .exact import ExactScalar
from .pauli import PauliOp, apply_to_basis
from .tableau import (
    StabilizerMatrix,
    _amplitude_in,
    _support_rep,
    canonicalize,
    x_row_count,
)

SINGLE_QUBIT_KINDS = ("H", "P", "X", "Y", "Z")
CONTROLLED_KINDS = ("CNOT", "CZ", "CY")
GATE_KINDS = SINGLE_QUBIT_KINDS + CONTROLLED_KINDS


@dataclass(frozen=True)
class Gate:
    """One stabilizer gate; ``control`` is present iff the kind is controlled.

    Qubit indices are 0-based here; the file format is 1-based.
    """

    kind: str
    target: int
    control: Optional[int] = None

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind in CONTROLLED_KINDS:
            if self.control is None:
                raise ValueError(f"{self.kind} needs a control qubit")
            if self.control == self.target:
                raise ValueError("control and target must differ")
        elif self.control is not None:
            raise ValueError(f"{self.kind} takes no control qubit")

    def qubits(self) -> tuple[int, ...]:
        if self.control is None:
            return (self.target,)
        return (self.control, self.target)

    def __str__(self) -> str:
        if self.control is None:
            return f"{self.kind} {self.target + 1}"
        return f"{self.kind} {self.control + 1} {self.target + 1}"


@dataclass(frozen=True)
class CliffordCircuit:
    """An ordered gate list over a fixed qubit count."""

    n: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if any(q < 0 or q >= self.n for q in g.qubits()):
                raise ValueError(f"gate {g} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __str__(self) -> str:
        return emit_circuit(self)


@dataclass(frozen=True)
class GlobalPhase:
    """A unit scalar w^omega_exp with w = exp(i*pi/4)."""

    omega_exp: int

    def __post_init__(self):
        object.__setattr__(self, "omega_exp", self.omega_exp % 8)

    def __mul__(self, other: "GlobalPhase") -> "GlobalPhase":
        return GlobalPhase(self.omega_exp + other.omega_exp)

    def scalar(self) -> ExactScalar:
        return ExactScalar.of(self.omega_exp)

    def __str__(self) -> str:
        return f"w^{self.omega_exp}"


# -- conjugation of a single Pauli by primitive gates ------------------


def _conj_pauli_primitive(p: PauliOp, g: Gate) -> PauliOp:
    """U p U^dag for the non-table gates; used directly and to build
    the CZ/CY literal tables from their decompositions."""
    n = p.n
    tbit = 1 << (n - 1 - g.target)
    x, z, phase = p.x, p.z, p.phase_exp
    kind = g.kind
    if kind == "H":
        if bool(x & tbit) and bool(z & tbit):
            phase = (phase + 2) % 4
        elif (x ^ z) & tbit:
            x ^= tbit
            z ^= tbit
    elif kind == "P":
        if x & tbit:
            if z & tbit:
                phase = (phase + 2) % 4
            z ^= tbit
    elif kind == "X":
        if z & tbit:
            phase = (phase + 2) % 4
    elif kind == "Y":
        if bool(x & tbit) != bool(z & tbit):
            phase = (phase + 2) % 4
    elif kind == "Z":
        if x & tbit:
            phase = (phase + 2) % 4
    elif kind == "CNOT":
        cbit = 1 << (n - 1 - g.control)
        if (x & cbit) and (z & tbit) and bool(x & tbit) == bool(z & cbit):
            phase = (phase + 2) % 4
        if x & cbit:
            x ^= tbit
        if z & tbit:
            z ^= cbit
    else:
        raise ValueError(f"{kind} is not a primitive gate")
    return PauliOp(n, x, z, phase)


def _two_qubit_table(decomposition: Sequence[Gate]) -> dict:
    """Literal-transformation table for a 2-qubit gate given as a
    primitive-gate sequence on qubits (control=0, target=1)."""
    table = {}
    for code_a in range(4):
        for code_b in range(4):
            x = ((code_a >> 1) << 1) | (code_b >> 1)
            z = ((code_a & 1) << 1) | (code_b & 1)
            p = PauliOp(2, x, z, 0)
            for g in decomposition:
                p = _conj_pauli_primitive(p, g)
            new_a = (((p.x >> 1) & 1) << 1) | ((p.z >> 1) & 1)
            new_b = ((p.x & 1) << 1) | (p.z & 1)
            table[(code_a, code_b)] = (new_a, new_b, p.phase_exp)
    return table


# CZ: apply H(t), CNOT(c,t), H(t).
# CY as the operator product Y P CNOT P^3 Y acts rightmost factor first:
# apply Y(t), P(t)^3, CNOT(c,t), P(t), Y(t).
_CZ_DECOMP = (Gate("H", 1), Gate("CNOT", 1, control=0), Gate("H", 1))
_CY_DECOMP = (Gate("Y", 1), Gate("P", 1), Gate("P", 1), Gate("P", 1),
              Gate("CNOT", 1, control=0), Gate("P", 1), Gate("Y", 1))
_CZ_TABLE = _two_qubit_table(_CZ_DECOMP)
_CY_TABLE = _two_qubit_table(_CY_DECOMP)


def conjugate_pauli(p: PauliOp, g: Gate) -> PauliOp:
    """U p U^dag for any supported gate."""
    if g.kind in _TABLE_OF_KIND:
        table = _TABLE_OF_KIND[g.kind]
        n = p.n
        cbit = 1 << (n - 1 - g.control)
        tbit = 1 << (n - 1 - g.target)
        code_a = (2 if p.x & cbit else 0) | (1 if p.z & cbit else 0)
        code_b = (2 if p.x & tbit else 0) | (1 if p.z & tbit else 0)
        new_a, new_b, dphase = table[(code_a, code_b)]
        x = p.x & ~(cbit | tbit)
        z = p.z & ~(cbit | tbit)
        if new_a & 2:
            x |= cbit
        if new_a & 1:
            z |= cbit
        if new_b & 2:
            x |= tbit
        if new_b & 1:
            z |= tbit
        return PauliOp(n, x, z, (p.phase_exp + dphase) % 4)
    return _conj_pauli_primitive(p, g)


_TABLE_OF_KIND = {"CZ": _CZ_TABLE, "CY": _CY_TABLE}


# -- conjugation of whole matrices -------------------------------------


def _conj_inplace(m: StabilizerMatrix, g: Gate):
    n = m.n
    xs, zs, phases = m.xs, m.zs, m.phases
    tbit = 1 << (n - 1 - g.target)
    kind = g.kind
    if kind == "H":
        for i in range(len(xs)):
            xb = xs[i] & tbit
            zb = zs[i] & tbit
            if xb and zb:
                phases[i] = (phases[i] + 2) % 4
            elif xb or zb:
                xs[i] ^= tbit
                zs[i] ^= tbit
    elif kind == "P":
        for i in range(len(xs)):
            if xs[i] & tbit:
                if zs[i] & tbit:
                    phases[i] = (phases[i] + 2) % 4
                zs[i] ^= tbit
    elif kind == "X":
        for i in range(len(xs)):
            if zs[i] & tbit:
                phases[i] = (phases[i] + 2) % 4
    elif kind == "Y":
        for i in range(len(xs)):
            if bool(xs[i] & tbit) != bool(zs[i] & tbit):
                phases[i] = (phases[i] + 2) % 4
    elif kind == "Z":
        for i in range(len(xs)):
            if xs[i] & tbit:
                phases[i] = (phases[i] + 2) % 4
    elif kind == "CNOT":
        cbit = 1 << (n - 1 - g.control)
        for i in range(len(xs)):
            x, z = xs[i], zs[i]
            if (x & cbit) and (z & tbit) and bool(x & tbit) == bool(z & cbit):
                phases[i] = (phases[i] + 2) % 4
            if x & cbit:
                xs[i] = x ^ tbit
            if z & tbit:
                zs[i] = z ^ cbit
    else:
        table = _TABLE_OF_KIND[kind]
        cbit = 1 << (n - 1 - g.control)
        for i in range(len(xs)):
            x, z = xs[i], zs[i]
            code_a = (2 if x & cbit else 0) | (1 if z & cbit else 0)
            code_b = (2 if x & tbit else 0) | (1 if z & tbit else 0)
            if code_a == 0 and code_b == 0:
                continue
            new_a, new_b, dphase = table[(code_a, code_b)]
            x &= ~(cbit | tbit)
            z &= ~(cbit | tbit)
            if new_a & 2:
                x |= cbit
            if new_a & 1:
                z |= cbit
            if new_b & 2:
                x |= tbit
            if new_b & 1:
                z |= tbit
            xs[i], zs[i] = x, z
            if dphase:
                phases[i] = (phases[i] + dphase) % 4


def _check_gate(m: StabilizerMatrix, g: Gate):
    for q in g.qubits():
        if not 0 <= q < m.n:
            raise IndexError(f"gate {g} out of range for n={m.n}")


def conjugate_gate(m: StabilizerMatrix, g: Gate) -> StabilizerMatrix:
    """Replace each row g_i by U g_i U^dag; the result represents U|psi>."""
    _check_gate(m, g)
    out = m.copy()
    _conj_inplace(out, g)
    return out


def conjugate_circuit(m: StabilizerMatrix, circuit: CliffordCircuit
                      ) -> StabilizerMatrix:
    """Fold conjugate_gate over the circuit's gates in order."""
    if circuit.n != m.n:
        raise DimensionError("circuit and matrix qubit counts differ")
    out = m.copy()
    for g in circuit:
        _conj_inplace(out, g)
    return out


def inverse_circuit(circuit: CliffordCircuit) -> CliffordCircuit:
    """Exact inverse: reverse the gate order and replace P with PPP.

    H, CNOT, CZ and the Pauli gates are self-inverse.  CY is inverted
    through its decomposition into Pauli/Phase/CNOT gates (the reduced
    result equals CY itself, since Y is Hermitian).
    """
    gates: list[Gate] = []
    for g in reversed(circuit.gates):
        if g.kind == "P":
            gates.extend([g, g, g])
        elif g.kind == "CY":
            c, t = g.control, g.target
            gates.extend([
                Gate("Y", t), Gate("P", t), Gate("P", t), Gate("P", t),
                Gate("CNOT", t, control=c), Gate("P", t), Gate("Y", t),
            ])
        else:
            gates.append(g)
    return CliffordCircuit(circuit.n, tuple(gates))


# -- measurement -------------------------------------------------------


def measure(m: StabilizerMatrix, qubit: int, rng: random.Random
            ) -> tuple[int, StabilizerMatrix]:
    """Measure one qubit in the computational basis.

    The outcome is random (fair coin from ``rng``) iff the qubit's
    column contains an X/Y literal; the posterior matrix replaces one
    anticommuting row by the signed Z row after repairing the others.
    Deterministic outcomes are read off the isolated Z row of the
    canonical form and leave the state unchanged.
    """
    if not m.is_pure:
        raise MalformedMatrixError("measurement requires a pure matrix")
    bit = m.column_bit(qubit)
    work = m.copy()
    xrows = [t for t in range(work.num_rows) if work.xs[t] & bit]
    if xrows:
        outcome = rng.randrange(2)
        p = xrows[0]
        for t in xrows[1:]:
            work._row_mult(t, p)
        work.xs[p] = 0
        work.zs[p] = bit
        work.phases[p] = 2 if outcome else 0
        work._canonicalize_inplace()
        return outcome, work
    canon = canonicalize(work)
    for t in range(canon.num_rows):
        if canon.xs[t] == 0 and canon.zs[t] == bit:
            return canon.phases[t] // 2, canon
    raise MalformedMatrixError(
        "no isolated Z row for a deterministic measurement")


# -- global phase tracking ---------------------------------------------


def _gate_on_basis(g: Gate, index: int, n: int) -> tuple[int, int]:
    """Apply a non-Hadamard gate to |index>; returns (index', i-power)."""
    tbit = 1 << (n - 1 - g.target)
    kind = g.kind
    if kind == "P":
        return index, 1 if index & tbit else 0
    if kind == "X":
        return index ^ tbit, 0
    if kind == "Y":
        return index ^ tbit, 3 if index & tbit else 1
    if kind == "Z":
        return index, 2 if index & tbit else 0
    cbit = 1 << (n - 1 - g.control)
    if kind == "CNOT":
        return (index ^ tbit, 0) if index & cbit else (index, 0)
    if kind == "CZ":
        return index, 2 if (index & cbit and index & tbit) else 0
    if kind == "CY":
        if index & cbit:
            return index ^ tbit, 3 if index & tbit else 1
        return index, 0
    raise ValueError(f"no basis action for {kind}")


def _unit_sum(p_exp: int, q_exp: int) -> Optional[tuple[int, int]]:
    """w^p + w^q for even exponents, as (omega_exp, log2_scale) or None
    for an exact zero.  log2_scale counts powers of sqrt(2)."""
    d = (q_exp - p_exp) % 8
    if d == 0:
        return p_exp % 8, 2          # 1 + 1   = 2
    if d == 2:
        return (p_exp + 1) % 8, 1    # 1 + i   = sqrt(2) w
    if d == 6:
        return (p_exp + 7) % 8, 1    # 1 - i   = sqrt(2) w^7
    if d == 4:
        return None                  # 1 - 1   = 0
    raise ValueError("amplitude sum with odd phase difference")


def _phase_exponent(before: StabilizerMatrix, after: StabilizerMatrix,
                    g: Gate) -> int:
    """The power t of w with U rep(before) = w^t rep(after)."""
    canon_b = canonicalize(before)
    canon_a = canonicalize(after)
    r_b = x_row_count(canon_b)
    r_a = x_row_count(canon_a)
    b0 = _support_rep(canon_b)
    if g.kind != "H":
        # basis states map to single basis states: one sample suffices
        b1, ipow = _gate_on_basis(g, b0, before.n)
        num_omega, num_scale = (2 * ipow) % 8, 0
    else:
        tbit = 1 << (before.n - 1 - g.target)
        lo, hi = b0 & ~tbit, b0 | tbit
        a_lo = _amplitude_in(canon_b, lo)
        a_hi = _amplitude_in(canon_b, hi)
        # output amplitudes (a_lo + a_hi)/sqrt2 at lo, (a_lo - a_hi)/sqrt2 at hi
        candidates = []
        if a_lo.zero:
            candidates = [(lo, a_hi.omega_exp), (hi, (a_hi.omega_exp + 4) % 8)]
        elif a_hi.zero:
            candidates = [(lo, a_lo.omega_exp), (hi, a_lo.omega_exp)]
        else:
            s = _unit_sum(a_lo.omega_exp, a_hi.omega_exp)
            if s is not None:
                candidates = [(lo, s)]
            s = _unit_sum(a_lo.omega_exp, (a_hi.omega_exp + 4) % 8)
            if s is not None:
                candidates.append((hi, s))
        b1, val = candidates[0]
        num_omega, num_scale = (val[0], val[1]) if isinstance(val, tuple) else (val, 0)
        num_scale -= 1  # the 1/sqrt(2) of the Hadamard
    beta = _amplitude_in(canon_a, b1)
    if beta.zero:
        raise MalformedMatrixError(
            "conjugated matrix assigns zero amplitude to the sampled index")
    # theta = (alpha' / beta) * 2^((r_a - r_b)/2): the representatives
    # carry 1/sqrt(support) normalizations that must cancel exactly
    omega = (num_omega - beta.omega_exp) % 8
    scale = num_scale + r_a - r_b
    if scale != 0:
        raise MalformedMatrixError("global phase is not a unit scalar")
    return omega


def global_phase_of_gate(m: StabilizerMatrix, g: Gate) -> GlobalPhase:
    """Phase factor alpha'/beta relating the true gate output to the
    conjugated matrix's representative state."""
    _check_gate(m, g)
    after = conjugate_gate(m, g)
    return GlobalPhase(_phase_exponent(m, after, g))


def apply_circuit_with_phase(m: StabilizerMatrix, circuit: CliffordCircuit
                             ) -> tuple[StabilizerMatrix, GlobalPhase]:
    """Conjugate by the whole circuit while accumulating the global
    phase, so that circuit(rep(m)) = w^t rep(result) exactly."""
    if circuit.n != m.n:
        raise DimensionError("circuit and matrix qubit counts differ")
    current = m.copy()
    t = 0
    for g in circuit:
        _check_gate(current, g)
        after = conjugate_gate(current, g)
        t = (t + _phase_exponent(current, after, g)) % 8
        current = after
    return current, GlobalPhase(t)


# -- text format -------------------------------------------------------


def parse_circuit(text: str, n: Optional[int] = None) -> CliffordCircuit:
    """One gate per line (``H 2``, ``CNOT 1 3``, ...), 1-based qubits,
    ``#`` comments.  The qubit count is inferred unless given."""
    gates = []
    max_q = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0].upper()
        if kind not in GATE_KINDS:
            raise ParseError(f"unknown gate {parts[0]!r}", line=lineno)
        want = 2 if kind in CONTROLLED_KINDS else 1
        if len(parts) != want + 1:
            raise ParseError(
                f"{kind} takes {want} qubit argument(s)", line=lineno)
        try:
            qubits = [int(tok) for tok in parts[1:]]
        except ValueError:
            raise ParseError(f"bad qubit index in {line!r}", line=lineno) from None
        if any(q < 1 for q in qubits):
            raise ParseError("qubit indices are 1-based", line=lineno)
        max_q = max(max_q, *qubits)
        try:
            if kind in CONTROLLED_KINDS:
                gates.append(Gate(kind, qubits[1] - 1, control=qubits[0] - 1))
            else:
                gates.append(Gate(kind, qubits[0] - 1))
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno) from None
    if n is None:
        n = max_q if max_q else 1
    elif max_q > n:
        raise ParseError(f"gate uses qubit {max_q} but n={n}")
    return CliffordCircuit(n, tuple(gates))


def emit_circuit(circuit: CliffordCircuit) -> str:
    return "\n".join(str(g) for g in circuit.gates)
