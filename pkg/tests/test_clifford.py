"""Gate conjugation, measurement and global phases vs dense simulation."""

import random

import pytest

from stabgeo.clifford import (
    CliffordCircuit,
    Gate,
    GlobalPhase,
    apply_circuit_with_phase,
    conjugate_circuit,
    conjugate_gate,
    conjugate_pauli,
    emit_circuit,
    global_phase_of_gate,
    inverse_circuit,
    measure,
    parse_circuit,
)
from stabgeo.cli import random_circuit, random_state
from stabgeo.errors import ParseError
from stabgeo.exact import CycQ8
from stabgeo.pauli import parse_pauli
from stabgeo.tableau import StabilizerMatrix, canonicalize, parse_matrix, rep_vector

from oracles import (
    apply_circuit_vec,
    apply_gate_vec,
    gate_dense,
    mat_vec,
    stabilized_vector,
    vec_equal,
    vec_proportional,
)


def mat(text):
    return parse_matrix(text)


ALL_GATES_2Q = [
    Gate("H", 0), Gate("H", 1), Gate("P", 0), Gate("P", 1),
    Gate("X", 0), Gate("Y", 1), Gate("Z", 0),
    Gate("CNOT", 1, control=0), Gate("CNOT", 0, control=1),
    Gate("CZ", 1, control=0), Gate("CZ", 0, control=1),
    Gate("CY", 1, control=0), Gate("CY", 0, control=1),
]


def test_conjugate_gate_examples():
    bell = mat("XX\nZZ")
    out = conjugate_gate(bell, Gate("CNOT", 1, control=0))
    assert [str(r) for r in out.rows] == ["XI", "IZ"]
    assert [str(r) for r in conjugate_gate(mat("Z"), Gate("H", 0)).rows] == ["X"]
    assert [str(r) for r in conjugate_gate(mat("Y"), Gate("P", 0)).rows] == ["-X"]


def test_conjugate_pauli_matches_dense_oracle():
    letters = ["II", "XI", "IX", "YZ", "ZY", "XX", "YY", "ZZ", "XY", "ZX"]
    for g in ALL_GATES_2Q:
        u = gate_dense(g, 2)
        for s in letters:
            p = parse_pauli(s)
            q = conjugate_pauli(p, g)
            from oracles import mat_mul, pauli_dense
            lhs = mat_mul(u, pauli_dense(s))
            rhs = mat_mul(pauli_dense(q.letters, q.phase_exp), u)
            assert all((lhs[i][j] - rhs[i][j]).is_zero()
                       for i in range(4) for j in range(4)), (str(g), s)


def test_conjugation_exhaustive_two_qubits():
    """canonical(conjugate(M, g)) equals the matrix of the densely
    transformed state, for all 60 states and the whole gate set."""
    from stabgeo.census import enumerate_states

    for m in enumerate_states(2):
        vec = stabilized_vector(m)
        for g in ALL_GATES_2Q:
            got = conjugate_gate(m, g)
            got._validate()  # commutation and independence preserved
            dense = apply_gate_vec(vec, g, 2)
            assert vec_proportional(stabilized_vector(got), dense)


def test_conjugate_circuit_examples():
    bell_circuit = CliffordCircuit(2, (Gate("H", 0), Gate("CNOT", 1, control=0)))
    out = conjugate_circuit(StabilizerMatrix.zero_state(2), bell_circuit)
    assert canonicalize(out) == canonicalize(mat("XX\nZZ"))
    empty = conjugate_circuit(mat("XX\nZZ"), CliffordCircuit(2))
    assert empty == mat("XX\nZZ")


def test_circuit_then_inverse_restores_state():
    for seed in range(20):
        n = 2 + seed % 3
        circuit = random_circuit(n, 1, f"inv:{seed}")
        start = random_state(n, 1, f"inv-state:{seed}")
        forward = conjugate_circuit(start, circuit)
        back = conjugate_circuit(forward, inverse_circuit(circuit))
        assert canonicalize(back) == canonicalize(start)


def test_inverse_circuit_shapes():
    c = CliffordCircuit(2, (Gate("P", 0),))
    assert [g.kind for g in inverse_circuit(c)] == ["P", "P", "P"]
    c = CliffordCircuit(1, (Gate("H", 0),))
    assert [str(g) for g in inverse_circuit(c)] == ["H 1"]
    c = CliffordCircuit(2, (Gate("H", 0), Gate("CNOT", 1, control=0)))
    assert [str(g) for g in inverse_circuit(c)] == ["CNOT 1 2", "H 1"]


def test_cy_inverse_decomposition_equals_cy():
    cy = Gate("CY", 1, control=0)
    inv = inverse_circuit(CliffordCircuit(2, (cy,)))
    u = gate_dense(cy, 2)
    for col in range(4):
        basis = [CycQ8.one() if i == col else CycQ8.zero() for i in range(4)]
        direct = mat_vec(u, basis)
        via = apply_circuit_vec(basis, inv, 2)
        assert vec_equal(direct, via)


def test_measure_deterministic():
    rng = random.Random(1)
    outcome, post = measure(StabilizerMatrix.zero_state(2), 0, rng)
    assert outcome == 0
    assert post == StabilizerMatrix.zero_state(2)
    one = StabilizerMatrix.basis_state(1, 1)
    assert measure(one, 0, rng)[0] == 1


def test_measure_random_statistics_and_posteriors():
    zeros = 0
    for trial in range(10_000):
        outcome, post = measure(mat("X"), 0, random.Random(trial))
        if outcome == 0:
            zeros += 1
            assert [str(r) for r in post.rows] == ["Z"]
        else:
            assert [str(r) for r in post.rows] == ["-Z"]
    assert 0.47 <= zeros / 10_000 <= 0.53


def test_measure_bell_correlations():
    bell = mat("XX\nZZ")
    for trial in range(100):
        rng = random.Random(trial)
        first, post = measure(bell, 0, rng)
        second, post2 = measure(post, 1, rng)
        assert first == second
        assert post2 == StabilizerMatrix.basis_state(2, 3 * first)


def test_measure_posterior_against_dense_branches():
    """The posterior matrix is the projected-renormalized state."""
    for seed in range(10):
        m = random_state(2, 1, f"meas:{seed}")
        vec = stabilized_vector(m)
        outcome, post = measure(m, 0, random.Random(seed))
        projected = [v if (b >> 1) & 1 == outcome else v * 0
                     for b, v in enumerate(vec)]
        if all(v.is_zero() for v in projected):
            pytest.fail("measurement produced an impossible branch")
        assert vec_proportional(stabilized_vector(post), projected)


def test_global_phase_worked_example():
    # H on the first qubit of |00>+|01>-i|10>-i|11>: factor (1-i)/sqrt2
    m = mat("-YI\nIX")
    assert global_phase_of_gate(m, Gate("H", 0)) == GlobalPhase(7)


def test_global_phase_trivial_and_p_gate():
    plus = mat("XI\nIZ")
    assert global_phase_of_gate(plus, Gate("H", 0)) == GlobalPhase(0)
    one = mat("-Z")
    assert global_phase_of_gate(one, Gate("P", 0)) == GlobalPhase(2)


def test_apply_circuit_with_phase_examples():
    m = mat("-YI\nIX")
    _, phase = apply_circuit_with_phase(m, CliffordCircuit(2, (Gate("H", 0),)))
    assert phase == GlobalPhase(7)
    _, phase = apply_circuit_with_phase(m, CliffordCircuit(2))
    assert phase == GlobalPhase(0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phase_tracking_matches_dense_simulation(n):
    """rep-in -> circuit -> w^t rep-out equals dense simulation exactly."""
    for seed in range(25):
        start = random_state(n, 1, f"phase-state:{n}:{seed}")
        circuit = random_circuit(n, 2, f"phase-circ:{n}:{seed}")
        out, phase = apply_circuit_with_phase(start, circuit)
        dense = apply_circuit_vec(rep_vector(start), circuit, n)
        expect = [phase.scalar().to_cyc() * v for v in rep_vector(out)]
        assert vec_equal(dense, expect)


def test_phase_tracking_with_controlled_gates():
    gates = (Gate("H", 0), Gate("CY", 2, control=0), Gate("CZ", 1, control=2),
             Gate("P", 2), Gate("H", 1), Gate("CNOT", 0, control=1))
    circuit = CliffordCircuit(3, gates)
    start = StabilizerMatrix.zero_state(3)
    out, phase = apply_circuit_with_phase(start, circuit)
    dense = apply_circuit_vec(rep_vector(start), circuit, 3)
    expect = [phase.scalar().to_cyc() * v for v in rep_vector(out)]
    assert vec_equal(dense, expect)


def test_circuit_text_round_trip():
    text = "H 1\nCNOT 1 2\nCZ 2 3\nCY 3 1\nP 2\nX 3\nY 1\nZ 2"
    circuit = parse_circuit(text)
    assert circuit.n == 3
    assert emit_circuit(circuit) == text
    assert parse_circuit(emit_circuit(circuit)).gates == circuit.gates
    with pytest.raises(ParseError):
        parse_circuit("H 0")  # 1-based
    with pytest.raises(ParseError):
        parse_circuit("CNOT 1")
    with pytest.raises(ParseError):
        parse_circuit("FOO 1")
    with pytest.raises(ParseError):
        parse_circuit("CNOT 2 2")


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate("CNOT", 1)
    with pytest.raises(ValueError):
        Gate("H", 1, control=0)
    with pytest.raises(ValueError):
        Gate("CZ", 1, control=1)
