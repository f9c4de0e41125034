"""Stabilizer-matrix operations against dense eigenprojector oracles."""

import itertools
import random

import pytest

from stabgeo.errors import (
    MalformedMatrixError,
    NonCanonicalError,
    OracleSizeError,
    ParseError,
    ZeroCofactorError,
)
from stabgeo.exact import ExactScalar
from stabgeo.pauli import PauliOp, parse_pauli
from stabgeo.tableau import (
    StabilizerMatrix,
    amplitude_at,
    canonicalize,
    cofactor,
    emit_matrix,
    is_basis_form,
    is_similar,
    parse_matrix,
    partial_trace,
    rep_vector,
    row_mult,
    sample_amplitudes,
    support_size,
    to_dense,
)
from stabgeo.cli import random_state

from oracles import (
    density_from_matrix,
    density_partial_trace,
    mat_vec,
    pauli_dense,
    stabilized_vector,
    vec_equal,
    vec_proportional,
)


def mat(text):
    return parse_matrix(text)


def dense_scalars(m):
    return [a.to_cyc() for a in to_dense(m)]


def test_row_mult_bell_example():
    bell = mat("XX\nZZ")
    out = row_mult(bell, 1, 0)
    assert [str(r) for r in out.rows] == ["XX", "-YY"]
    back = row_mult(out, 1, 0)
    assert [str(r) for r in back.rows] == ["XX", "ZZ"]


def test_row_mult_by_identity_row_is_noop():
    rows = [parse_pauli("XX"), PauliOp.identity(2)]
    m = StabilizerMatrix.from_rows(rows, validate=False)
    out = row_mult(m, 0, 1)
    assert out.rows[0] == rows[0]


def test_row_mult_rejects_bad_indices():
    bell = mat("XX\nZZ")
    with pytest.raises(ValueError):
        row_mult(bell, 0, 0)
    with pytest.raises(IndexError):
        row_mult(bell, 0, 5)


def test_canonicalize_examples():
    assert [str(r) for r in canonicalize(mat("XX\n-YY")).rows] == ["XX", "ZZ"]
    basis = mat("ZI\nIZ")
    assert canonicalize(basis) == basis
    m1, m2, m3 = mat("XX\nZZ"), mat("XX\n-YY"), mat("-YY\nZZ")
    assert canonicalize(m1) == canonicalize(m2) == canonicalize(m3)


def test_canonicalize_idempotent_on_random_states():
    for seed in range(30):
        n = 2 + seed % 3
        m = random_state(n, 1, f"canon:{seed}")
        c = canonicalize(m)
        assert canonicalize(c) == c
        # the state itself is unchanged
        assert vec_equal(stabilized_vector(c), stabilized_vector(m))


def group_elements(m):
    """All 2^r signed group elements, by brute-force subset products."""
    elems = set()
    rows = m.rows
    for subset in range(1 << len(rows)):
        acc = PauliOp.identity(m.n)
        for t, row in enumerate(rows):
            if subset & (1 << t):
                from stabgeo.pauli import pauli_mul
                acc = pauli_mul(row, acc)
        elems.add((acc.x, acc.z, acc.phase_exp))
    return frozenset(elems)


def test_canonical_uniqueness_exhaustive_two_qubits():
    """Any independent generating pair of the same group canonicalizes
    to the same matrix (group expansion as the oracle)."""
    from stabgeo.census import enumerate_states

    for m in enumerate_states(2):
        grp = sorted(group_elements(m))
        members = [PauliOp(2, x, z, p) for x, z, p in grp if x or z]
        expect = canonicalize(m)
        count = 0
        for a, b in itertools.permutations(members, 2):
            if (a.x, a.z) == (b.x, b.z):
                continue  # dependent pair
            alt = StabilizerMatrix.from_rows([a, b])
            assert canonicalize(alt) == expect
            count += 1
        assert count == 6  # 3 distinct literals, ordered pairs


def test_is_basis_form():
    assert is_basis_form(mat("ZI\nIZ")) == 0
    assert is_basis_form(mat("-ZI\n-IZ")) == 3
    assert is_basis_form(mat("-IZ\nZI")) is None  # off-diagonal order
    assert is_basis_form(mat("XX\nZZ")) is None
    assert is_basis_form(StabilizerMatrix.basis_state(3, 5)) == 5


def test_sample_amplitudes():
    assert sample_amplitudes(mat("ZI\nIZ")) == [(0, ExactScalar.one())]
    # basis states have no second sample: the short list is the flag
    assert len(sample_amplitudes(mat("ZI\nIZ"), 2)) == 1
    # one real and one imaginary term; the true |10> amplitude is -i
    two = sample_amplitudes(mat("-YI\nIX"), 2)
    assert two == [(0, ExactScalar.one()), (2, ExactScalar.of(6))]
    bell = sample_amplitudes(mat("XX\nZZ"), 2)
    assert bell == [(0, ExactScalar.one()), (3, ExactScalar.one())]


def test_to_dense_examples():
    def strs(m):
        return [str(a) for a in to_dense(m)]

    assert strs(mat("ZI\nIZ")) == ["1", "0", "0", "0"]
    assert strs(mat("IX\nXI")) == ["1", "1", "1", "1"]
    assert strs(mat("IY\nZI")) == ["1", "w^2", "0", "0"]


def test_to_dense_against_projector_oracle_exhaustive_n2():
    from stabgeo.census import enumerate_states

    for m in enumerate_states(2):
        assert vec_equal(dense_scalars(m), stabilized_vector(m))


def test_to_dense_against_projector_oracle_sampled_n3():
    for seed in range(10):
        m = random_state(3, 1, f"dense:{seed}")
        assert vec_equal(dense_scalars(m), stabilized_vector(m))


def test_to_dense_support_and_bound():
    assert support_size(mat("IX\nXI")) == 4
    assert support_size(mat("XX\nZZ")) == 2
    big = StabilizerMatrix.zero_state(11)
    with pytest.raises(OracleSizeError):
        to_dense(big)
    assert len(to_dense(big, max_qubits=11)) == 2048


def test_amplitude_at():
    bell = mat("XX\nZZ")
    assert amplitude_at(bell, 0) == ExactScalar.one()
    assert amplitude_at(bell, 3) == ExactScalar.one()
    assert amplitude_at(bell, 1).zero
    assert amplitude_at(mat("-YI\nIX"), 2) == ExactScalar.of(6)


def test_cofactor_examples():
    bell = mat("XX\nZZ")
    c = cofactor(bell, 0, 0)
    assert is_basis_form(c) == 0
    with pytest.raises(ZeroCofactorError):
        cofactor(mat("ZI\nIZ"), 0, 1)
    allplus = mat("IX\nXI")
    c2 = cofactor(allplus, 0, 0)
    assert c2 == canonicalize(mat("ZI\nIX"))


def test_cofactor_against_projection_oracle():
    for seed in range(12):
        n = 2 + seed % 2
        m = random_state(n, 1, f"cof:{seed}")
        vec = stabilized_vector(m)
        for q in range(n):
            bit = 1 << (n - 1 - q)
            for a in (0, 1):
                projected = [v if bool(b & bit) == bool(a) else v * 0
                             for b, v in enumerate(vec)]
                if all(v.is_zero() for v in projected):
                    with pytest.raises(ZeroCofactorError):
                        cofactor(m, q, a)
                    continue
                got = stabilized_vector(cofactor(m, q, a))
                assert vec_proportional(got, projected)


def test_partial_trace_examples():
    assert [str(r) for r in partial_trace(mat("ZI\nIZ"), 1).rows] == ["Z"]
    mixed = partial_trace(mat("XX\nZZ"), 1)
    assert mixed.n == 1 and mixed.num_rows == 0
    ghz = mat("XXX\nZZI\nIZZ")
    reduced = partial_trace(ghz, 2)
    assert [str(r) for r in reduced.rows] == ["ZZ"]


def test_partial_trace_against_density_oracle():
    for seed in range(8):
        n = 2 + seed % 2
        m = random_state(n, 1, f"pt:{seed}")
        vec = stabilized_vector(m)
        norm_sq = sum((v.abs2().a for v in vec), start=0)
        rho = [[(vi * vj.conjugate()) * (1 / norm_sq) for vj in vec]
               for vi in vec]
        for q in range(n):
            got = density_from_matrix(partial_trace(m, q))
            want = density_partial_trace(rho, q, n)
            dim = 1 << (n - 1)
            assert all((got[i][j] - want[i][j]).is_zero()
                       for i in range(dim) for j in range(dim))


def test_partial_trace_entangled_pairs_are_maximally_mixed():
    for gens in ("XX\nZZ", "-XX\nYY", "XY\nYX"):
        for q in (0, 1):
            assert partial_trace(mat(gens), q).num_rows == 0


def test_is_similar():
    a = canonicalize(mat("XX\nZZ"))
    b = canonicalize(mat("-XX\nZZ"))
    assert is_similar(a, b)
    assert is_similar(a, a)
    assert not is_similar(canonicalize(mat("ZI\nIZ")), canonicalize(mat("XI\nIZ")))
    with pytest.raises(NonCanonicalError):
        is_similar(mat("XX\n-YY"), a)


def test_matrix_validation():
    with pytest.raises(MalformedMatrixError):
        StabilizerMatrix.from_rows([parse_pauli("X"), parse_pauli("Z")])
    with pytest.raises(MalformedMatrixError):
        StabilizerMatrix.from_rows([parse_pauli("iX")])
    with pytest.raises(MalformedMatrixError):
        StabilizerMatrix.from_rows([parse_pauli("XX"), parse_pauli("-XX")])
    with pytest.raises(MalformedMatrixError):
        StabilizerMatrix.from_rows(
            [parse_pauli("XX"), parse_pauli("ZZ"), parse_pauli("-YY")])


def test_parse_and_emit():
    text = "# bell pair\nXX\nZZ\n\n"
    m = parse_matrix(text)
    assert emit_matrix(m) == "XX\nZZ"
    assert parse_matrix(emit_matrix(m)) == m
    with pytest.raises(ParseError) as err:
        parse_matrix("XX\nXZQ")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError):
        parse_matrix("XX\nZ")
    with pytest.raises(ParseError):
        parse_matrix("iXX\nZZ")
    with pytest.raises(ParseError):
        parse_matrix("XX\nZI")  # anticommuting
    with pytest.raises(ParseError):
        parse_matrix("")


def test_rep_vector_is_unit_norm():
    for seed in range(6):
        m = random_state(2, 1, f"rep:{seed}")
        vec = rep_vector(m)
        norm = sum((v.abs2().a for v in vec), start=0)
        assert norm == 1
        assert vec_proportional(vec, stabilized_vector(m))
