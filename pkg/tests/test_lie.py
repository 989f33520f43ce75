import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clifgrade.classification import ADJOINT_KINDS, FIELD_NAMES, row
from clifgrade.clifford import AdjointSpec, CliffordElement, Signature, adjoint, blade, conjugation, reversion
from clifgrade.lie import (
    adjoint_by_reversal,
    aut_basis,
    aut_basis_oracle,
    blade_adjoint_sign,
    effective_grading,
    graded_closure_violations,
    same_span,
    structure_constants,
)
from clifgrade.matrix import MetricSignature, matrix_adjoint

CL20, CL02 = Signature.of(2, 0), Signature.of(0, 2)

# aut dimensions at D = 1..4, metric (D,0), frozen from the null-space oracle
ORACLE_DIMS = {
    ("R", "rev"): (0, 1, 3, 6),
    ("C", "rev"): (0, 2, 6, 12),
    ("C", "conj"): (1, 4, 9, 16),
    ("2R", "rev"): (0, 2, 6, 12),
    ("2R", "conj"): (1, 4, 9, 16),
    ("H", "rev"): (1, 6, 15, 28),
    ("H", "conj"): (3, 10, 21, 36),
    ("H''", "rev"): (1, 6, 15, 28),
    ("H''", "conj"): (3, 10, 21, 36),
    ("2C", "rev"): (0, 4, 12, 24),
    ("2C", "conj"): (2, 8, 18, 32),
    ("2H", "rev"): (4, 16, 36, 64),
    ("2H", "conj"): (6, 20, 42, 72),
    ("CxH''", "rev"): (4, 16, 36, 64),
    ("CxH''", "conj"): (6, 20, 42, 72),
}


def test_blade_adjoint_sign_examples():
    assert blade_adjoint_sign(0, AdjointSpec(1, 0), CL20) == 1
    assert blade_adjoint_sign(blade(1), conjugation(CL20), CL20) == -1
    assert blade_adjoint_sign(blade(1, 2), reversion(CL02), CL02) == -1


def test_aut_basis_examples():
    b = aut_basis(CL20, conjugation(CL20), MetricSignature(1))
    assert b.dimension == 3 and set(b.grades) == {(1, 0), (0, 1), (1, 1)}
    b = aut_basis(CL02, reversion(CL02), MetricSignature(1))
    assert b.dimension == 1 and b.grades == [(1, 1)]
    assert aut_basis(Signature.of(0, 0), AdjointSpec(0, 0), MetricSignature(2, 1)).dimension == 3


def test_oracle_examples():
    c = Signature.of(0, 1)
    assert aut_basis_oracle(c, conjugation(c), MetricSignature(2)).dimension == 4
    h2 = Signature.of(0, 3)
    assert aut_basis_oracle(h2, reversion(h2), MetricSignature(1)).dimension == 4


@pytest.mark.parametrize("key", sorted(ORACLE_DIMS))
def test_dimensions_match_frozen_oracle(key):
    r = row(key[0])
    for d, want in enumerate(ORACLE_DIMS[key], 1):
        assert aut_basis(r.clifford_signature, r.adjoint(key[1]), MetricSignature(d)).dimension == want


@pytest.mark.parametrize("name", FIELD_NAMES)
@pytest.mark.parametrize("kind", ADJOINT_KINDS)
@pytest.mark.parametrize("metric", [MetricSignature(1), MetricSignature(1, 1), MetricSignature(2, 1), MetricSignature(0, 3)])
def test_basis_spans_oracle_and_is_skew(name, kind, metric):
    r = row(name)
    spec = r.adjoint(kind)
    basis = aut_basis(r.clifford_signature, spec, metric)
    assert same_span(basis, aut_basis_oracle(r.clifford_signature, spec, metric))
    assert all((matrix_adjoint(x, spec) + x).is_zero() for x in basis.elements)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_reversal_oracle_matches_sign_table(p, q, data):
    sig = Signature.of(p, q)
    spec = AdjointSpec(data.draw(st.integers(0, p)), data.draw(st.integers(0, q)))
    b = data.draw(st.integers(0, sig.dim - 1))
    x = CliffordElement.from_blade(sig, b)
    assert adjoint_by_reversal(x, spec) == adjoint(x, spec)


def test_structure_constants_abelian_and_sp2():
    h = Signature.of(0, 2)
    sc = structure_constants(aut_basis(h, reversion(h), MetricSignature(1)))
    assert sc.c == [[[0]]]
    sp = aut_basis(CL20, conjugation(CL20), MetricSignature(1))
    sc = structure_constants(sp)
    assert sc.is_antisymmetric() and not sc.jacobi_violations()
    # sl(2,R): the bracket is nondegenerate, every pair closes onto the third element
    assert all(len(sc.sparse[(i, j)]) == 1 for i, j in [(0, 1), (0, 2), (1, 2)])


@pytest.mark.parametrize("name", FIELD_NAMES)
def test_graded_closure_and_jacobi(name):
    r = row(name)
    for kind in ADJOINT_KINDS:
        basis = aut_basis(r.clifford_signature, r.adjoint(kind), MetricSignature(1, 1))
        sc = structure_constants(basis)
        assert not graded_closure_violations(basis, sc)
        assert not sc.jacobi_violations()
        assert sc.is_antisymmetric()


def test_effective_grading_examples():
    h = Signature.of(0, 2)
    assert effective_grading(aut_basis(h, reversion(h), MetricSignature(1))).rank == 1
    assert effective_grading(aut_basis(CL20, conjugation(CL20), MetricSignature(1))).rank == 2
    for d in (2, 3):
        assert effective_grading(aut_basis(h, reversion(h), MetricSignature(d))).rank == 2


def test_effective_grading_counts_inhomogeneous_oracle_elements():
    h = Signature.of(0, 2)
    oracle = aut_basis_oracle(h, reversion(h), MetricSignature(2))
    assert effective_grading(oracle).rank == 2


def test_lie_basis_json():
    obj = aut_basis(CL02, reversion(CL02), MetricSignature(1)).to_json()
    assert obj["dimension"] == 1 and obj["grades"] == [[1, 1]] and obj["grading_rank"] == 1
