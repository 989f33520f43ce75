from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clifgrade.clifford import (
    AdjointSpec,
    CapacityError,
    CliffordElement,
    CliffordError,
    Signature,
    adjoint,
    blade,
    blade_adjoint_sign,
    blade_mul,
    classify_clifford,
    conjugation,
    element_from_json,
    element_mul,
    element_to_json,
    format_element,
    grade_of,
    parse_element,
    reversion,
    tensor_product,
)
from oracles import brute_blade_mul, brute_reverse_sign, elements, real_signatures, sig_and_elements

CL20, CL02 = Signature.of(2, 0), Signature.of(0, 2)


def el(sig, text):
    return parse_element(text, sig)


# blade products

@pytest.mark.parametrize("sig", [
    Signature.of(0, 0), Signature.of(3, 0), Signature.of(0, 3), Signature.of(2, 2),
    Signature.of(1, 3), Signature.of(1, 1, complex_flag=True),
    Signature(((2, 0), (0, 1), (1, 1))),
])
def test_blade_mul_matches_sort_oracle(sig):
    for a in sig.blades():
        for b in sig.blades():
            sign, m = blade_mul(a, b, sig)
            assert (int(sign), m) == brute_blade_mul(a, b, sig)


@pytest.mark.parametrize("a, b, sig, want", [
    (blade(1), blade(1), CL20, (1, 0)),
    (blade(2), blade(1), CL20, (-1, blade(1, 2))),
    (blade(1, 2), blade(1, 2), CL02, (-1, 0)),
])
def test_blade_mul_examples(a, b, sig, want):
    assert blade_mul(a, b, sig) == (Fraction(want[0]), want[1])


def test_blade_mul_rejects_invalid_blade():
    with pytest.raises(CliffordError):
        blade_mul(blade(3), 0, CL20)


def test_element_mul_examples():
    assert el(CL20, "1 + 1 e1") * el(CL20, "1 - 1 e1") == 0
    assert el(CL02, "e1") * el(CL02, "e2") == CliffordElement.from_blade(CL02, blade(1, 2))
    s = el(CL20, "e1 + e2")
    assert s * s == 2


def test_element_mul_mismatched_signatures():
    with pytest.raises(CliffordError):
        element_mul(CliffordElement.gen(CL20, 1), CliffordElement.gen(CL02, 1))


def test_no_zero_terms_stored():
    x = el(CL20, "e1 + e2") + el(CL20, "-1 e1")
    assert x.terms == {blade(2): 1}
    assert CliffordElement(CL20, {1: 0}).terms == {}


def test_grade_examples():
    assert grade_of(blade(1, 2, 4), Signature.of(5, 0)) == (1, 1, 0, 1, 0)
    assert grade_of(0, Signature.of(2, 1)) == (0, 0, 0)
    assert grade_of(blade(1), Signature.of(0, 1)) == (1,)


# adjoints

def test_adjoint_examples():
    s3 = Signature.of(3, 0)
    e123 = CliffordElement.from_blade(s3, blade(1, 2, 3))
    assert adjoint(e123, reversion(s3)) == -e123
    assert adjoint(e123, conjugation(s3)) == e123
    e2 = CliffordElement.gen(CL20, 2)
    assert adjoint(e2, AdjointSpec(1, 0)) == -e2


def test_adjoint_endpoints_are_reversion_and_conjugation():
    sig = Signature.of(2, 3)
    for b in sig.blades():
        k = b.bit_count()
        assert blade_adjoint_sign(b, AdjointSpec(2, 3), sig) == (-1) ** (k * (k - 1) // 2)
        assert blade_adjoint_sign(b, AdjointSpec(0, 0), sig) == (-1) ** (k * (k + 1) // 2)


@pytest.mark.parametrize("p, q", [(2, 1), (1, 2), (3, 0), (0, 3)])
def test_adjoint_sign_from_reversed_word(p, q):
    # sign of the reversed product of sign-flipped generators
    sig = Signature.of(p, q)
    for ap in range(p + 1):
        for am in range(q + 1):
            spec = AdjointSpec(ap, am)
            for b in sig.blades():
                flips = sum(1 for i in range(p + q) if b >> i & 1
                            and not (i < ap or p <= i < p + am))
                want = brute_reverse_sign(b, sig) * (-1) ** flips
                assert blade_adjoint_sign(b, spec, sig) == want


def test_adjoint_out_of_range():
    with pytest.raises(CliffordError):
        adjoint(CliffordElement.gen(CL20, 1), AdjointSpec(3, 0))


def test_complex_adjoint_fixes_imaginary_unit():
    sig = Signature.of(1, 1, complex_flag=True)
    i = CliffordElement.gen(sig, 1)
    assert adjoint(i, AdjointSpec(0, 0)) == i
    assert adjoint(i, AdjointSpec(1, 1)) == i
    assert i * i == -1


# tensor products

def test_tensor_product_grades_concatenate():
    a = CliffordElement.gen(CL20, 1)
    b = CliffordElement.gen(Signature.of(0, 1), 1)
    t = tensor_product(a, b)
    (m,) = t.terms
    assert grade_of(m, t.sig) == (1, 0, 1)


def test_tensor_with_unit_embeds():
    x = el(Signature.of(1, 1), "2 e1 e2 - 1 e2")
    t = tensor_product(CliffordElement.scalar(CL20, 1), x)
    assert {grade_of(m, t.sig) for m in t.terms} == {(0, 0, 1, 1), (0, 0, 0, 1)}


def test_tensor_factors_commute():
    e12 = CliffordElement.from_blade(CL20, blade(1, 2))
    one = CliffordElement.scalar(Signature.of(0, 1), 1)
    t = tensor_product(e12, one)
    assert t * t == -1
    u = tensor_product(CliffordElement.scalar(CL20, 1), CliffordElement.gen(Signature.of(0, 1), 1))
    v = tensor_product(CliffordElement.gen(CL20, 1), one)
    assert u * v == v * u


def test_capacity(monkeypatch):
    with pytest.raises(CapacityError):
        Signature.of(9, 8)
    monkeypatch.setenv("CLIFGRADE_MAX_GEN", "3")
    with pytest.raises(CapacityError):
        Signature.of(2, 2)
    with pytest.raises(CapacityError):
        tensor_product(CliffordElement.gen(CL20, 1), CliffordElement.gen(CL02, 1))


# classification of the algebra

@pytest.mark.parametrize("pq, name", [((2, 0), "R(2)"), ((0, 2), "H"), ((2, 2), "R(4)"),
                                      ((4, 0), "H(2)"), ((0, 4), "H(2)"), ((1, 0), "2R"),
                                      ((0, 1), "C"), ((0, 3), "2H"), ((3, 0), "C(2)"),
                                      ((0, 0), "R")])
def test_classify_clifford(pq, name):
    assert str(classify_clifford(Signature.of(*pq))) == name


def test_classify_complex():
    assert str(classify_clifford(Signature.of(1, 0, complex_flag=True))) == "2C"
    assert str(classify_clifford(Signature.of(1, 1, complex_flag=True))) == "C(2)"
    assert str(classify_clifford(Signature.of(1, 2, complex_flag=True))) == "2C(2)"


@given(real_signatures)
def test_classify_dimension(sig):
    assert classify_clifford(sig).real_dim == sig.dim


# text and JSON

def test_format_examples():
    x = el(Signature.of(3, 0), "3/2 e1 e3 - 1 e2")
    assert format_element(x) == "-1 e2 + 3/2 e1 e3"
    assert format_element(CliffordElement.scalar(CL20, 1)) == "1"
    assert format_element(CliffordElement.zero(CL20)) == "0"


def test_parse_orders_generators():
    assert el(CL20, "e2 e1") == -CliffordElement.from_blade(CL20, blade(1, 2))


@pytest.mark.parametrize("text", ["", "e9", "1 e1 e2 3", "x"])
def test_parse_errors(text):
    with pytest.raises(CliffordError):
        parse_element(text, CL20)


@given(sig_and_elements(1))
def test_text_and_json_round_trip(args):
    sig, x = args
    assert parse_element(format_element(x), sig) == x
    assert element_from_json(element_to_json(x)) == x


# algebra axioms

@settings(max_examples=200)
@given(sig_and_elements(3))
def test_associative(args):
    _, x, y, z = args
    assert (x * y) * z == x * (y * z)


@given(sig_and_elements(3))
def test_distributive(args):
    _, x, y, z = args
    assert x * (y + z) == x * y + x * z


@given(real_signatures, st.data())
def test_anticommutation(sig, data):
    if sig.n == 0:
        return
    i = data.draw(st.integers(1, sig.n))
    j = data.draw(st.integers(1, sig.n))
    ei, ej = CliffordElement.gen(sig, i), CliffordElement.gen(sig, j)
    if i == j:
        assert ei * ei == (1 if i <= sig.d_plus else -1)
    else:
        assert ei * ej + ej * ei == 0


@given(sig_and_elements(2), st.data())
def test_anti_involution(args, data):
    sig, x, y = args
    spec = AdjointSpec(data.draw(st.integers(0, sig.d_plus)), data.draw(st.integers(0, sig.d_minus)))
    assert adjoint(x * y, spec) == adjoint(y, spec) * adjoint(x, spec)
    assert adjoint(adjoint(x, spec), spec) == x


@given(real_signatures, st.data())
def test_grade_preserved_and_additive(sig, data):
    a = data.draw(st.integers(0, sig.dim - 1))
    b = data.draw(st.integers(0, sig.dim - 1))
    spec = AdjointSpec(data.draw(st.integers(0, sig.d_plus)), data.draw(st.integers(0, sig.d_minus)))
    assert adjoint(CliffordElement.from_blade(sig, a), spec).blades() == {a}
    _, m = blade_mul(a, b, sig)
    assert grade_of(m, sig) == tuple(u ^ v for u, v in zip(grade_of(a, sig), grade_of(b, sig)))


@given(real_signatures, real_signatures, st.data())
def test_tensor_product_is_multiplicative(sa, sb, data):
    if sa.n + sb.n > 6:
        return
    x1, x2 = data.draw(elements(sa, 3)), data.draw(elements(sa, 3))
    y1, y2 = data.draw(elements(sb, 3)), data.draw(elements(sb, 3))
    assert tensor_product(x1, y1) * tensor_product(x2, y2) == tensor_product(x1 * x2, y1 * y2)
