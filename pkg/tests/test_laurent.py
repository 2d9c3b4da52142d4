import pickle
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from clustermono.errors import DivisionError, DomainError, ResourceError, StructuralError
from clustermono.laurent import (
    LaurentPolynomial,
    coefficient_array,
    evaluate,
    exact_div,
    from_coefficient_array,
    normalize,
    parse,
)
from clustermono.seqprops import CoefficientArray

from conftest import laurent_polys, nonzero_laurent

P = lambda s, n=3: parse(s, rank=n)  # noqa: E731
X1, X2, X3 = (LaurentPolynomial.variable(i, 3) for i in range(3))


def to_sympy(p):
    xs = sympy.symbols("x1:%d" % (p.rank + 1))
    return sympy.Add(*[c * sympy.Mul(*[x ** e for x, e in zip(xs, exp)])
                       for exp, c in p.terms.items()])


# -- arithmetic ----------------------------------------------------------------


def test_add_cancels():
    assert (X1 + 1) + (X2 - 1) == X1 + X2


def test_add_zero_identity():
    p = P("x1*x3 + 2*x2^-1")
    assert p + LaurentPolynomial.zero(3) == p


def test_add_builds_shared_numerator():
    assert (X2 + 1) + X1 * X3 == P("x1*x3 + x2 + 1")
    assert str(P("x2 + 1 + x1*x3")) == "x1*x3 + x2 + 1"


def test_rank_mismatch():
    with pytest.raises(StructuralError):
        X1 + LaurentPolynomial.variable(0, 2)
    with pytest.raises(StructuralError):
        X1 * LaurentPolynomial.variable(0, 2)


def test_mul_examples():
    assert (1 + X2) * (X1 + X3) == X1 + X3 + X1 * X2 + X2 * X3
    p = P("x1^2 - 3*x3^-1")
    assert p * LaurentPolynomial.one(3) == p
    big = (1 + X2) * (X1 + X3) * (X1 + X3) * (X1 + X3 + X1 * X2)
    assert big.coefficient((2, 1, 1)) == 5


def test_pow():
    assert (1 + X2) ** 2 == 1 + 2 * X2 + X2 ** 2
    assert P("x1*x3 + 7")**0 == LaurentPolynomial.one(3)
    w, y = P("x1*x3 + x2 + 1"), P("x1*x3 + (x2 + 1)^2")
    assert w ** 1 * y ** 0 == w
    assert X1 ** -2 == LaurentPolynomial.monomial((-2, 0, 0))
    with pytest.raises(DomainError):
        (X1 + 1) ** -1


def test_exact_div_examples():
    assert exact_div(P("x1*x3 + x2 + 1"), X2) == P("x1*x2^-1*x3 + 1 + x2^-1")
    assert exact_div(P("x2^2 + 2*x2 + 1"), X2 + 1) == X2 + 1
    a, b = P("x1*x3 + 1"), P("x1*x3 + x2 + 1")
    assert exact_div(a * b, a) == b


def test_exact_div_remainder():
    with pytest.raises(DivisionError) as info:
        exact_div(P("x1^2 + 1"), X1 + 1)
    assert not info.value.remainder.is_zero()
    with pytest.raises(DivisionError):
        exact_div(P("3*x1"), LaurentPolynomial.constant(2, 3))
    with pytest.raises(ZeroDivisionError):
        exact_div(X1, LaurentPolynomial.zero(3))


def test_canonical_text():
    assert P("1 + x2 + x3*x1").to_text() == "x1*x3 + x2 + 1"
    assert P("-x3 + 3*x1^2*x2^-1").to_text() == "3*x1^2*x2^-1 - x3"
    assert LaurentPolynomial.zero(2).to_text() == "0"
    for text in ("x1*x3 + x2 + 1", "3*x1^2*x2^-1 - x3", "5 - 2*x1^-1*x3^4"):
        assert P(text).to_text() == text


def test_parse_rejects_garbage():
    with pytest.raises(DomainError):
        parse("x1 +* 2")
    with pytest.raises(DomainError):
        parse("y + 1")
    with pytest.raises(DomainError):
        parse("x1^x2")
    assert parse("a*b + 1", names=("a", "b")) == parse("x1*x2 + 1")


# -- normal form, evaluation, dense arrays ---------------------------------------


def test_normalize_examples():
    nf = normalize(P("(x1*x3 + x2 + 1)/(x1*x2)"))
    assert nf.numerator == P("x1*x3 + x2 + 1") and nf.dvector == (1, 1, 0)
    nf = normalize(X1)
    assert nf.numerator == LaurentPolynomial.one(3) and nf.dvector == (-1, 0, 0)
    nf = normalize(P("(x1*x3 + (x2 + 1)^2)/(x1*x2*x3)"))
    assert nf.dvector == (1, 1, 1)
    assert nf.numerator == P("x1*x3 + x2^2 + 2*x2 + 1")
    assert nf.to_text() == "(x1*x3 + x2^2 + 2*x2 + 1)/(x1*x2*x3)"
    with pytest.raises(DomainError):
        normalize(LaurentPolynomial.zero(3))


def test_evaluate_examples():
    assert evaluate(P("x1*x3 + 1"), (1, 1, 1)) == 2
    assert evaluate(P("(x2 + 1)/x1"), (2, 3, 5)) == 2
    with pytest.raises(DomainError):
        evaluate(X1, (0, 1, 1))


def test_evaluate_worked_monomial():
    # value computed independently from the three factors at (1,1,1): 4 * 2 * 3
    mono = P("(1 + x2)*(x1 + x3)/(x1*x2*x3)") * P("(x1 + x3)/x2") \
        * P("(x1 + x3 + x1*x2)/(x2*x3)")
    assert evaluate(mono, (1, 1, 1)) == 24
    assert sum(normalize(mono).numerator.terms.values()) == 24


def test_coefficient_array_examples():
    arr = coefficient_array(P("x1*x3 + x2 + 1"))
    assert arr.shape == (2, 2, 2) and arr.offsets == (0, 0, 0)
    assert len(arr.to_terms()) == 3  # the (1,0,1), (0,1,0), (0,0,0) cells
    arr = coefficient_array(LaurentPolynomial.constant(7, 3))
    assert arr.shape == (1, 1, 1) and arr[(0, 0, 0)] == 7
    arr = coefficient_array(parse("1 + 2*x1 + x1^2"))
    assert list(arr.data) == [1, 2, 1]
    arr = coefficient_array(P("x1^-1*x2 + x3^2"))
    assert arr.offsets == (-1, 0, 0) and arr[(-1, 1, 0)] == 1


def test_coefficient_array_guard(monkeypatch):
    import clustermono.laurent as mod
    monkeypatch.setattr(mod, "MAX_DENSE_CELLS", 10)
    with pytest.raises(ResourceError):
        coefficient_array(P("x1^3*x2^3 + 1"))


def test_pickle_round_trip():
    p = P("(x1*x3 + x2 + 1)/(x1*x2)")
    assert pickle.loads(pickle.dumps(p)) == p
    assert hash(pickle.loads(pickle.dumps(p))) == hash(p)


# -- properties ------------------------------------------------------------------


@settings(max_examples=250)
@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPolynomial.zero(3)


@settings(max_examples=200)
@given(laurent_polys(max_terms=4), laurent_polys(max_terms=4))
def test_mul_matches_sympy(p, q):
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@settings(max_examples=200)
@given(laurent_polys(), nonzero_laurent())
def test_div_round_trip(p, q):
    assert exact_div(p * q, q) == p


@settings(max_examples=200)
@given(nonzero_laurent())
def test_normalize_round_trip(p):
    nf = normalize(p)
    assert nf.reconstruct() == p
    assert nf.numerator.is_polynomial()
    assert nf.numerator.min_exponents() == (0, 0, 0)


nonzero_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool)


@settings(max_examples=200)
@given(laurent_polys(), laurent_polys(), st.tuples(*[nonzero_rationals] * 3))
def test_evaluate_homomorphism(p, q, v):
    assert evaluate(p * q, v) == evaluate(p, v) * evaluate(q, v)
    assert evaluate(p + q, v) == evaluate(p, v) + evaluate(q, v)
    assert isinstance(evaluate(p, v), Fraction)


@settings(max_examples=200)
@given(nonzero_laurent(coeffs=(0, 9)))
def test_dense_round_trip(p):
    assert from_coefficient_array(coefficient_array(p)) == p


@settings(max_examples=100)
@given(laurent_polys())
def test_text_round_trip(p):
    assert parse(p.to_text(), rank=3) == p


def test_negative_array_rejected():
    with pytest.raises(DomainError):
        CoefficientArray([1, -1])
