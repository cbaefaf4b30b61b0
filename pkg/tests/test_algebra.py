from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dwork_hgm.algebra import (
    Polynomial,
    RationalFunction,
    RFMatrix,
    char_poly,
    constant_rank,
    limit_at_infinity,
    mat_derivative,
    mat_inverse,
    mat_mul,
    parse_polynomial,
    parse_rational_function,
    rational_roots,
    reciprocal_substitute,
    rf_arith,
    rf_eval,
    rf_normalize,
)
from dwork_hgm.errors import (
    DimensionMismatch,
    DivergentAtInfinity,
    DivisionByZero,
    NonConstantEntries,
    NonRationalSpectrum,
    PoleAtPoint,
    SingularMatrix,
    ZeroDenominator,
)

from conftest import golden_matrix, sympy_to_rf, to_sympy_matrix

x = Polynomial.x()
X = RationalFunction.x()


def P(*coeffs):
    return Polynomial(coeffs)


# --- normalization -----------------------------------------------------------

def test_normalize_cancels_gcd():
    f = rf_normalize(x * x - 1, x - 1)
    assert f.num == x + 1 and f.den == 1


def test_normalize_zero_numerator():
    f = rf_normalize(Polynomial(), P(7))
    assert f.num.is_zero() and f.den == 1


def test_normalize_makes_denominator_monic():
    f = rf_normalize(2 * x, P(4))
    assert f.num == P(0, F(1, 2)) and f.den == 1


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rf_normalize(x, Polynomial())


# --- arithmetic --------------------------------------------------------------

def test_add_common_denominator():
    f = rf_arith("add", X / (1 - X), RationalFunction.constant(1))
    assert f == RationalFunction(1, 1 - x)


def test_mul_by_zero():
    assert rf_arith("mul", X / (1 - X), RationalFunction()).is_zero()


def test_exact_quotient():
    assert rf_arith("div", RationalFunction(x * x - 1), RationalFunction(x + 1)) == RationalFunction(x - 1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        rf_arith("div", X, RationalFunction())


small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(small, min_size=0, max_size=4).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
rfs = st.builds(RationalFunction, polys, nonzero_polys)


def _canonical(f):
    return RationalFunction(f.num, f.den) == f and (f.den.lc == 1)


@settings(max_examples=60, deadline=None)
@given(rfs, rfs)
def test_arith_results_are_canonical(a, b):
    for op in ("add", "sub", "mul"):
        r = rf_arith(op, a, b)
        assert _canonical(r)
        assert r.num == RationalFunction(r.num, r.den).num


@settings(max_examples=60, deadline=None)
@given(rfs, rfs, rfs)
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) * c == a * c + b * c
    assert a - a == 0
    if not b.is_zero():
        assert (a / b) * b == a


@settings(max_examples=40, deadline=None)
@given(rfs, st.fractions(min_value=-3, max_value=3, max_denominator=3))
def test_eval_agrees_with_sympy(f, point):
    sym = to_sympy_matrix(RFMatrix([[f]]))[0, 0]
    lam = sympy.Symbol("lam")
    if f.den(point) == 0:
        with pytest.raises(PoleAtPoint):
            rf_eval(f, point)
    else:
        expected = sympy.Rational(point.numerator, point.denominator)
        assert rf_eval(f, point) == F(str(sym.subs(lam, expected)))


# --- polynomials -------------------------------------------------------------

def test_polynomial_divmod_and_gcd():
    q, r = divmod(x**3 - 1, x - 1)
    assert q == x * x + x + 1 and r.is_zero()


def test_polynomial_format_roundtrip():
    p = P(F(-1, 3), 0, F(17, 6), -1)
    assert parse_polynomial(p.format("z"), "z") == p
    assert p.format() == "-lambda^3 + 17/6*lambda^2 - 1/3"


def test_rational_function_string_roundtrip():
    f = sympy_to_rf("-lam**2/(18*(lam**6-1))")
    assert parse_rational_function(f.to_string()) == f
    assert f.to_string() == "(-1/18*lambda^2) / (lambda^6 - 1)"


# --- matrices ----------------------------------------------------------------

S6 = RFMatrix([[1, 0, 0], [0, -6 * X, 0], [0, -6, 36 * X]])


def test_inverse_of_identity():
    assert mat_inverse(RFMatrix.identity(4)) == RFMatrix.identity(4)


def test_derivative_of_worked_example_s():
    assert mat_derivative(S6) == RFMatrix([[0, 0, 0], [0, -6, 0], [0, 0, 36]])


def test_inverse_matches_gaussian_elimination_oracle():
    ours = mat_inverse(S6)
    oracle = to_sympy_matrix(S6).inv()
    assert (to_sympy_matrix(ours) - oracle).applyfunc(sympy.simplify) == sympy.zeros(3, 3)
    assert mat_mul(S6, ours) == RFMatrix.identity(3)


def test_singular_and_mismatch():
    with pytest.raises(SingularMatrix):
        mat_inverse(RFMatrix([[X, 1], [X * X, X]]))
    with pytest.raises(DimensionMismatch):
        mat_mul(RFMatrix.identity(2), RFMatrix.identity(3))


entries = st.builds(RationalFunction, st.lists(small, max_size=3).map(Polynomial),
                    st.lists(small, min_size=1, max_size=2).map(Polynomial).filter(lambda p: not p.is_zero()))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3).flatmap(lambda k: st.lists(st.lists(entries, min_size=k, max_size=k),
                                                   min_size=k, max_size=k)))
def test_inverse_property(grid):
    m = RFMatrix(grid)
    try:
        inv = mat_inverse(m)
    except SingularMatrix:
        assert to_sympy_matrix(m).det().equals(0)
        return
    assert mat_mul(m, inv) == RFMatrix.identity(m.rows)


# --- characteristic polynomial ----------------------------------------------

def _laplace_det(m):
    """Cofactor expansion along the first row (oracle)."""
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j in range(len(m)):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _laplace_det(minor)
    return total


def _oracle_charpoly(rows):
    t = sympy.Symbol("t")
    k = len(rows)
    m = [[(t if i == j else 0) - sympy.Rational(rows[i][j].numerator, rows[i][j].denominator)
          for j in range(k)] for i in range(k)]
    coeffs = sympy.Poly(sympy.expand(_laplace_det(m)), t).all_coeffs()[::-1]
    return Polynomial(F(str(c)) for c in coeffs)


def test_char_poly_worked_example():
    a = [[0, F(1, 6), 0], [0, F(1, 6), F(1, 6)], [0, F(-1, 3), F(2, 3)]]
    expected = _oracle_charpoly(a)
    assert expected == P(0, F(1, 6), F(-5, 6), 1)
    assert char_poly(RFMatrix(a)) == expected


def test_char_poly_small_cases():
    assert char_poly(RFMatrix.identity(2)) == (x - 1) ** 2
    assert char_poly(RFMatrix([[F(3, 7)]])) == x - F(3, 7)


def test_char_poly_rejects_variable_entries():
    with pytest.raises(NonConstantEntries):
        char_poly(RFMatrix([[X]]))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.lists(st.lists(small, min_size=k, max_size=k),
                                                   min_size=k, max_size=k)))
def test_char_poly_matches_cofactor_oracle(rows):
    assert char_poly(rows) == _oracle_charpoly(rows)
    upper = [[r[j] if j >= i else 0 for j, _ in enumerate(r)] for i, r in enumerate(rows)]
    expected = Polynomial.constant(1)
    for i in range(len(rows)):
        expected = expected * (x - upper[i][i])
    assert char_poly(upper) == expected


# --- rational roots ----------------------------------------------------------

def test_rational_roots_worked_example():
    assert rational_roots(P(0, F(1, 6), F(-5, 6), 1)) == [0, F(1, 3), F(1, 2)]


def test_rational_roots_multiplicity():
    assert rational_roots((x - 1) ** 3) == [1, 1, 1]
    assert rational_roots(x**3 * (x - F(1, 2))) == [0, 0, 0, F(1, 2)]


def test_irrational_spectrum():
    with pytest.raises(NonRationalSpectrum):
        rational_roots(x * x - 2)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=7), min_size=1, max_size=5),
       st.fractions(min_value=-3, max_value=3, max_denominator=5).filter(lambda c: c != 0))
def test_rational_roots_recovers_factorization(roots, lead):
    p = Polynomial.constant(lead)
    for r in roots:
        p = p * (x - r)
    found = rational_roots(p)
    assert found == sorted(roots)
    q = Polynomial.constant(p.lc)
    for r in found:
        q = q * (x - r)
    assert q == p


# --- evaluation and limits ---------------------------------------------------

Z = RationalFunction.x()


def test_limit_at_infinity():
    assert limit_at_infinity(Z / (3 * (1 - Z))) == F(-1, 3)
    assert limit_at_infinity(RationalFunction.constant(F(1, 6))) == F(1, 6)
    assert limit_at_infinity(1 / (1 - Z)) == 0
    with pytest.raises(DivergentAtInfinity):
        limit_at_infinity(Z * Z / (1 - Z))


def test_eval_examples():
    assert rf_eval((5 * Z + 4) / (6 * (1 - Z)), 0) == F(2, 3)
    assert rf_eval((5 * Z - 1) / (3 * (1 - Z)), 0) == F(-1, 3)
    with pytest.raises(PoleAtPoint):
        rf_eval(Z / (1 - Z), 1)


@settings(max_examples=60, deadline=None)
@given(rfs)
def test_limit_equals_value_of_reciprocal_at_zero(f):
    if f.num.degree > f.den.degree:
        with pytest.raises(DivergentAtInfinity):
            limit_at_infinity(f)
        return
    assert limit_at_infinity(f) == rf_eval(reciprocal_substitute(f), 0)


def test_constant_rank():
    assert constant_rank([[0, 0], [F(-1, 3), F(-4, 3)]]) == 1
    assert constant_rank([[1, 2], [2, 4]]) == 1
    assert constant_rank([[1, 0], [0, 1]]) == 2


def test_golden_helper_parses_reference_formula():
    assert golden_matrix({"variable": "lam", "entries": [["2*lam**3/(1-lam**6)"]]})[0, 0] == \
        -2 * X**3 / (X**6 - 1)
