import json
from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from dwork_hgm.algebra import Polynomial, RationalFunction, RFMatrix

DATA = Path(__file__).parent / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def sympy_to_rf(expr, var="lam"):
    """Independent conversion of a printed formula into a RationalFunction."""
    x = sympy.Symbol(var)
    e = sympy.sympify(expr, locals={var: x}) if isinstance(expr, str) else expr
    num, den = sympy.fraction(sympy.cancel(sympy.together(e)))

    def poly(p):
        coeffs = sympy.Poly(p, x).all_coeffs()[::-1]
        return Polynomial(Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q)) for c in coeffs)

    return RationalFunction(poly(num), poly(den))


def golden_matrix(data):
    var = data["variable"]
    return RFMatrix([[sympy_to_rf(e, var) for e in row] for row in data["entries"]])


def to_sympy_matrix(m: RFMatrix, var="lam"):
    x = sympy.Symbol(var)

    def conv(f):
        num = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(f.num.coeffs))
        den = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(f.den.coeffs))
        return num / den

    return sympy.Matrix([[conv(e) for e in row] for row in m.entries])


@pytest.fixture(scope="session")
def section6():
    return load("section6.json")


@pytest.fixture(scope="session")
def table1():
    return load("table1_n6.json")
