"""Exact univariate algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  On top of them this module builds
dense univariate polynomials, reduced rational functions and small dense
matrices of rational functions, together with the handful of spectral tools
the connection pipeline needs (characteristic polynomials of constant
matrices, rational root extraction, evaluation and limits).

Only one polynomial variable ever exists; whether it is called ``lambda`` or
``z`` is a matter of printing.
"""
from __future__ import annotations

import math
import re
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Union

from .errors import (
    DimensionMismatch,
    DivergentAtInfinity,
    DivisionByZero,
    NonConstantEntries,
    NonRationalSpectrum,
    ParseError,
    PoleAtPoint,
    SingularMatrix,
    ZeroDenominator,
)

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def format_rational(q: Scalar) -> str:
    """Render ``q`` as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


class Polynomial:
    """Dense polynomial, coefficients stored lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and every other polynomial has a nonzero leading coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> Polynomial:
        # trusted constructor: entries already Fractions
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _ZERO

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "lambda") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if d == 0:
                body = format_rational(a)
            else:
                power = var if d == 1 else f"{var}^{d}"
                body = power if a == 1 else f"{format_rational(a)}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> Polynomial:
        return Polynomial._raw([-c for c in self.coeffs])

    def __add__(self, other) -> Polynomial:
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> Polynomial:
        return _as_poly(other) - self

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw([])
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial._raw([])
        return Polynomial._raw([x * c for x in self.coeffs])

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        other = _as_poly(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lc
        if len(rem) - 1 < db:
            return Polynomial._raw([]), self
        quot = [_ZERO] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lead
            quot[k] = q
            if q:
                for j in range(db + 1):
                    rem[k + j] -= q * bc[j]
        return Polynomial._raw(quot), Polynomial._raw(rem[:db])

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def derivative(self) -> Polynomial:
        return Polynomial._raw([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Scalar) -> Fraction:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def valuation(self) -> int:
        """Multiplicity of the root 0; -1 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def shift_down(self, k: int) -> Polynomial:
        """Divide by ``x**k``; the low coefficients must vanish."""
        assert all(not c for c in self.coeffs[:k])
        return Polynomial._raw(list(self.coeffs[k:]))

    def deflate_power(self, n: int) -> Polynomial | None:
        """Return ``q`` with ``self(x) == q(x**n)``, or ``None`` if none exists."""
        if any(c for i, c in enumerate(self.coeffs) if i % n):
            return None
        return Polynomial._raw(list(self.coeffs[::n]))

    def cleared(self) -> list[int]:
        """Primitive integer coefficient list proportional to ``self``."""
        if not self.coeffs:
            return []
        m = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * m) for c in self.coeffs]
        g = math.gcd(*ints)
        return [v // g for v in ints]


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


_TERM = re.compile(r"([+-]?)([0-9]+(?:/[0-9]+)?)?(\*?)([A-Za-z_]+)?(?:\^([0-9]+))?$")


def parse_polynomial(text: str, var: str = "lambda") -> Polynomial:
    """Inverse of :meth:`Polynomial.format`."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ParseError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for chunk in chunks:
        m = _TERM.match(chunk)
        if not m:
            raise ParseError(f"cannot parse term {chunk!r}")
        sign, num, star, name, power = m.groups()
        if name is not None and name != var:
            raise ParseError(f"unexpected variable {name!r} (expected {var!r})")
        if name is None and (star or power):
            raise ParseError(f"cannot parse term {chunk!r}")
        if num is None and name is None:
            raise ParseError(f"cannot parse term {chunk!r}")
        c = Fraction(num) if num is not None else _ONE
        if sign == "-":
            c = -c
        d = 0 if name is None else int(power or 1)
        coeffs[d] = coeffs.get(d, _ZERO) + c
    top = max(coeffs)
    return Polynomial([coeffs.get(i, 0) for i in range(top + 1)])


class RationalFunction:
    """Quotient ``num/den`` kept in canonical form.

    Canonical means: ``gcd(num, den) == 1`` and ``den`` monic.  The zero
    function is ``0/1``.  Because the form is canonical, equality is a
    structural comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Polynomial.constant(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.lc
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        self.num, self.den = num, den

    @classmethod
    def _trusted(cls, num: Polynomial, den: Polynomial) -> RationalFunction:
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def constant(cls, c: Scalar) -> RationalFunction:
        return cls._trusted(Polynomial.constant(c), Polynomial.constant(1))

    @classmethod
    def x(cls) -> RationalFunction:
        return cls._trusted(Polynomial.x(), Polynomial.constant(1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise NonConstantEntries(f"{self} depends on the variable")
        return self.num[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Polynomial)):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "lambda") -> str:
        """Compact human-readable form, e.g. ``(-1/18*lambda^2)/(lambda^6 - 1)``."""
        num = self.num.format(var)
        if self.den == 1:
            return num
        den = self.den.format(var)
        if sum(1 for c in self.num.coeffs if c) > 1:
            num = f"({num})"
        if sum(1 for c in self.den.coeffs if c) > 1 or self.den.lc != 1:
            den = f"({den})"
        return f"{num}/{den}"

    def to_string(self, var: str = "lambda") -> str:
        """Serialized ``"num / den"`` form; see :func:`parse_rational_function`."""
        return f"({self.num.format(var)}) / ({self.den.format(var)})"

    def __neg__(self) -> RationalFunction:
        return RationalFunction._trusted(-self.num, self.den)

    def __add__(self, other) -> RationalFunction:
        other = _as_rf(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            return RationalFunction(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        b1 = self.den // g
        d1 = other.den // g
        return RationalFunction(self.num * d1 + other.num * b1, self.den * d1)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        return self + (-_as_rf(other))

    def __rsub__(self, other) -> RationalFunction:
        return _as_rf(other) - self

    def __mul__(self, other) -> RationalFunction:
        if isinstance(other, (int, Fraction)):
            if not other:
                return RationalFunction()
            return RationalFunction._trusted(self.num.scale(other), self.den)
        other = _as_rf(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction()
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1) * (other.num // g2)
        den = (self.den // g2) * (other.den // g1)
        lead = den.lc
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        return RationalFunction._trusted(num, den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise DivisionByZero("inverse of the zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> RationalFunction:
        other = _as_rf(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return self * other.inverse()

    def __rtruediv__(self, other) -> RationalFunction:
        return _as_rf(other) / self

    def __pow__(self, e: int) -> RationalFunction:
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction._trusted(self.num**e, self.den**e)

    def derivative(self) -> RationalFunction:
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __call__(self, point: Scalar) -> Fraction:
        return rf_eval(self, point)

    def substitute_power(self, n: int) -> RationalFunction | None:
        """Return ``g`` with ``self(x) == g(x**n)``, or ``None``."""
        num = self.num.deflate_power(n)
        den = self.den.deflate_power(n)
        if num is None or den is None:
            return None
        return RationalFunction._trusted(num, den)


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.constant(x)
    if isinstance(x, Polynomial):
        return RationalFunction._trusted(x, Polynomial.constant(1))
    raise TypeError(f"cannot interpret {x!r} as a rational function")


def parse_rational_function(text: str, var: str = "lambda") -> RationalFunction:
    """Parse the ``"num / den"`` serialization (a bare polynomial is accepted)."""
    parts = text.split(" / ")
    if len(parts) == 1:
        return RationalFunction(parse_polynomial(parts[0], var))
    if len(parts) != 2:
        raise ParseError(f"cannot parse rational function {text!r}")
    num = parse_polynomial(parts[0].strip().strip("()"), var)
    den = parse_polynomial(parts[1].strip().strip("()"), var)
    if den.is_zero():
        raise ParseError(f"zero denominator in {text!r}")
    return RationalFunction(num, den)


def rf_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def rf_arith(op: str, a: RationalFunction, b: RationalFunction) -> RationalFunction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_eval(f: RationalFunction, point: Scalar) -> Fraction:
    d = f.den(point)
    if not d:
        raise PoleAtPoint(f"{f} has a pole at {format_rational(point)}")
    return f.num(point) / d


def reciprocal_substitute(f: RationalFunction) -> RationalFunction:
    """``f(1/y)`` as a rational function of ``y``."""
    if f.is_zero():
        return f
    dp, dq = f.num.degree, f.den.degree
    num = Polynomial._raw(list(reversed(f.num.coeffs)))
    den = Polynomial._raw(list(reversed(f.den.coeffs)))
    if dq >= dp:
        num = num * Polynomial.monomial(dq - dp)
    else:
        den = den * Polynomial.monomial(dp - dq)
    return RationalFunction(num, den)


def limit_at_infinity(f: RationalFunction) -> Fraction:
    if f.num.degree > f.den.degree:
        raise DivergentAtInfinity(f"{f} diverges at infinity")
    if f.num.degree < f.den.degree:
        return _ZERO
    return f.num.lc / f.den.lc


class RFMatrix:
    """Dense ``rows x cols`` matrix of :class:`RationalFunction` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        grid = tuple(tuple(_as_rf(e) for e in row) for row in entries)
        self.rows = len(grid)
        self.cols = len(grid[0]) if grid else 0
        if any(len(row) != self.cols for row in grid):
            raise DimensionMismatch("ragged matrix rows")
        self.entries: tuple[tuple[RationalFunction, ...], ...] = grid

    @classmethod
    def identity(cls, k: int) -> RFMatrix:
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RFMatrix:
        return cls([[0] * cols for _ in range(rows)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> RationalFunction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[RationalFunction, ...]:
        return self.entries[i]

    def tolist(self) -> list[list[RationalFunction]]:
        return [list(row) for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RFMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"RFMatrix({[[str(e) for e in row] for row in self.entries]})"

    def format(self, var: str = "lambda") -> str:
        cells = [[e.format(var) for e in row] for row in self.entries]
        widths = [max(len(r[j]) for r in cells) for j in range(self.cols)]
        return "\n".join(
            "[ " + "  ".join(c.rjust(w) for c, w in zip(r, widths)) + " ]" for r in cells
        )

    def map(self, fn) -> RFMatrix:
        return RFMatrix([[fn(e) for e in row] for row in self.entries])

    def transpose(self) -> RFMatrix:
        return RFMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __add__(self, other: RFMatrix) -> RFMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return RFMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: RFMatrix) -> RFMatrix:
        return self + (-other)

    def __neg__(self) -> RFMatrix:
        return self.map(lambda e: -e)

    def scale(self, c) -> RFMatrix:
        c = _as_rf(c)
        return self.map(lambda e: e * c)

    def __matmul__(self, other: RFMatrix) -> RFMatrix:
        return mat_mul(self, other)

    def derivative(self) -> RFMatrix:
        return mat_derivative(self)

    def inverse(self) -> RFMatrix:
        return mat_inverse(self)

    def is_constant(self) -> bool:
        return all(e.is_constant() for row in self.entries for e in row)

    def constant_entries(self) -> list[list[Fraction]]:
        if not self.is_constant():
            raise NonConstantEntries("matrix has entries depending on the variable")
        return [[e.num[0] for e in row] for row in self.entries]

    def trace(self) -> RationalFunction:
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), RationalFunction())


def mat_mul(a: RFMatrix, b: RFMatrix) -> RFMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = RationalFunction()
            for k in range(a.cols):
                x, y = a.entries[i][k], b.entries[k][j]
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return RFMatrix(out)


def mat_derivative(a: RFMatrix) -> RFMatrix:
    return a.map(RationalFunction.derivative)


def mat_inverse(a: RFMatrix) -> RFMatrix:
    """Gauss-Jordan inverse over the rational function field."""
    if a.rows != a.cols:
        raise DimensionMismatch(f"cannot invert a {a.shape} matrix")
    k = a.rows
    m = [list(row) + [RationalFunction.constant(1 if i == j else 0) for j in range(k)]
         for i, row in enumerate(a.entries)]
    for col in range(k):
        pivot = None
        for r in range(col, k):
            if not m[r][col].is_zero():
                # prefer the simplest pivot to limit expression swell
                if pivot is None or _size(m[r][col]) < _size(m[pivot][col]):
                    pivot = r
        if pivot is None:
            raise SingularMatrix("matrix is singular over the rational function field")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col].inverse()
        m[col] = [e * inv for e in m[col]]
        for r in range(k):
            if r != col and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return RFMatrix([row[k:] for row in m])


def _size(f: RationalFunction) -> int:
    return f.num.degree + f.den.degree


def char_poly(a: RFMatrix | Sequence[Sequence[Scalar]]) -> Polynomial:
    """Monic ``det(xI - a)`` of a constant matrix (Faddeev-LeVerrier)."""
    m = a.constant_entries() if isinstance(a, RFMatrix) else [[Fraction(x) for x in r] for r in a]
    k = len(m)
    if any(len(r) != k for r in m):
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    coeffs = [_ZERO] * (k + 1)
    coeffs[k] = _ONE
    aux = [[_ZERO] * k for _ in range(k)]
    for step in range(1, k + 1):
        # aux <- a * aux + c_{k-step+1} I
        prod = [[sum((m[i][t] * aux[t][j] for t in range(k)), _ZERO) for j in range(k)]
                for i in range(k)]
        for i in range(k):
            prod[i][i] += coeffs[k - step + 1]
        aux = prod
        tr = sum((m[i][t] * aux[t][i] for i in range(k) for t in range(k)), _ZERO)
        coeffs[k - step] = -tr / step
    return Polynomial(coeffs)


def _divisors(v: int) -> list[int]:
    v = abs(v)
    small, large = [], []
    d = 1
    while d * d <= v:
        if v % d == 0:
            small.append(d)
            if d * d != v:
                large.append(v // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Polynomial) -> list[Fraction]:
    """All roots of ``p`` with multiplicity, sorted ascending.

    Raises :class:`NonRationalSpectrum` when a factor without rational roots
    remains after deflation.
    """
    if p.is_zero():
        raise ValueError("rational_roots of the zero polynomial")
    roots: list[Fraction] = []
    zeros = p.valuation()
    roots.extend([_ZERO] * zeros)
    q = p.shift_down(zeros)
    if q.degree > 0:
        ints = q.cleared()
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand in roots:
                        continue
                    while q.degree > 0 and not q(cand):
                        q = q // Polynomial((-cand, 1))
                        roots.append(cand)
            if q.degree == 0:
                break
    if q.degree > 0:
        raise NonRationalSpectrum(
            f"{p.format('x')} has the factor {q.monic().format('x')} without rational roots"
        )
    return sorted(roots)


def constant_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank of a rational matrix by fraction Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank
