"""Connection blocks and their reduction to a Fuchsian system in ``z = lambda^n``.

Pipeline for one eigenspace::

    connection_block -> system_matrix -> cyclic_change_of_basis
        -> companion_system -> regularize -> change_variable
        -> residue_zero / residue_one / residue_infinity
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    Polynomial,
    RationalFunction,
    RFMatrix,
    limit_at_infinity,
    reciprocal_substitute,
    rf_eval,
)
from .dwork import Monomial, format_monomial, nabla, orbit
from .errors import (
    CyclicVectorFailure,
    DworkError,
    HigherOrderPole,
    NotCompanionForm,
    NotPowerCompatible,
    PoleAtPoint,
    SingularMatrix,
    StillSingular,
)


@dataclass(frozen=True)
class ConnectionBlock:
    """Entry ``(i, j)`` of ``mat`` is the coefficient of ``basis[i]`` in
    the connection applied to ``basis[j]`` (images stored as columns)."""

    basis: tuple[Monomial, ...]
    mat: RFMatrix


@dataclass(frozen=True)
class RegularizedSystem:
    """System ``dy/dvar = (1/var) * N(var) * y``."""

    N: RFMatrix
    var: str
    n: int


def connection_block(w: Sequence[int]) -> ConnectionBlock:
    basis = tuple(orbit(w))
    index = {b: i for i, b in enumerate(basis)}
    k = len(basis)
    grid = [[RationalFunction() for _ in range(k)] for _ in range(k)]
    for j, b in enumerate(basis):
        for mono, coeff in nabla(b).items():
            if mono not in index:
                raise DworkError(
                    f"connection of {format_monomial(b)} leaves the eigenspace at {format_monomial(mono)}"
                )
            grid[index[mono]][j] = coeff
    return ConnectionBlock(basis, RFMatrix(grid))


def system_matrix(block: ConnectionBlock) -> RFMatrix:
    """Matrix ``A`` of ``dy/dlambda = A y``: the transpose of the block."""
    return block.mat.transpose()


def cyclic_change_of_basis(a: RFMatrix) -> RFMatrix:
    """Rows ``e_1, r_1' + r_1 A, ...`` expressing successive derivatives of ``y_1``."""
    k = a.rows
    first = tuple(RationalFunction.constant(1 if j == 0 else 0) for j in range(k))
    rows = [first]
    for _ in range(k - 1):
        prev = RFMatrix([rows[-1]])
        nxt = prev.derivative() + prev @ a
        rows.append(nxt.row(0))
    s = RFMatrix(rows)
    try:
        s.inverse()
    except SingularMatrix as exc:
        raise CyclicVectorFailure("the first basis vector is not cyclic") from exc
    return s


def companion_system(a: RFMatrix, s: RFMatrix) -> RFMatrix:
    """Gauge transform ``S A S^-1 + S' S^-1``."""
    s_inv = s.inverse()
    return s @ a @ s_inv + s.derivative() @ s_inv


def is_companion(m: RFMatrix) -> bool:
    """Rows above the last are ``e_{i+1}``; the last row is unconstrained."""
    k = m.rows
    for i in range(k - 1):
        for j in range(k):
            if m[i, j] != (1 if j == i + 1 else 0):
                return False
    return True


def regularize(a_s: RFMatrix, n: int) -> RegularizedSystem:
    """Rescale ``y_i -> lambda^(i-1) y^(i-1)`` so the pole at 0 becomes simple.

    Entry ``(i, j)`` (1-based) is multiplied by ``lambda^(i-j+1)`` and
    ``i - 1`` is added on the diagonal.  Off the last row this only touches
    the superdiagonal ones (factor ``lambda^0``) and the diagonal.
    """
    if not is_companion(a_s):
        raise NotCompanionForm("regularize expects a companion matrix")
    k = a_s.rows
    grid = []
    for i in range(k):
        row = []
        for j in range(k):
            e = a_s[i, j]
            if not e.is_zero():
                # nonzero entries of a companion matrix have j <= i + 1
                e = e * RationalFunction(Polynomial.monomial(i - j + 1))
            if i == j:
                e = e + i
            if e.den(0) == 0:
                raise StillSingular(f"entry ({i + 1},{j + 1}) = {e} still has a pole at 0")
            row.append(e)
        grid.append(row)
    return RegularizedSystem(RFMatrix(grid), "lambda", n)


def change_variable(r: RegularizedSystem, n: int | None = None) -> RegularizedSystem:
    """Substitute ``z = lambda^n``: ``N_z(z) = N(lambda) / n``."""
    n = r.n if n is None else n
    if r.var == "z":
        return r
    grid = []
    for i, row in enumerate(r.N.entries):
        new_row = []
        for j, e in enumerate(row):
            g = e.substitute_power(n)
            if g is None:
                raise NotPowerCompatible(f"entry ({i + 1},{j + 1}) = {e} is not a function of lambda^{n}")
            new_row.append(g * Fraction(1, n))
        grid.append(new_row)
    return RegularizedSystem(RFMatrix(grid), "z", n)


def residue_zero(r: RegularizedSystem) -> RFMatrix:
    try:
        return RFMatrix([[rf_eval(e, 0) for e in row] for row in r.N.entries])
    except PoleAtPoint as exc:
        raise StillSingular("system is not regular at 0") from exc


def residue_infinity(r: RegularizedSystem) -> RFMatrix:
    """Residue at ``zeta = 0`` after ``z = 1/zeta``: minus the limit of ``N_z``."""
    return RFMatrix([[-limit_at_infinity(e) for e in row] for row in r.N.entries])


def infinity_system(r: RegularizedSystem) -> RegularizedSystem:
    """The system at infinity in ``zeta = 1/z``: ``-N_z(1/zeta)``.

    Its value at ``zeta = 0`` is :func:`residue_infinity`.
    """
    m = r.N.map(lambda e: -reciprocal_substitute(e))
    return RegularizedSystem(m, "zeta", r.n)


def _residue_one_entry(f: RationalFunction) -> Fraction:
    # Res_{z=1} f(z)/z for f with at most a simple pole at 1
    if f.den(1):
        return Fraction(0)
    reduced, rem = divmod(f.den, Polynomial((-1, 1)))
    assert rem.is_zero()
    if not reduced(1):
        raise HigherOrderPole(f"{f.format('z')} has a pole of order > 1 at z = 1")
    return f.num(1) / reduced(1)


def residue_one(r: RegularizedSystem) -> RFMatrix:
    return RFMatrix([[_residue_one_entry(e) for e in row] for row in r.N.entries])


@dataclass(frozen=True)
class Pipeline:
    """Every intermediate stage for one eigenspace."""

    block: ConnectionBlock
    system: RFMatrix
    cob: RFMatrix
    companion: RFMatrix
    regularized: RegularizedSystem
    zsystem: RegularizedSystem
    res_zero: RFMatrix
    res_one: RFMatrix
    res_infinity: RFMatrix

    @property
    def n(self) -> int:
        return self.zsystem.n


def run_pipeline(w: Sequence[int]) -> Pipeline:
    block = connection_block(w)
    n = len(block.basis[0])
    a = system_matrix(block)
    s = cyclic_change_of_basis(a)
    a_s = companion_system(a, s)
    reg = regularize(a_s, n)
    zs = change_variable(reg, n)
    return Pipeline(
        block=block,
        system=a,
        cob=s,
        companion=a_s,
        regularized=reg,
        zsystem=zs,
        res_zero=residue_zero(zs),
        res_one=residue_one(zs),
        res_infinity=residue_infinity(zs),
    )
