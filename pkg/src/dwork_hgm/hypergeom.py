"""Hypergeometric parameters of an eigenspace and their verification."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import (
    Polynomial,
    char_poly,
    format_rational,
    parse_rational,
    poly_gcd,
    rational_roots,
)
from .connection import run_pipeline
from .dwork import _require_basis
from .errors import AmbiguousUnitBeta, MissingUnitBeta, ZeroDenominatorInRecurrence


def _frac_part(q: Fraction) -> Fraction:
    return q - math.floor(q)


@dataclass(frozen=True)
class HGParams:
    """Numerator parameters ``alphas`` and denominator parameters ``betas``
    (the trivial denominator parameter 1 is left out)."""

    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(sorted(Fraction(a) for a in self.alphas)))
        object.__setattr__(self, "betas", tuple(sorted(Fraction(b) for b in self.betas)))

    def to_json(self) -> dict:
        return {
            "alphas": [format_rational(a) for a in self.alphas],
            "betas": [format_rational(b) for b in self.betas],
        }

    @classmethod
    def from_json(cls, data: dict) -> HGParams:
        return cls(
            tuple(parse_rational(a) for a in data["alphas"]),
            tuple(parse_rational(b) for b in data["betas"]),
        )

    def __str__(self) -> str:
        a = ", ".join(map(format_rational, self.alphas))
        b = ", ".join(map(format_rational, self.betas))
        return f"alphas=[{a}] betas=[{b}]"


def extract_params(w: Sequence[int]) -> HGParams:
    """Read the parameters off the residues at infinity and at zero.

    ``alphas`` are the eigenvalues of the residue at infinity (mod 1).
    ``betas`` are ``1 - e`` for the eigenvalues ``e`` of the residue at zero,
    minus the single value coming from ``e = 0``.
    """
    w = _require_basis(w)
    p = run_pipeline(w)
    alphas = [_frac_part(e) for e in rational_roots(char_poly(p.res_infinity))]
    exps = rational_roots(char_poly(p.res_zero))
    zeros = exps.count(0)
    if zeros == 0:
        raise MissingUnitBeta(f"residue at 0 of {w} has no zero eigenvalue")
    if zeros > 1:
        raise AmbiguousUnitBeta(f"residue at 0 of {w} has a repeated zero eigenvalue")
    # 1 - e taken into (0, 1]
    betas = [_frac_part(1 - e) or Fraction(1) for e in exps if e != 0]
    return HGParams(tuple(alphas), tuple(betas))


def katz_oracle(w: Sequence[int]) -> HGParams:
    """Parameters by cancelling ``w`` against ``(0, 1, ..., n-1)`` as multisets."""
    w = _require_basis(w)
    n = len(w)
    left = Counter(w)
    right = Counter(range(n))
    common = left & right
    left -= common
    right -= common
    alphas = [Fraction(e, n) for e in left.elements()]
    betas = [Fraction(k, n) for k in right.elements() if k != 0]
    return HGParams(tuple(alphas), tuple(betas))


def pochhammer(x, k: int) -> Fraction:
    if k < 0:
        raise ValueError("k must be non-negative")
    out = Fraction(1)
    x = Fraction(x)
    for i in range(k):
        out *= x + i
    return out


def hg_series(params: HGParams, order: int) -> list[Fraction]:
    """Coefficients ``c_0..c_order`` of the hypergeometric series."""
    coeffs = [Fraction(1)]
    for k in range(order):
        den = math.prod((b + k for b in params.betas), start=Fraction(1)) * (k + 1)
        if not den:
            raise ZeroDenominatorInRecurrence(f"denominator parameter vanishes at step {k}")
        num = math.prod((a + k for a in params.alphas), start=Fraction(1))
        coeffs.append(coeffs[-1] * num / den)
    return coeffs


def _mul_trunc(p: Sequence[Fraction], s: Sequence[Fraction], top: int) -> list[Fraction]:
    out = [Fraction(0)] * (top + 1)
    for i, a in enumerate(p):
        if not a or i > top:
            continue
        for j in range(min(len(s), top + 1 - i)):
            if s[j]:
                out[i + j] += a * s[j]
    return out


def _derivative(s: list[Fraction]) -> list[Fraction]:
    return [c * i for i, c in enumerate(s)][1:]


def verify_annihilation(w: Sequence[int], order: int = 60, params: HGParams | None = None) -> bool:
    """Check that ``F(lambda^n)`` solves the scalar equation of the eigenspace.

    The scalar equation ``y^(k) = sum_j c_j y^(j-1)`` comes from the last
    row of the companion matrix.  Denominators are cleared and the residual
    is compared with zero through ``order - deg(denominator) - k`` in exact
    arithmetic.  ``params`` overrides the extracted parameters.
    """
    w = _require_basis(w)
    n = len(w)
    p = run_pipeline(w)
    k = len(p.block.basis)
    if order < k * n + n:
        raise ValueError(f"order must be at least {k * n + n}")
    params = extract_params(w) if params is None else params

    last = p.companion.row(k - 1)
    den = Polynomial.constant(1)
    for c in last:
        den = den * (c.den // poly_gcd(den, c.den))
    cleared = [(c.num * (den // c.den)).coeffs for c in last]

    m = order // n
    z_coeffs = hg_series(params, m)
    y = [Fraction(0)] * (n * m + 1)
    for i, c in enumerate(z_coeffs):
        y[n * i] = c

    top = order - den.degree - k
    if top < 0:
        raise ValueError("truncation order too small for this equation")
    derivs = [y]
    for _ in range(k):
        derivs.append(_derivative(derivs[-1]))
    residual = _mul_trunc(den.coeffs, derivs[k], top)
    for j, q in enumerate(cleared):
        term = _mul_trunc(q, derivs[j], top)
        residual = [r - t for r, t in zip(residual, term)]
    return not any(residual)

