"""Monomials of Dwork's module and the reduction to its standard basis.

A monomial ``x1^w1 ... xn^wn`` is a plain tuple of exponents; ``n`` is the
tuple length.  Basis monomials have every exponent in ``[1, n-1]``.

The module relation used throughout is, for any index ``i`` with ``w_i >= n``::

    x^w = (n - w_i)/n * x^(w - n e_i)  +  lambda * x^(w - n e_i + 1)

where ``1`` is the all-ones vector.  The first term lowers the degree by
``n``; the second keeps it.  Repeated application along the second branch
either reaches a basis monomial or cycles, and a cycle of length ``L`` turns
into a division by ``1 - lambda^L``.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .algebra import Polynomial, RationalFunction, _as_rf
from .errors import InvalidMonomial, NotBasisMonomial, ParseError, ReductionOverflow

Monomial = tuple[int, ...]


def monomial(exponents: Sequence[int]) -> Monomial:
    """Validate and freeze an exponent vector."""
    w = tuple(int(e) for e in exponents)
    n = len(w)
    if n < 2:
        raise InvalidMonomial(f"need at least two variables, got {w}")
    if any(e < 0 for e in w):
        raise InvalidMonomial(f"negative exponent in {w}")
    if sum(w) % n:
        raise InvalidMonomial(f"exponent sum {sum(w)} of {w} is not divisible by {n}")
    return w


def parse_monomial(text: str) -> Monomial:
    """Parse ``"1,1,1,2,2,5"``; ``n`` is the number of entries."""
    try:
        parts = [int(p) for p in text.replace(" ", "").strip("()[]").split(",") if p]
    except ValueError as exc:
        raise ParseError(f"malformed monomial {text!r}") from exc
    return monomial(parts)


def format_monomial(w: Monomial) -> str:
    return "(" + ",".join(map(str, w)) + ")"


def is_basis_monomial(w: Sequence[int]) -> bool:
    n = len(w)
    return all(1 <= e <= n - 1 for e in w)


def _require_basis(w: Sequence[int]) -> Monomial:
    w = monomial(w)
    if not is_basis_monomial(w):
        raise NotBasisMonomial(f"{format_monomial(w)} has an exponent outside [1, {len(w) - 1}]")
    return w


def dimension(n: int) -> int:
    """Rank of the module: (n-1)^(n-1) - (n-1)^(n-2) + ... +- (n-1)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return sum((-1) ** (n - 1 - j) * (n - 1) ** j for j in range(1, n))


def shift(w: Monomial, m: int) -> Monomial:
    n = len(w)
    return tuple((e + m) % n for e in w)


def orbit(w: Sequence[int]) -> list[Monomial]:
    """Basis of the eigenspace containing ``w``, starting with ``w``.

    Shifts ``w + m*(1,...,1) mod n`` for ``m = 0..n-1`` in increasing order,
    skipping those that create a zero exponent.
    """
    w = _require_basis(w)
    n = len(w)
    bad = {(-e) % n for e in w}
    return [shift(w, m) for m in range(n) if m not in bad]


def orbit_key(w: Monomial) -> Monomial:
    """Canonical (lexicographically least) member of the orbit of ``w``."""
    return min(orbit(w))


def basis_monomials(n: int) -> Iterator[Monomial]:
    """Every basis monomial for degree ``n``, in lexicographic order."""

    def rec(prefix: list[int], remaining: int) -> Iterator[Monomial]:
        if remaining == 0:
            if sum(prefix) % n == 0:
                yield tuple(prefix)
            return
        for e in range(1, n):
            prefix.append(e)
            yield from rec(prefix, remaining - 1)
            prefix.pop()

    yield from rec([], n)


def distinct_orbits(n: int) -> list[list[Monomial]]:
    """All eigenspace bases, each listed from its least member."""
    seen: set[Monomial] = set()
    out = []
    for w in basis_monomials(n):
        if w in seen:
            continue
        orb = orbit(w)
        seen.update(orb)
        out.append(orb)
    return out


class Combination(dict):
    """Linear combination ``{monomial: coefficient}`` with zero terms dropped."""

    def add_term(self, mono: Monomial, coeff) -> None:
        coeff = _as_rf(coeff)
        if coeff.is_zero():
            return
        total = self[mono] + coeff if mono in self else coeff
        if total.is_zero():
            del self[mono]
        else:
            self[mono] = total

    def coefficient(self, mono: Monomial) -> RationalFunction:
        return self.get(mono, RationalFunction())

    def scaled(self, c) -> Combination:
        c = _as_rf(c)
        out = Combination()
        for mono, coeff in self.items():
            out.add_term(mono, coeff * c)
        return out

    def terms(self) -> list[tuple[RationalFunction, Monomial]]:
        return [(coeff, mono) for mono, coeff in sorted(self.items())]

    def format(self, var: str = "lambda") -> str:
        if not self:
            return "0"
        return " + ".join(f"[{c.format(var)}]*{format_monomial(m)}" for c, m in self.terms())


def pivot_first(w: Monomial) -> int:
    """First index whose exponent is at least ``n``."""
    n = len(w)
    for i, e in enumerate(w):
        if e >= n:
            return i
    raise ValueError(f"{w} is already reduced")


def pivot_largest(w: Monomial) -> int:
    """Index of the largest exponent (first one on ties)."""
    top = max(w)
    if top < len(w):
        raise ValueError(f"{w} is already reduced")
    return w.index(top)


PIVOTS: dict[str, Callable[[Monomial], int]] = {"first": pivot_first, "largest": pivot_largest}


def rewrite_step(w: Monomial, pivot: str = "first") -> tuple[Fraction, Monomial, Monomial]:
    """One application of the relation at the chosen pivot.

    Returns ``(a, v, u)`` with ``x^w = a*x^v + lambda*x^u``.  When ``a`` is
    zero, ``v`` carries a zero exponent and the term vanishes.
    """
    n = len(w)
    i = PIVOTS[pivot](w)
    v = list(w)
    v[i] -= n
    a = Fraction(n - w[i], n)
    u = tuple(e + 1 for e in v)
    return a, tuple(v), u


def _lambda_power(k: int) -> RationalFunction:
    return RationalFunction(Polynomial.monomial(k))


def _chain_cap(w: Monomial) -> int:
    n = len(w)
    return n * n * (max(w) + n)


@lru_cache(maxsize=None)
def _expand(w: Monomial, pivot: str) -> tuple[tuple[Monomial, RationalFunction], ...]:
    """Coordinates of ``x^w`` in the basis, as a frozen tuple of pairs."""
    n = len(w)
    if any(e == 0 for e in w):
        raise ReductionOverflow(f"{format_monomial(w)} has a zero exponent with nonzero coefficient")
    if is_basis_monomial(w):
        return ((w, RationalFunction.constant(1)),)

    # Follow the degree-preserving branch.  branches[t] = (a_t, v_t) and
    # x^w = sum_t lambda^t a_t x^(v_t) + lambda^T x^(chain end).
    chain = [w]
    position = {w: 0}
    branches: list[tuple[Fraction, Monomial]] = []
    cap = _chain_cap(w)
    cur = w
    cycle_start = None
    while True:
        a, v, u = rewrite_step(cur, pivot)
        if a and min(v) < 1:
            raise ReductionOverflow(f"nonzero coefficient on {format_monomial(v)}")
        branches.append((a, v))
        cur = u
        if is_basis_monomial(cur):
            break
        if cur in position:
            cycle_start = position[cur]
            break
        position[cur] = len(chain)
        chain.append(cur)
        if len(chain) > cap:
            raise ReductionOverflow(f"reduction of {format_monomial(w)} exceeded {cap} steps")

    def branch_sum(lo: int, hi: int) -> Combination:
        acc = Combination()
        for t in range(lo, hi):
            a, v = branches[t]
            if not a:
                continue
            weight = _lambda_power(t - lo) * a
            for mono, coeff in _expand(v, pivot):
                acc.add_term(mono, coeff * weight)
        return acc

    steps = len(branches)
    if cycle_start is None:
        result = branch_sum(0, steps)
        result.add_term(cur, _lambda_power(steps))
    else:
        j = cycle_start
        loop = steps - j
        # x^(m_j) (1 - lambda^loop) = sum over the cycle's branches
        denom = RationalFunction(Polynomial.constant(1) - Polynomial.monomial(loop))
        at_cycle = branch_sum(j, steps).scaled(denom.inverse())
        result = branch_sum(0, j)
        for mono, coeff in at_cycle.items():
            result.add_term(mono, coeff * _lambda_power(j))
    return tuple(sorted(result.items()))


def reduce(c, w: Sequence[int], pivot: str = "first") -> Combination:
    """Express ``c * x^w`` in the basis of monomials with exponents in ``[1, n-1]``.

    ``pivot`` selects the rewrite index: ``"first"`` (first exponent >= n) or
    ``"largest"`` (largest exponent).  Both give the same combination since
    the basis is free.
    """
    w = monomial(w)
    c = _as_rf(c)
    if c.is_zero():
        return Combination()
    out = Combination()
    for mono, coeff in _expand(w, pivot):
        out.add_term(mono, coeff * c)
    return out


def nabla(w: Sequence[int]) -> Combination:
    """Connection applied to a basis monomial: reduce(-n, w + 1)."""
    w = _require_basis(w)
    n = len(w)
    return reduce(-n, tuple(e + 1 for e in w))


def partitions(m: int) -> list[tuple[int, ...]]:
    """All partitions of ``m`` as non-increasing tuples."""
    if m < 1:
        raise ValueError("m must be positive")
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, largest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(m, m, [])
    return out


def restricted_partitions(m: int, c: int) -> list[tuple[int, ...]]:
    """Partitions of ``m`` into exactly ``c`` parts, each at most ``c - 1``."""
    if m < 1 or c < 1:
        raise ValueError("m and c must be positive")
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, slots: int, largest: int, prefix: list[int]) -> None:
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        if remaining < slots or remaining > slots * largest:
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, slots - 1, part, prefix)
            prefix.pop()

    rec(m, c, c - 1, [])
    return out


def basis_representatives(n: int) -> list[Monomial]:
    """Partition-shaped basis monomials containing a 1, degree ``n*k`` for
    ``k = 1..ceil((n-1)/2)``.  Not a minimal set of orbit representatives."""
    if n < 2:
        raise ValueError("n must be at least 2")
    reps: list[Monomial] = []
    for k in range(1, n // 2 + 1):  # ceil((n-1)/2) == n // 2
        reps.extend(p for p in restricted_partitions(n * k, n) if 1 in p)
    return reps
