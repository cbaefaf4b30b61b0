"""Parameter tables over the basis representatives of one degree."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .algebra import format_rational, parse_rational
from .dwork import Monomial, basis_representatives, format_monomial
from .hypergeom import extract_params, katz_oracle


@dataclass(frozen=True)
class TableRow:
    monomial: Monomial
    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]
    oracle_match: bool

    def to_json(self) -> dict:
        return {
            "monomial": list(self.monomial),
            "alphas": [format_rational(a) for a in self.alphas],
            "betas": [format_rational(b) for b in self.betas],
            "oracle_match": self.oracle_match,
        }

    @classmethod
    def from_json(cls, data: dict) -> TableRow:
        return cls(
            tuple(data["monomial"]),
            tuple(parse_rational(a) for a in data["alphas"]),
            tuple(parse_rational(b) for b in data["betas"]),
            bool(data["oracle_match"]),
        )


def table_row(w: Monomial) -> TableRow:
    params = extract_params(w)
    return TableRow(w, params.alphas, params.betas, params == katz_oracle(w))


def build_table(n: int, jobs: int = 1) -> list[TableRow]:
    """One row per basis representative, in enumeration order."""
    reps = basis_representatives(n)
    if jobs <= 1:
        return [table_row(w) for w in reps]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(table_row, reps))


def format_table(rows: list[TableRow], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in rows], indent=2)
    header = ("monomial", "alphas", "betas", "match")
    body = [
        (
            format_monomial(r.monomial),
            ", ".join(map(format_rational, r.alphas)),
            ", ".join(map(format_rational, r.betas)),
            "yes" if r.oracle_match else "NO",
        )
        for r in rows
    ]
    widths = [max(len(line[i]) for line in [header, *body]) for i in range(4)]
    lines = [" | ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in [header, *body]]
    return "\n".join(lines)


def parse_table(text: str) -> list[TableRow]:
    return [TableRow.from_json(d) for d in json.loads(text)]
