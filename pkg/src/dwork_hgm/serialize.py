"""JSON shapes for matrices, combinations and pipeline stages.

Rationals are ``"p/q"`` strings (``"p"`` when integral), rational functions
are ``"num / den"`` strings in a named variable, monomials are integer lists.
"""
from __future__ import annotations

from .algebra import RFMatrix, char_poly, format_rational, parse_rational_function, rational_roots
from .connection import Pipeline
from .dwork import Combination


def matrix_to_json(m: RFMatrix, var: str = "lambda") -> dict:
    return {"variable": var, "entries": [[e.to_string(var) for e in row] for row in m.entries]}


def matrix_from_json(data: dict) -> RFMatrix:
    var = data["variable"]
    return RFMatrix([[parse_rational_function(e, var) for e in row] for row in data["entries"]])


def combination_to_json(c: Combination, var: str = "lambda") -> dict:
    return {
        "variable": var,
        "terms": [{"coeff": coeff.to_string(var), "monomial": list(mono)} for coeff, mono in c.terms()],
    }


def combination_from_json(data: dict) -> Combination:
    out = Combination()
    for term in data["terms"]:
        out.add_term(tuple(term["monomial"]), parse_rational_function(term["coeff"], data["variable"]))
    return out


def pipeline_to_json(p: Pipeline) -> dict:
    return {
        "basis": [list(b) for b in p.block.basis],
        "connection_block": matrix_to_json(p.block.mat),
        "system": matrix_to_json(p.system),
        "change_of_basis": matrix_to_json(p.cob),
        "companion": matrix_to_json(p.companion),
        "regularized": matrix_to_json(p.regularized.N, "lambda"),
        "z_system": matrix_to_json(p.zsystem.N, "z"),
        "residue_zero": matrix_to_json(p.res_zero, "z"),
        "residue_one": matrix_to_json(p.res_one, "z"),
        "residue_infinity": matrix_to_json(p.res_infinity, "z"),
        "eigenvalues": {
            "zero": [format_rational(e) for e in rational_roots(char_poly(p.res_zero))],
            "infinity": [format_rational(e) for e in rational_roots(char_poly(p.res_infinity))],
        },
    }
