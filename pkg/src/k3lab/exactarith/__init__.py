"""Exact arithmetic kernel: rationals, polynomials, rational functions.

Scalars are `fractions.Fraction` throughout; nothing in this package ever
touches floating point.  The workhorse types are

  MPoly    sparse multivariate polynomial over Q with a fixed, sorted
           variable tuple and graded-lex term order,
  RatFunc  quotient of two MPoly in canonical lowest terms,
  UPoly    dense univariate polynomial over a coefficient field (Q or a
           rational function field in parameters),
  QuotElem residue class ring element modulo a monic UPoly.

`parse_expr` / `format_*` implement the text expression grammar used by the
model and lattice file formats.
"""

from k3lab.exactarith.mpoly import MPoly, mpoly_gcd, mpoly_sqrt
from k3lab.exactarith.ratfunc import (
    FracField,
    QQ,
    RatFunc,
    ratfunc_sqrt,
    substitute,
)
from k3lab.exactarith.upoly import (
    INF,
    UPoly,
    poly_gcd,
    squarefree_decomposition,
    valuation_at,
)
from k3lab.exactarith.quotring import QuotElem, quot_mul
from k3lab.exactarith.parser import ExprError, parse_expr, format_ratfunc

__all__ = [
    "MPoly",
    "mpoly_gcd",
    "mpoly_sqrt",
    "FracField",
    "QQ",
    "RatFunc",
    "ratfunc_sqrt",
    "substitute",
    "INF",
    "UPoly",
    "poly_gcd",
    "squarefree_decomposition",
    "valuation_at",
    "QuotElem",
    "quot_mul",
    "ExprError",
    "parse_expr",
    "format_ratfunc",
]
