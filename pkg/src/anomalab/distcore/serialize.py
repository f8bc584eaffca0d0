# Copyright 2026 The anomalab Authors.

"""
JSON encoding of exact objects. Rationals are written as "p/q" strings;
coefficients as {"re": "p/q", "im": "p/q", "pi": n} meaning (re + i im) pi^n.
"""

import sympy

from anomalab.distcore.affinearg import AffineArg, as_rational
from anomalab.distcore.classicalpart import ClassicalPart
from anomalab.distcore.distexpr import DistExpr
from anomalab.distcore.fouriermonomial import FourierMonomial


def rational_str(r):
    r = sympy.Rational(r)
    return "%d/%d" % (r.p, r.q)


def encode_coefficient(c):
    c = sympy.expand(c)
    poly = sympy.Poly(c, sympy.pi)
    terms = poly.terms()
    if len(terms) == 1:
        (power,), rest = terms[0]
        re, im = sympy.re(rest), sympy.im(rest)
        if re.is_Rational and im.is_Rational:
            return {"re": rational_str(re), "im": rational_str(im), "pi": int(power)}
    return {"expr": sympy.srepr(c)}


def decode_coefficient(data):
    if "expr" in data:
        return sympy.sympify(data["expr"])
    value = as_rational(data["re"]) + sympy.I * as_rational(data["im"])
    return sympy.expand(value * sympy.pi ** int(data.get("pi", 0)))


def encode_arg(arg):
    return {"alpha": rational_str(arg.alpha), "beta": rational_str(arg.beta),
            "gamma": rational_str(arg.gamma)}


def decode_arg(data):
    return AffineArg(data["alpha"], data["beta"], data["gamma"])


def to_json(obj):
    """Encode a DistExpr, ClassicalPart or FourierMonomial as a JSON-ready dict."""
    if isinstance(obj, DistExpr):
        return {"type": "DistExpr", "arg": encode_arg(obj.arg),
                "terms": {str(k): encode_coefficient(c) for k, c in sorted(obj.terms.items())}}
    if isinstance(obj, ClassicalPart):
        return {"type": "ClassicalPart", "arg": encode_arg(obj.arg),
                "pf": {str(k): encode_coefficient(c) for k, c in sorted(obj.pf_terms.items())},
                "delta": {str(j): encode_coefficient(c) for j, c in sorted(obj.delta_terms.items())}}
    if isinstance(obj, FourierMonomial):
        return {"type": "FourierMonomial", "m": obj.m, "c": encode_coefficient(obj.c)}
    raise TypeError("cannot encode %s" % type(obj).__name__)


def from_json(data):
    kind = data.get("type")
    if kind == "DistExpr":
        return DistExpr(decode_arg(data["arg"]),
                        {int(k): decode_coefficient(c) for k, c in data["terms"].items()})
    if kind == "ClassicalPart":
        return ClassicalPart(decode_arg(data["arg"]),
                             {int(k): decode_coefficient(c) for k, c in data["pf"].items()},
                             {int(j): decode_coefficient(c) for j, c in data["delta"].items()})
    if kind == "FourierMonomial":
        return FourierMonomial(data["m"], decode_coefficient(data["c"]))
    raise TypeError("cannot decode %r" % kind)
