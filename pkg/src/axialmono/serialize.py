"""JSON forms of multivectors, polynomials and axial quadruples.

Rationals are ``{"num": "1", "den": "2"}``, complex numbers
``{"re": "...", "im": "..."}`` and plain floats ``{"re": "..."}``, all as
decimal strings; floats carry 17 significant digits so they round-trip.
"""
from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .axial import AxialQuadruple, RadialPoly
from .clifford import Multivector, blade_from_indices, blade_indices
from .mpoly import CliffPoly
from .spherical import InnerMonogenic


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def dump_scalar(c) -> dict:
    if isinstance(c, (bool, np.bool_)):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, (int, np.integer, Fraction)):
        c = Fraction(int(c)) if not isinstance(c, Fraction) else c
        return {"num": str(c.numerator), "den": str(c.denominator)}
    if isinstance(c, (complex, np.complexfloating)):
        return {"re": fmt_float(c.real), "im": fmt_float(c.imag)}
    if isinstance(c, (float, np.floating)):
        return {"re": fmt_float(c)}
    raise TypeError(f"cannot serialize coefficient of type {type(c).__name__}")


def load_scalar(obj):
    if "num" in obj:
        return Fraction(int(obj["num"]), int(obj.get("den", "1")))
    if "im" in obj:
        return complex(float(obj["re"]), float(obj["im"]))
    return float(obj["re"])


def dump_multivector(a: Multivector) -> dict:
    return {"m": a.m, "terms": [{"blade": blade_indices(b), "coef": dump_scalar(c)}
                                for b, c in sorted(a.items())]}


def load_multivector(obj) -> Multivector:
    m = int(obj["m"])
    return Multivector(m, {blade_from_indices(t["blade"]): load_scalar(t["coef"])
                           for t in obj["terms"]})


def dump_cliffpoly(p: CliffPoly) -> dict:
    grouped: dict[tuple, dict[int, object]] = {}
    for (e, b), c in p.items():
        grouped.setdefault(e, {})[b] = c
    terms = [{"exp": list(e), "coef": dump_multivector(Multivector(p.m, grouped[e]))}
             for e in sorted(grouped, reverse=True)]
    return {"m": p.m, "terms": terms}


def load_cliffpoly(obj) -> CliffPoly:
    m = int(obj["m"])
    terms: dict = {}
    for t in obj["terms"]:
        e = tuple(int(v) for v in t["exp"])
        mv = load_multivector(t["coef"])
        if mv.m != m:
            raise ValueError("coefficient dimension does not match polynomial")
        for b, c in mv.items():
            key = (e, b)
            terms[key] = terms.get(key, 0) + c
    return CliffPoly(m, terms)


def dump_radial(f: RadialPoly) -> dict:
    return {"terms": [{"x0": i, "r": j, "coef": dump_scalar(c)}
                      for (i, j), c in sorted(f.items())]}


def load_radial(obj) -> RadialPoly:
    return RadialPoly({(int(t["x0"]), int(t["r"])): load_scalar(t["coef"]) for t in obj["terms"]})


def dump_quadruple(q: AxialQuadruple) -> dict:
    out = {"m": q.m, "k": q.k, "ell": q.ell, "P": dump_cliffpoly(q.P.poly)}
    for name, f in zip("ABCD", q.profiles()):
        out[name] = dump_radial(f)
    return out


def load_quadruple(obj) -> AxialQuadruple:
    P = InnerMonogenic(int(obj["m"]), int(obj["k"]), int(obj["ell"]), load_cliffpoly(obj["P"]))
    return AxialQuadruple(*(load_radial(obj[name]) for name in "ABCD"), P)


def load(obj):
    """Dispatch on shape: quadruple, polynomial or multivector.

    An empty term list reads as a zero multivector; use :func:`load_cliffpoly`
    when a polynomial is expected.
    """
    if "P" in obj:
        return load_quadruple(obj)
    if obj.get("terms") and "exp" in obj["terms"][0]:
        return load_cliffpoly(obj)
    return load_multivector(obj)


def to_json(obj) -> dict:
    """JSON-ready form of library objects, recursing into lists and dicts."""
    if isinstance(obj, CliffPoly):
        return dump_cliffpoly(obj)
    if isinstance(obj, Multivector):
        return dump_multivector(obj)
    if isinstance(obj, RadialPoly):
        return dump_radial(obj)
    if isinstance(obj, AxialQuadruple):
        return dump_quadruple(obj)
    if isinstance(obj, InnerMonogenic):
        return {"m": obj.m, "k": obj.k, "ell": obj.ell, "poly": dump_cliffpoly(obj.poly)}
    if isinstance(obj, (Fraction, complex, np.complexfloating)):
        return dump_scalar(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return [to_json(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    return obj


def _emit(o) -> str:
    # json.dumps ignores float formatting hooks, so containers are walked here
    if isinstance(o, float):
        if not np.isfinite(o):
            return json.dumps(o)
        text = fmt_float(o)
        return text if any(ch in text for ch in ".en") else text + ".0"
    if isinstance(o, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_emit(v)}"
                               for k, v in sorted(o.items())) + "}"
    if isinstance(o, list):
        return "[" + ", ".join(_emit(v) for v in o) + "]"
    return json.dumps(o)


def dumps(obj) -> str:
    """Serialize with floats at 17 significant digits and sorted keys."""
    return _emit(to_json(obj))


def read_path(path: str):
    with open(path) as fh:
        return load(json.load(fh))
