import json
from fractions import Fraction

import numpy as np
from hypothesis import given

from axialmono import serialize
from axialmono.axial import block, extract
from axialmono.clifford import Multivector
from axialmono.mpoly import CliffPoly
from axialmono.spherical import inner_monogenic_basis
from strategies import multivectors, polys


def _round(obj):
    return serialize.load(json.loads(serialize.dumps(obj)))


def test_scalars():
    for c in (Fraction(-3, 7), 5, 0.1, 1e-300, complex(0.25, -1 / 3)):
        back = serialize.load_scalar(json.loads(json.dumps(serialize.dump_scalar(c))))
        assert back == c
    assert serialize.dump_scalar(Fraction(1, 2)) == {"num": "1", "den": "2"}


def test_float_formatting():
    assert serialize.dumps({"a": 1.0, "b": 0.1}) == '{"a": 1.0, "b": 0.10000000000000001}'
    assert serialize.dumps([np.float64(2.5), np.int64(3), True]) == "[2.5, 3, true]"


def test_exhaustive_small_multivectors():
    for m in (1, 2):
        for mask in range(1 << (1 << m)):
            a = Multivector(m, {b: Fraction(b + 1, 2) for b in range(1 << m) if mask >> b & 1})
            assert _round(a) == a


@given(multivectors())
def test_multivector_round_trip(a):
    assert _round(a) == a


@given(polys(max_degree=3))
def test_poly_round_trip(p):
    back = serialize.load_cliffpoly(json.loads(serialize.dumps(p)))
    assert back == p


def test_complex_multivector_round_trip():
    a = Multivector(3, {0: 1 + 2j, 5: -0.5j})
    assert _round(a) == a


def test_quadruple_round_trip():
    P = inner_monogenic_basis(3, 1, 2)[0]
    q = extract(block(1, P, 1), P)
    back = serialize.load(json.loads(serialize.dumps(q)))
    assert back.profiles() == q.profiles()
    assert back.P.poly == P.poly and (back.m, back.k, back.ell) == (3, 1, 2)


def test_dumps_is_deterministic():
    p = CliffPoly.vector_var(3) * CliffPoly.norm_sq(3)
    assert serialize.dumps(p) == serialize.dumps(CliffPoly(3, dict(reversed(list(p.items())))))
