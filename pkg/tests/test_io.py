import json

import numpy as np
import pytest
from hypothesis import given, settings

from bcspectra import BCMatrix, BiComplex, Hyperbolic, ParseError
from bcspectra import io
from bcspectra.generators import random_bc_matrix

from .conftest import bicomplexes


@settings(max_examples=100)
@given(bicomplexes)
def test_bicomplex_round_trip(z):
    assert io.bicomplex_from_json(json.loads(io.dumps(io.bicomplex_to_json(z)))) == z


@pytest.mark.parametrize(
    "obj, expected",
    [
        ({"z1": [1, 2], "z2": [3, 4]}, BiComplex(1 + 2j, 3 + 4j)),
        ({"z1": [1, 0]}, BiComplex(1)),
        ([[0, 0], [1, 0]], BiComplex(0, 1)),
        (2.5, BiComplex(2.5)),
        ([0, 1], BiComplex(1j)),
    ],
)
def test_bicomplex_forms(obj, expected):
    assert io.bicomplex_from_json(obj) == expected


@pytest.mark.parametrize("obj", [{"z2": [1, 0]}, "1", [1, 2, 3], [True, 0], {"z1": [float("nan"), 0]}])
def test_bicomplex_rejects(obj):
    with pytest.raises(ParseError):
        io.bicomplex_from_json(obj)


def test_hyperbolic_round_trip():
    h = Hyperbolic(1.5, -0.25)
    assert io.hyperbolic_from_json(io.hyperbolic_to_json(h)) == h
    with pytest.raises(ParseError):
        io.hyperbolic_from_json({"h1": 1})


def test_matrix_round_trip(rng):
    m = random_bc_matrix(rng, 3, 2)
    back = io.matrix_from_json(json.loads(io.dumps(io.matrix_to_json(m))))
    assert back == m


def test_matrix_nested_rows():
    obj = {"rows": 2, "cols": 2, "entries": [[1, 0], [0, {"z1": [0, 0], "z2": [1, 0]}]]}
    m = io.matrix_from_json(obj)
    assert np.array_equal(m.z1, np.diag([1, 0]))
    assert np.array_equal(m.z2, np.diag([0, 1]))


@pytest.mark.parametrize(
    "obj",
    [
        [],
        {"rows": 2, "cols": 2},
        {"rows": 2, "cols": 2, "entries": [1, 2, 3]},
        {"rows": -1, "cols": 2, "entries": []},
    ],
)
def test_matrix_rejects(obj):
    with pytest.raises(ParseError):
        io.matrix_from_json(obj)


def test_load_tuple():
    m = io.matrix_to_json(BCMatrix.identity(2))
    assert io.load_tuple({"matrices": [m, m]}) == [BCMatrix.identity(2)] * 2
    for bad in ({"matrices": []}, {}, {"matrices": m}):
        with pytest.raises(ParseError):
            io.load_tuple(bad)


def test_load_pair():
    m = io.matrix_to_json(BCMatrix.identity(2))
    q = {"z1": {"z1": [1, 0]}, "z2": 2}
    data = io.load_pair({"T1": m, "T2": m, "queries": [q]})
    assert data.queries == [(BiComplex(1), BiComplex(2))]
    assert io.load_pair({"matrices": [m, m]}).queries == []
    for bad in (
        {"matrices": [m, m, m]},
        {"T1": m, "T2": m, "T3": m},
        {"T1": m},
        {"T1": m, "T2": m, "queries": [{"z1": 1}]},
        {"matrices": [m, m], "T1": m},
    ):
        with pytest.raises(ParseError):
            io.load_pair(bad)


def test_load_json_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        io.load_json(bad)
    with pytest.raises(ParseError):
        io.load_json(tmp_path / "missing.json")


def test_dumps_is_stable():
    assert io.dumps({"b": 1, "a": [1.0, 2.0]}) == io.dumps({"a": [1.0, 2.0], "b": 1})
    with pytest.raises(ValueError):
        io.dumps({"x": float("inf")})
