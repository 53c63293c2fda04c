import json
from fractions import Fraction

import pytest

from pseudoalg.catalog import instantiate
from pseudoalg.errors import InputError
from pseudoalg.jsonio import (
    basis_from_json,
    dumps,
    lie_from_json,
    lie_to_json,
    load_file,
    params_from_json,
    table_from_json,
    table_to_json,
    tensor_from_json,
    tensor_to_json,
    uel_from_json,
    uel_to_json,
)
from pseudoalg.lie import abelian, heisenberg, sl2
from pseudoalg.tensor import Tensor
from pseudoalg.uea import UEl


@pytest.mark.parametrize("L", [abelian(2), heisenberg(), sl2()], ids=lambda L: L.name)
def test_lie_round_trip(L):
    assert lie_from_json(json.loads(dumps(lie_to_json(L)))) == L


def test_lie_schema_uses_string_rationals():
    obj = lie_to_json(heisenberg())
    assert {"i": 0, "j": 1, "k": 2, "num": "1", "den": "1"} in obj["bracket"]


def test_preset_reference():
    assert lie_from_json({"preset": "sl2"}) == sl2()
    with pytest.raises(InputError):
        lie_from_json({"preset": "e8"})


def test_uel_round_trip():
    L = heisenberg()
    a = UEl.gen(L, 1) * UEl.gen(L, 0) + Fraction(-3, 4)
    obj = uel_to_json(a)
    assert obj["basis"] == "divided-pbw"
    assert uel_from_json(obj, L) == a
    assert uel_from_json("2/3", L) == UEl.scalar(L, Fraction(2, 3))


def test_tensor_round_trip_uses_slot_keys():
    L = abelian(2)
    u = Tensor.outer(UEl.gen(L, 0), UEl.gen(L, 1)) + Fraction(1, 2)
    obj = tensor_to_json(u)
    assert set(obj["terms"][0]) == {"I", "J", "num", "den"}
    assert tensor_from_json(obj, L) == u


def test_table_round_trip():
    L = abelian(2)
    T, _ = instantiate("thm3.11/4", {"t1": 1, "t2": 2}, L)
    obj = json.loads(dumps(table_to_json(T)))
    assert all("t2" in a for a in obj["alpha"])
    back = table_from_json(obj)
    assert back.alpha == T.alpha and back.L == L


def test_params():
    L = abelian(2)
    p = params_from_json({"s1": [1, "1/2"], "t1": "-3", "h": {"terms": [{"index": [1, 0], "num": 1}]}}, L)
    assert p["s1"] == (1, Fraction(1, 2))
    assert p["t1"] == -3
    assert p["h"] == UEl.gen(L, 0)
    with pytest.raises(InputError):
        params_from_json({"zeta": 1}, L)


def test_basis_inverse_computed_when_omitted():
    L = abelian(2)
    B = basis_from_json({"P": [["2", 0], [{"terms": [{"index": [1, 0], "num": 1}]}, 1]]}, L)
    assert B.Pinv[0][0] == UEl.scalar(L, Fraction(1, 2))


@pytest.mark.parametrize(
    "bad",
    [
        {"rank": 1},
        {"rank": 0, "lie": {"preset": "abelian1"}},
        {"rank": 1, "lie": {"preset": "abelian1"}, "alpha": [{"i": 0, "j": 0, "k": 1, "t2": {"arity": 2}}]},
        {"rank": 1, "lie": {"preset": "abelian1"}, "alpha": [{"i": 0, "j": 0, "k": 0, "t2": {"arity": 3}}]},
        {"rank": 1, "lie": {"dim": 1, "bracket": [{"i": 0, "j": 0, "k": 0, "num": "x"}]}},
        {"rank": 1, "lie": {"preset": "abelian1"}, "alpha": [{"i": 0, "j": 0, "k": 0, "t2": {"arity": 2, "terms": [{"I": [0], "J": [0], "num": 1, "den": 0}]}}]},
    ],
)
def test_malformed_tables(bad):
    with pytest.raises(InputError):
        table_from_json(bad)


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [2]}) == '{\n  "a": [\n    2\n  ],\n  "b": 1\n}\n'


def test_load_file_errors(tmp_path):
    with pytest.raises(InputError):
        load_file(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(InputError):
        load_file(bad)
