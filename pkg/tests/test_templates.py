from fractions import Fraction

import pytest

from pseudoalg.errors import InputError, MissingParam
from pseudoalg.lie import abelian, heisenberg
from pseudoalg.templates import eval_condition, eval_h, eval_product, eval_t2
from pseudoalg.tensor import Tensor
from pseudoalg.uea import UEl

A2 = abelian(2)
P = {"t1": Fraction(2), "t2": Fraction(-3), "s1": (Fraction(1), Fraction(0)), "s2": (Fraction(0), Fraction(1))}


def test_scalar_products():
    assert eval_product("2*t1", P) == 4
    assert eval_product("1/2*t2", P) == Fraction(-3, 2)
    assert eval_product("-1/t1", P) == Fraction(-1, 2)


def test_vector_products():
    assert eval_product("t1*s2", P) == (0, 2)
    assert eval_product("s1/t1", P) == (Fraction(1, 2), 0)


def test_product_errors():
    with pytest.raises(MissingParam):
        eval_product("2*x", P)
    with pytest.raises(InputError):
        eval_product("s1*s2", P)
    with pytest.raises(InputError):
        eval_product("t1/s1", P)
    with pytest.raises(InputError):
        eval_product("t1/0", P)


def test_t2_templates():
    one = UEl.one(A2)
    s1, s2 = UEl.gen(A2, 0), UEl.gen(A2, 1)
    got = eval_t2(A2, "1(x)s1 + t1", P)
    assert got == Tensor.outer(one, s1) + 2
    got = eval_t2(A2, "1(x)s2 + 2*s2(x)1 - t2", P)
    assert got == Tensor.outer(one, s2) + Tensor.outer(s2, one).scale(2) + 3
    assert eval_t2(A2, "0", P) == Tensor.zero(A2, 2)


def test_bare_vector_in_t2_is_rejected():
    with pytest.raises(InputError):
        eval_t2(A2, "s1", P)


def test_h_sums():
    got = eval_h(A2, "-1/t1*s1 + 1/t2", P)
    assert got == UEl.gen(A2, 0).scale(Fraction(-1, 2)) + Fraction(-1, 3)


def test_conditions():
    assert eval_condition(A2, "t1 != 0", P)
    assert not eval_condition(A2, "t1*s2 == t2*s1", P)
    assert eval_condition(A2, "[s1,s2] == 0", P)
    H = heisenberg()
    q = {"s1": (1, 0, 0), "s2": (0, 1, 0)}
    q = {k: tuple(map(Fraction, v)) for k, v in q.items()}
    assert eval_condition(H, "[s1,s2] != 0", q)
    with pytest.raises(InputError):
        eval_condition(A2, "t1 < 0", P)
