from fractions import Fraction

import pytest

import oracles
from pseudoalg.errors import AmbientMismatch, DegreeOverflow, ZeroElement
from pseudoalg.lie import abelian, heisenberg, sl2
from pseudoalg.tensor import Tensor
from pseudoalg.uea import UEl, antipode, coproduct, counit, degree, fourier


@pytest.fixture
def k1():
    return abelian(1)


@pytest.fixture
def hs():
    return heisenberg()


def mono(L, *I, c=1):
    return UEl.mono(L, I, c)


def test_divided_power_square(k1):
    d = UEl.gen(k1, 0)
    assert d * d == mono(k1, 2, c=2)


def test_heisenberg_straightening(hs):
    d1, d2 = UEl.gen(hs, 0), UEl.gen(hs, 1)
    assert d2 * d1 == mono(hs, 1, 1, 0) - mono(hs, 0, 0, 1)


def test_sl2_straightening():
    L = sl2()
    h, e, f = (UEl.gen(L, i) for i in range(3))
    assert f * e == e * f - h


def test_products_match_word_rewriting():
    for L in (heisenberg(), sl2()):
        for I in [(1, 0, 2), (0, 2, 1), (2, 1, 0)]:
            for J in [(1, 1, 0), (0, 0, 2), (2, 0, 1)]:
                a, b = UEl.mono(L, I), UEl.mono(L, J)
                assert a * b == oracles.mul(a, b)


def test_coproduct_of_one(hs):
    assert coproduct(UEl.one(hs)) == Tensor.scalar(hs, 2, 1)


def test_coproduct_divided_square(k1):
    expected = Tensor(k1, 2, {((2,), (0,)): 1, ((1,), (1,)): 1, ((0,), (2,)): 1})
    assert coproduct(mono(k1, 2)) == expected


def test_coproduct_heisenberg_d1_d3(hs):
    a = UEl.gen(hs, 0) * UEl.gen(hs, 2)
    one = UEl.one(hs)
    d1, d3 = UEl.gen(hs, 0), UEl.gen(hs, 2)
    expected = Tensor.outer(a, one) + Tensor.outer(d1, d3) + Tensor.outer(d3, d1) + Tensor.outer(one, a)
    assert coproduct(a) == expected
    assert coproduct(a) == oracles.coproduct(a)


def test_counit(k1):
    assert counit(UEl.one(k1)) == 1
    assert counit(mono(k1, 3)) == 0
    assert counit(UEl.scalar(k1, 5) - UEl.gen(k1, 0).scale(2)) == 5


def test_antipode_divided_square(k1):
    assert antipode(mono(k1, 2)) == mono(k1, 2)
    assert antipode(mono(k1, 2)) == oracles.antipode(mono(k1, 2))


def test_antipode_unit(k1):
    assert antipode(UEl.one(k1)) == UEl.one(k1)


def test_antipode_heisenberg(hs):
    a = UEl.gen(hs, 0) * UEl.gen(hs, 1)
    assert antipode(a) == mono(hs, 1, 1, 0) - mono(hs, 0, 0, 1)
    assert antipode(a) == oracles.antipode(a)


def test_degree(k1, hs):
    assert degree(mono(k1, 3)) == 3
    assert degree(UEl.one(k1)) == 0
    assert degree(UEl.gen(hs, 0) + mono(hs, 2, 0, 0)) == 2
    with pytest.raises(ZeroElement):
        degree(UEl.zero(k1))


def test_fourier_forward(k1):
    one, d = UEl.one(k1), UEl.gen(k1, 0)
    assert fourier(Tensor.outer(one, d)) == Tensor.outer(one, d) - Tensor.outer(d, one)


def test_fourier_round_trip(k1):
    d = UEl.gen(k1, 0)
    b = Tensor.outer(d, d)
    assert fourier(fourier(b), "inverse") == b


def test_fourier_fixes_first_slot_elements(hs):
    h = UEl.gen(hs, 1) * UEl.gen(hs, 0) + 3
    b = Tensor.outer(h, UEl.one(hs))
    assert fourier(b) == b


def test_mixed_ambients_rejected(k1, hs):
    with pytest.raises(AmbientMismatch):
        UEl.gen(k1, 0) * UEl.gen(hs, 0)


def test_degree_guard(k1, monkeypatch):
    monkeypatch.setenv("PSEUDOALG_MAX_DEGREE", "3")
    with pytest.raises(DegreeOverflow):
        mono(k1, 2) * mono(k1, 2)


def test_scalars_coerce(k1):
    assert UEl.one(k1) + 1 == UEl.scalar(k1, 2)
    assert (UEl.gen(k1, 0) * Fraction(1, 2)).terms == {(1,): Fraction(1, 2)}
