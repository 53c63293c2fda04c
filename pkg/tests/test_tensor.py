import random

import pytest

from pseudoalg.errors import ArityMismatch
from pseudoalg.lie import abelian, heisenberg
from pseudoalg.tensor import GaloisForm, Tensor, galois_decompose, lift, swap, t_mul
from pseudoalg.uea import UEl
from pseudoalg.verify import random_uel


@pytest.fixture
def k1():
    return abelian(1)


def test_slotwise_product_with_units(k1):
    one, d = UEl.one(k1), UEl.gen(k1, 0)
    assert t_mul(Tensor.outer(one, d), Tensor.outer(d, one)) == Tensor.outer(d, d)


def test_slotwise_product_squares(k1):
    one, d = UEl.one(k1), UEl.gen(k1, 0)
    assert Tensor.outer(d, one) * Tensor.outer(d, one) == Tensor.outer(UEl.mono(k1, (2,), 2), one)


def test_slotwise_product_straightens():
    L = heisenberg()
    one, d1, d2 = UEl.one(L), UEl.gen(L, 0), UEl.gen(L, 1)
    assert Tensor.outer(d2, one) * Tensor.outer(d1, one) == Tensor.outer(d1 * d2 - UEl.gen(L, 2), one)


def test_lift_delta_right(k1):
    one, d = UEl.one(k1), UEl.gen(k1, 0)
    assert lift(Tensor.outer(one, d), "delta_right") == Tensor.outer(one, d, one) + Tensor.outer(one, one, d)


def test_lift_pad_right(k1):
    h = UEl.mono(k1, (3,), 2)
    one = UEl.one(k1)
    assert lift(Tensor.outer(h, one), "pad_right") == Tensor.outer(h, one, one)


def test_lift_delta_left(k1):
    one, d = UEl.one(k1), UEl.gen(k1, 0)
    d2 = UEl.mono(k1, (2,))
    expected = Tensor.outer(d2, one, one) + Tensor.outer(d, d, one) + Tensor.outer(one, d2, one)
    assert lift(Tensor.outer(d2, one), "delta_left") == expected


def test_lift_rejects_bad_arguments(k1):
    with pytest.raises(ArityMismatch):
        lift(Tensor.scalar(k1, 3, 1), "pad_left")
    with pytest.raises(ValueError):
        lift(Tensor.scalar(k1, 2, 1), "sideways")


def test_sigma(k1):
    one, d = UEl.one(k1), UEl.gen(k1, 0)
    assert swap(Tensor.outer(one, d), "sigma") == Tensor.outer(d, one)


def test_swap_12_single_term():
    L = abelian(3)
    a, b, c = (UEl.gen(L, i) for i in range(3))
    assert swap(Tensor.outer(a, b, c), "12") == Tensor.outer(b, a, c)


def test_swap_23_is_an_involution():
    L = heisenberg()
    rng = random.Random(5)
    for _ in range(10):
        u = Tensor.outer(random_uel(L, rng, 2), random_uel(L, rng, 2), random_uel(L, rng, 2))
        assert swap(swap(u, "23"), "23") == u


def test_galois_decompose_d_tensor_d(k1):
    d = UEl.gen(k1, 0)
    form = galois_decompose(Tensor.outer(d, d))
    assert form == GaloisForm(k1, [((1,), d), ((2,), UEl.scalar(k1, -2))])
    assert form.expand() == Tensor.outer(d, d)


def test_galois_decompose_first_slot_only():
    L = heisenberg()
    h = UEl.gen(L, 0) * UEl.gen(L, 1)
    form = galois_decompose(Tensor.outer(h, UEl.one(L)))
    assert [(I, l) for I, l in form.pairs] == [(I, UEl.scalar(L, c)) for I, c in h.sorted_terms()]


def test_galois_decompose_one_tensor_d(k1):
    one, d = UEl.one(k1), UEl.gen(k1, 0)
    form = galois_decompose(Tensor.outer(one, d))
    assert form == GaloisForm(k1, [((0,), d), ((1,), UEl.scalar(k1, -1))])


def test_degree_of_tensor(k1):
    d = UEl.gen(k1, 0)
    assert Tensor.outer(d * d, d).degree() == 3
