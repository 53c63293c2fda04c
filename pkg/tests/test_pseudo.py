from fractions import Fraction

import pytest

import oracles
from pseudoalg.catalog import current, instantiate
from pseudoalg.errors import ArityMismatch, RankMismatch
from pseudoalg.lie import abelian, heisenberg, sl2
from pseudoalg.pseudo import (
    AXIOMS,
    ModuleElement,
    ProductTable,
    PseudoEl,
    check_axiom,
    compose,
    defect,
    normalize,
    permute,
    pseudo_product,
    rank1,
    rank2,
    to_tensors,
    zero_table,
)
from pseudoalg.tensor import Tensor, delta, lift, t_mul
from pseudoalg.uea import UEl


@pytest.fixture
def k1():
    return abelian(1)


def e(L, rank=1, i=0, coeff=None):
    return ModuleElement.basis(L, rank, i, coeff)


def test_first_slot_elements_are_canonical(k1):
    h = UEl.mono(k1, (3,), 2)
    p = normalize([(Tensor.outer(h, UEl.one(k1)), e(k1))])
    assert p.terms == {((3,), (0,), 0): 2}


def test_normalize_d_tensor_d(k1):
    d = UEl.gen(k1, 0)
    p = normalize([(Tensor.outer(d, d), e(k1))])
    assert p.terms == {((2,), (0,), 0): -2, ((1,), (1,), 0): 1}


def test_tensor_over_h_relation(k1):
    d = UEl.gen(k1, 0)
    one2 = Tensor.scalar(k1, 2, 1)
    assert normalize([(t_mul(one2, delta(d)), e(k1))]) == normalize([(one2, e(k1, coeff=d))])


def test_to_tensors_inverts_normalize():
    L = heisenberg()
    beta = Tensor.outer(UEl.gen(L, 1), UEl.gen(L, 0) * UEl.gen(L, 2)) + 3
    p = normalize([(beta, e(L, 2, 1))])
    assert to_tensors(p, 2) == {0: Tensor.zero(L, 2), 1: beta}


def test_normalize_arity_three():
    L = heisenberg()
    g = UEl.gen(L, 0)
    beta = Tensor.outer(UEl.one(L), UEl.gen(L, 1), g)
    p = normalize([(beta, e(L))])
    assert to_tensors(p, 1)[0] == beta


def test_normalize_rejects_mixed_input(k1):
    with pytest.raises(ArityMismatch):
        normalize([(Tensor.scalar(k1, 2, 1), e(k1)), (Tensor.scalar(k1, 3, 1), e(k1))])
    with pytest.raises(RankMismatch):
        normalize([(Tensor.scalar(k1, 2, 1), e(k1)), (Tensor.scalar(k1, 2, 1), e(k1, 2))])


def test_current_product_of_one_dimensional_algebra(k1):
    T = current([[[1]]], k1)
    f, g = UEl.gen(k1, 0), UEl.mono(k1, (2,))
    got = pseudo_product(e(k1, coeff=f), e(k1, coeff=g), T)
    assert got == normalize([(Tensor.outer(f, g), e(k1))])


def test_product_with_zero(k1):
    T = rank1(Tensor.outer(UEl.one(k1), UEl.gen(k1, 0)))
    assert not pseudo_product(ModuleElement.zero(k1, 1), e(k1), T)


def test_rank_one_product_example(k1):
    t = Fraction(3)
    d, one = UEl.gen(k1, 0), UEl.one(k1)
    T = rank1(Tensor.outer(one, d) + t)
    got = pseudo_product(e(k1, coeff=d), e(k1), T)
    # (d (x) 1)(1 (x) d + t) = d (x) d + t d (x) 1
    assert got == normalize([(Tensor.outer(d, d) + Tensor.outer(d, one).scale(t), e(k1))])
    assert got.terms == {((2,), (0,), 0): -2, ((1,), (1,), 0): 1, ((1,), (0,), 0): 3}


def test_left_composition_example(k1):
    one, d = UEl.one(k1), UEl.gen(k1, 0)
    alpha = Tensor.outer(one, d)
    T = rank1(alpha)
    got = compose(e(k1), e(k1), e(k1), T, "left")
    raw = lift(alpha, "pad_right") * lift(alpha, "delta_left")
    assert got == normalize([(raw, e(k1))])
    assert to_tensors(got, 1)[0] == Tensor.outer(one, d, d)


def test_composition_with_zero(k1):
    T = rank1(Tensor.outer(UEl.one(k1), UEl.gen(k1, 0)))
    for side in ("left", "right"):
        assert not compose(e(k1), e(k1), ModuleElement.zero(k1, 1), T, side)


def test_constant_table_compositions(k1):
    t = Fraction(-2)
    T = rank1(Tensor.scalar(k1, 2, t))
    expected = normalize([(Tensor.scalar(k1, 3, t * t), e(k1))])
    assert compose(e(k1), e(k1), e(k1), T, "left") == expected
    assert compose(e(k1), e(k1), e(k1), T, "right") == expected


@pytest.mark.parametrize("L", [abelian(1), abelian(2), heisenberg(), sl2()], ids=lambda L: L.name)
def test_rank_one_families(L):
    one = UEl.one(L)
    s = UEl.from_delta(L, [1] + [Fraction(1, 2)] * (L.dim - 1))
    left = rank1(Tensor.outer(one, s) + 2)
    right = rank1(Tensor.outer(s, one) - 1)
    assert not defect(e(L), e(L), e(L), left, "left-prelie")
    assert not defect(e(L), e(L), e(L), right, "right-prelie")


def test_rank_one_non_associative(k1):
    T = rank1(Tensor.outer(UEl.one(k1), UEl.gen(k1, 0)))
    assert defect(e(k1), e(k1), e(k1), T, "assoc")


def test_zero_table_passes_everything():
    T = zero_table(heisenberg(), 2)
    assert all(check_axiom(T, ax).passed for ax in AXIOMS)


def test_thm36_type3_passes():
    L = abelian(2)
    T, report = instantiate("thm3.6/3", {"s1": (1, 0), "s2": (0, 1), "t1": 1, "t2": 1}, L)
    assert report.satisfied
    assert check_axiom(T, "left-prelie").passed


def test_thm36_type2_violation_fails_on_expected_triple():
    L = abelian(2)
    T, report = instantiate("thm3.6/2", {"s1": (1, 0), "s2": (0, 1), "t1": 1, "t2": 1}, L)
    assert not report.satisfied
    result = check_axiom(T, "left-prelie")
    triples = {t for t, _ in result.failures}
    assert triples & {(0, 1, 1), (1, 1, 0)}


def test_defects_match_tensor_oracle():
    L = heisenberg()
    one, d1, d2 = UEl.one(L), UEl.gen(L, 0), UEl.gen(L, 1)
    T = rank2(L, (Tensor.outer(one, d1) + 1, None), (None, Tensor.outer(d2, one)), (Tensor.outer(d1, d2), None))
    for axiom in AXIOMS:
        for i, j, k in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]:
            x, y, z = (ModuleElement.basis(L, 2, n) for n in (i, j, k))
            got = to_tensors(defect(x, y, z, T, axiom), 2)
            want = oracles.tensor_defect(T, axiom, i, j, k)
            assert got == want


def test_permute_12_swaps_the_slots():
    L = abelian(2)
    p = PseudoEl(L, 3, {((1, 0), (0, 2), (1, 1), 1): 5})
    assert permute(p, "12").terms == {((0, 2), (1, 0), (1, 1), 1): 5}
    with pytest.raises(ArityMismatch):
        permute(PseudoEl(L, 2, {}), "12")


def test_table_validation(k1):
    with pytest.raises(RankMismatch):
        ProductTable(k1, 1, {(0, 1, 0): Tensor.scalar(k1, 2, 1)})
    with pytest.raises(ArityMismatch):
        ProductTable(k1, 1, {(0, 0, 0): Tensor.scalar(k1, 3, 1)})
