from fractions import Fraction

import pytest

import oracles
from pseudoalg.errors import EmptyBasisDomain, MissingParam, NotLinear, UnknownLabel
from pseudoalg.lie import abelian, heisenberg
from pseudoalg.pseudo import rank1
from pseudoalg.solver import LABELS, linear_nullspace, nullspace, residual, residual_rank, unknown_basis
from pseudoalg.tensor import Tensor
from pseudoalg.uea import UEl

K1 = abelian(1)
ONE, D = UEl.one(K1), UEl.gen(K1, 0)


def test_rank_one_left_family_solves_eq21():
    assert not residual("eq2.1", Tensor.outer(ONE, D) + 3)


def test_lemma_family_solves_eq38():
    a = Tensor.outer(ONE, D * D)
    assert not residual("eq3.8", a, s=(1,), t=5)


def test_degree_two_second_slot_breaks_eq21():
    a = Tensor.outer(ONE, D * D)
    r = residual("eq2.1", a)
    assert r
    assert r == oracles.tensor_defect(rank1(a), "left-prelie", 0, 0, 0)[0]


@pytest.mark.parametrize("D", [0, 3])
def test_eq38_nullspace_in_one_variable(D):
    basis = linear_nullspace("eq3.8", D, K1, s=(1,), t=1)
    assert len(basis) == D + 1
    span = {tuple(sorted(b.terms)) for b in basis}
    assert span == {(((0,), (j,)),) for j in range(D + 1)}


def test_quadratic_equation_is_rejected():
    with pytest.raises(NotLinear):
        linear_nullspace("eq2.1", 2, K1)
    with pytest.raises(NotLinear):
        linear_nullspace("eq3.10", 2, K1, s=(1,), t=1)


def test_argument_errors():
    with pytest.raises(UnknownLabel):
        residual("eq9.9", Tensor.zero(K1, 2))
    with pytest.raises(MissingParam):
        residual("eq3.8", Tensor.zero(K1, 2), s=(1,))
    with pytest.raises(EmptyBasisDomain):
        unknown_basis(K1, -1)


def test_eq310_residual_vanishes_on_group_like_shapes():
    # g = 0 is a solution for any s, t
    assert not residual("eq3.10", UEl.zero(K1), s=(1,), t=2)


def test_associativity_residual_matches_oracle():
    L = heisenberg()
    a = Tensor.outer(UEl.gen(L, 0), UEl.one(L)) + Tensor.outer(UEl.one(L), UEl.gen(L, 1))
    for label, axiom in (("eq4.1", "assoc"), ("eq2.1", "left-prelie"), ("eq2.2", "right-prelie")):
        assert residual(label, a) == oracles.tensor_defect(rank1(a), axiom, 0, 0, 0)[0]


def test_nullspace_small_matrix():
    rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
    basis = nullspace(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(r * x for r, x in zip(row, v)) == 0 for row in rows)


def test_residual_rank():
    a = Tensor.outer(ONE, D)
    assert residual_rank([a, a.scale(2), Tensor.outer(D, ONE)]) == 2


def test_labels_are_complete():
    assert set(LABELS) == {"eq2.1", "eq2.2", "eq3.1", "eq3.2", "eq3.7", "eq3.8", "eq3.9", "eq3.10", "eq4.1"}
