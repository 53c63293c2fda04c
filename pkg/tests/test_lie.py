from fractions import Fraction

import pytest

from pseudoalg.errors import AntisymmetryViolation, DimensionMismatch, InputError, JacobiViolation
from pseudoalg.lie import PRESETS, abelian, as_fraction, bracket, from_brackets, heisenberg, sl2, validate_lie


def zeros(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def test_abelian_constants_are_valid():
    L = validate_lie(2, zeros(2))
    assert L.is_abelian


def test_heisenberg_constants_are_valid():
    c = zeros(3)
    c[0][1][2], c[1][0][2] = 1, -1
    L = validate_lie(3, c)
    assert L == heisenberg()


def test_antisymmetry_violation_reports_first_index():
    c = zeros(2)
    c[0][1][0] = 1
    with pytest.raises(AntisymmetryViolation) as info:
        validate_lie(2, c)
    assert info.value.index == (0, 1, 0)


def test_jacobi_violation():
    # [d1,d2]=d2, [d1,d3]=d1, [d2,d3]=d1 is antisymmetric but not Lie
    br = [(0, 1, 1, 1), (1, 0, 1, -1), (0, 2, 0, 1), (2, 0, 0, -1), (1, 2, 0, 1), (2, 1, 0, -1)]
    with pytest.raises(JacobiViolation):
        from_brackets(3, br)


def test_shape_and_range_errors():
    with pytest.raises(DimensionMismatch):
        validate_lie(2, zeros(3))
    with pytest.raises(DimensionMismatch):
        from_brackets(2, [(0, 2, 0, 1)])
    with pytest.raises(InputError):
        validate_lie(0, [])


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_validate(name):
    L = PRESETS[name]()
    assert validate_lie(L.dim, L.c) == L


def test_bracket_abelian():
    assert bracket(abelian(2), (1, 0), (0, 1)) == (0, 0)


def test_bracket_heisenberg_generators():
    assert bracket(heisenberg(), (1, 0, 0), (0, 1, 0)) == (0, 0, 1)


def test_bracket_with_itself_vanishes():
    assert bracket(heisenberg(), (1, 1, 0), (1, 1, 0)) == (0, 0, 0)


def test_sl2_relations():
    L = sl2()
    h, e, f = L.basis_vector(0), L.basis_vector(1), L.basis_vector(2)
    assert bracket(L, h, e) == (0, 2, 0)
    assert bracket(L, h, f) == (0, 0, -2)
    assert bracket(L, e, f) == (1, 0, 0)


def test_as_fraction_is_exact():
    assert as_fraction("-3/4") == Fraction(-3, 4)
    assert as_fraction(2) == 2
    for bad in (0.5, True, "x", "1/0"):
        with pytest.raises(InputError):
            as_fraction(bad)
