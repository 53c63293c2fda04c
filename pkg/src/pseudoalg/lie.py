"""Finite-dimensional Lie algebras given by structure constants.

``c[i][j][k]`` is the coefficient of ``d_k`` in ``[d_i, d_j]``; all indices are
0-based. Everything is exact: entries are :class:`fractions.Fraction`.
"""

from fractions import Fraction

from .errors import AntisymmetryViolation, DimensionMismatch, InputError, JacobiViolation


def as_fraction(x):
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction.

    Floats are rejected: nothing in this package is approximate.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational number: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational number: {x!r}") from exc
    raise InputError(f"not an exact rational: {x!r}")


def _compact(v):
    return v.numerator if v.denominator == 1 else v


class LieAlgebra:
    """A validated Lie algebra; build through :func:`validate_lie` or a preset.

    Instances are immutable. The only mutable state is ``_cache``, a memo of
    PBW products used by :mod:`pseudoalg.uea`; it never changes results.
    """

    __slots__ = ("dim", "c", "name", "_brackets", "_cache")

    def __init__(self, dim, c, name=None):
        self.dim = dim
        self.c = c
        self.name = name
        br = {}
        for i in range(dim):
            for j in range(dim):
                row = tuple((k, _compact(c[i][j][k])) for k in range(dim) if c[i][j][k])
                if row:
                    br[i, j] = row
        self._brackets = br
        self._cache = {}

    def __repr__(self):
        label = self.name or "lie"
        return f"LieAlgebra({label!r}, dim={self.dim})"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._brackets == other._brackets

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self._brackets.items()))))

    def basis_bracket(self, i, j):
        """Nonzero ``(k, coeff)`` pairs of ``[d_i, d_j]``."""
        return self._brackets.get((i, j), ())

    @property
    def is_abelian(self):
        return not self._brackets

    def vector(self, coeffs):
        return delta_vector(self, coeffs)

    def basis_vector(self, i):
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return tuple(v)


def _shape_ok(dim, c):
    if len(c) != dim:
        return False
    return all(len(row) == dim and all(len(col) == dim for col in row) for row in c)


def validate_lie(dim, c, name=None):
    """Check antisymmetry and Jacobi, returning a :class:`LieAlgebra`.

    Raises the violation for the first failing index tuple in lexicographic order.
    """
    if not isinstance(dim, int) or dim < 1:
        raise InputError(f"dimension must be a positive integer, got {dim!r}")
    if not _shape_ok(dim, c):
        raise DimensionMismatch(f"structure constants must have shape {dim}x{dim}x{dim}")
    cf = tuple(tuple(tuple(as_fraction(x) for x in col) for col in row) for row in c)
    rng = range(dim)
    for i in rng:
        for j in rng:
            for k in rng:
                if cf[i][j][k] != -cf[j][i][k]:
                    raise AntisymmetryViolation(i, j, k)
    for i in rng:
        for j in rng:
            for l in rng:
                for k in rng:
                    total = sum(
                        cf[i][j][m] * cf[m][l][k]
                        + cf[j][l][m] * cf[m][i][k]
                        + cf[l][i][m] * cf[m][j][k]
                        for m in rng
                    )
                    if total:
                        raise JacobiViolation(i, j, l, k)
    return LieAlgebra(dim, cf, name)


def from_brackets(dim, brackets, name=None):
    """Build from a sparse list ``[(i, j, k, coeff), ...]``; omitted entries are zero.

    Only the listed entries are set, so antisymmetric partners must be given too.
    """
    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, v in brackets:
        for idx in (i, j, k):
            if not (isinstance(idx, int) and 0 <= idx < dim):
                raise DimensionMismatch(f"bracket index {idx!r} out of range for dim {dim}")
        c[i][j][k] = as_fraction(v)
    return validate_lie(dim, c, name)


def abelian(n):
    return from_brackets(n, [], name=f"abelian({n})")


def heisenberg():
    """``[d1, d2] = d3`` with ``d3`` central."""
    return from_brackets(3, [(0, 1, 2, 1), (1, 0, 2, -1)], name="heisenberg")


def sl2():
    """Basis order ``(h, e, f)``: ``[h,e]=2e``, ``[h,f]=-2f``, ``[e,f]=h``."""
    return from_brackets(
        3,
        [(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)],
        name="sl2",
    )


PRESETS = {
    "abelian1": lambda: abelian(1),
    "abelian2": lambda: abelian(2),
    "abelian3": lambda: abelian(3),
    "heisenberg": heisenberg,
    "sl2": sl2,
}


def delta_vector(L, coeffs):
    """An element of the Lie algebra as a tuple of Fractions of length ``L.dim``."""
    v = tuple(as_fraction(x) for x in coeffs)
    if len(v) != L.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in a {L.dim}-dimensional algebra")
    return v


def bracket(L, x, y):
    """Bilinear extension of the structure constants to ``[x, y]``."""
    if len(x) != L.dim or len(y) != L.dim:
        raise DimensionMismatch("bracket arguments must have length L.dim")
    out = [Fraction(0)] * L.dim
    for (i, j), row in L._brackets.items():
        a = x[i] * y[j]
        if a:
            for k, v in row:
                out[k] += a * v
    return tuple(out)


def is_zero_vector(v):
    return not any(v)


def proportional(a, b, ta, tb):
    """``ta * b == tb * a`` as vectors, the form of the ``t1 s2 = t2 s1`` conditions."""
    return all(ta * y == tb * x for x, y in zip(a, b))
