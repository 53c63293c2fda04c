"""Exact arithmetic in the universal enveloping algebra ``H = U(L)``.

Elements are stored in the divided-power PBW basis
``d^(I) = d_1^{i_1} ... d_N^{i_N} / (i_1! ... i_N!)``. In this basis the
coproduct is multiplicity free: ``Delta d^(I) = sum_{J+K=I} d^(J) (x) d^(K)``.

Products are computed in the ordinary PBW basis by rewriting
``d_j d_i -> d_i d_j - [d_i, d_j]`` for ``j > i`` and converted back. All
monomial-level results are memoised on the :class:`~pseudoalg.lie.LieAlgebra`.
"""

import os
from fractions import Fraction
from itertools import product as iproduct
from math import factorial

from .errors import AmbientMismatch, DegreeOverflow, StraighteningOverflow, ZeroElement
from .lie import as_fraction

DEFAULT_MAX_DEGREE = 64
STRAIGHTEN_STEP_LIMIT = 10**6


def max_degree():
    """Degree guard; ``PSEUDOALG_MAX_DEGREE`` overrides the default of 64."""
    raw = os.environ.get("PSEUDOALG_MAX_DEGREE")
    return int(raw) if raw else DEFAULT_MAX_DEGREE


def compact(v):
    """Integral rationals become ints: same value and hash, much cheaper arithmetic."""
    return v if type(v) is int else v.numerator if v.denominator == 1 else v


def ifact(I):
    out = 1
    for i in I:
        out *= factorial(i)
    return out


def _bump(I, j, by=1):
    lst = list(I)
    lst[j] += by
    return tuple(lst)


def sub_indices(I):
    """All ``(J, K)`` with ``J + K = I``, in lexicographic order of ``J``."""
    for J in iproduct(*(range(i + 1) for i in I)):
        yield J, tuple(i - j for i, j in zip(I, J))


def sub_indices3(I):
    for A, rest in sub_indices(I):
        for B, C in sub_indices(rest):
            yield A, B, C


class _Counter:
    __slots__ = ("steps",)

    def __init__(self):
        self.steps = 0

    def tick(self):
        self.steps += 1
        if self.steps > STRAIGHTEN_STEP_LIMIT:
            raise StraighteningOverflow(f"more than {STRAIGHTEN_STEP_LIMIT} rewriting steps")


def _ord_mul_gen(L, I, j, counter):
    """Ordinary PBW monomial ``d^I`` times the generator ``d_j``, as ``{K: coeff}``."""
    cache = L._cache.setdefault("gen", {})
    key = (I, j)
    hit = cache.get(key)
    if hit is not None:
        return hit
    counter.tick()
    m = -1
    for idx in range(len(I) - 1, -1, -1):
        if I[idx]:
            m = idx
            break
    if m <= j:
        res = {_bump(I, j): 1}
    else:
        # d^I d_j = d^{I-e_m} (d_j d_m + [d_m, d_j])
        base = _bump(I, m, -1)
        acc = {}
        for K, c in _ord_mul_gen(L, base, j, counter).items():
            for K2, c2 in _ord_mul_gen(L, K, m, counter).items():
                acc[K2] = acc.get(K2, 0) + c * c2
        for r, cr in L.basis_bracket(m, j):
            for K, c in _ord_mul_gen(L, base, r, counter).items():
                acc[K] = acc.get(K, 0) + cr * c
        res = {K: c for K, c in acc.items() if c}
    cache[key] = res
    return res


def _ord_mul_word(L, start, word, counter):
    cur = dict(start)
    for j in word:
        nxt = {}
        for K, c in cur.items():
            for K2, c2 in _ord_mul_gen(L, K, j, counter).items():
                nxt[K2] = nxt.get(K2, 0) + c * c2
        cur = {K: c for K, c in nxt.items() if c}
    return cur


def _word(I):
    return [j for j, e in enumerate(I) for _ in range(e)]


def mono_mul(L, I, J):
    """Divided-power product ``d^(I) d^(J)`` as ``{K: Fraction}`` (memoised)."""
    cache = L._cache.setdefault("mul", {})
    key = (I, J)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if not any(J):
        res = {I: 1}
    elif not any(I):
        res = {J: 1}
    else:
        ordinary = _ord_mul_word(L, {I: 1}, _word(J), _Counter())
        denom = ifact(I) * ifact(J)
        res = {}
        for K, c in ordinary.items():
            v = Fraction(c * ifact(K), denom)
            if v:
                res[K] = compact(v)
    cache[key] = res
    return res


def mono_antipode(L, I):
    """``S(d^(I))`` in the divided basis: reverse the word, negate each letter."""
    cache = L._cache.setdefault("S", {})
    hit = cache.get(I)
    if hit is not None:
        return hit
    n = L.dim
    zero = (0,) * n
    ordinary = _ord_mul_word(L, {zero: 1}, list(reversed(_word(I))), _Counter())
    sign = -1 if sum(I) % 2 else 1
    denom = ifact(I)
    res = {}
    for K, c in ordinary.items():
        v = Fraction(sign * c * ifact(K), denom)
        if v:
            res[K] = compact(v)
    cache[I] = res
    return res


def _check_degree(terms):
    cap = max_degree()
    for K in terms:
        if sum(K) > cap:
            raise DegreeOverflow(f"degree {sum(K)} exceeds the guard {cap}")


class UEl:
    """An element ``sum c_I d^(I)`` of ``U(L)``; canonical sparse form, no zeros stored."""

    __slots__ = ("L", "terms")

    def __init__(self, L, terms=None):
        self.L = L
        self.terms = {K: compact(c) for K, c in (terms or {}).items() if c}

    # construction helpers
    @classmethod
    def zero(cls, L):
        return cls(L)

    @classmethod
    def one(cls, L):
        return cls(L, {(0,) * L.dim: Fraction(1)})

    @classmethod
    def scalar(cls, L, c):
        return cls(L, {(0,) * L.dim: as_fraction(c)})

    @classmethod
    def mono(cls, L, I, c=1):
        """The divided-power monomial ``c * d^(I)``."""
        return cls(L, {tuple(I): as_fraction(c)})

    @classmethod
    def gen(cls, L, i):
        return cls.mono(L, tuple(1 if k == i else 0 for k in range(L.dim)))

    @classmethod
    def from_delta(cls, L, v):
        """Embed a vector of the Lie algebra as a degree-1 element."""
        terms = {}
        for i, x in enumerate(v):
            if x:
                terms[tuple(1 if k == i else 0 for k in range(L.dim))] = as_fraction(x)
        return cls(L, terms)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, UEl):
            if other.L is not self.L and other.L != self.L:
                raise AmbientMismatch("elements live in different enveloping algebras")
            return other
        return UEl.scalar(self.L, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for K, c in other.terms.items():
            out[K] = out.get(K, 0) + c
        return UEl(self.L, out)

    __radd__ = __add__

    def __neg__(self):
        return UEl(self.L, {K: -c for K, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = as_fraction(c)
        return UEl(self.L, {K: c * v for K, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, UEl):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, UEl):
            return self.L == other.L and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == UEl.scalar(self.L, other).terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"UEl({format_uel(self)})"

    def sorted_terms(self):
        return sorted(self.terms.items())

    @property
    def is_scalar(self):
        return all(not any(K) for K in self.terms)


def mul(a, b):
    """Product in ``U(L)``, re-expressed in ordered divided-power monomials."""
    if a.L is not b.L and a.L != b.L:
        raise AmbientMismatch("elements live in different enveloping algebras")
    L = a.L
    out = {}
    for I, x in a.terms.items():
        for J, y in b.terms.items():
            for K, z in mono_mul(L, I, J).items():
                out[K] = out.get(K, 0) + x * y * z
    _check_degree(out)
    return UEl(L, out)


def counit(a):
    return a.terms.get((0,) * a.L.dim, Fraction(0))


def antipode(a):
    out = {}
    for I, x in a.terms.items():
        for K, z in mono_antipode(a.L, I).items():
            out[K] = out.get(K, 0) + x * z
    return UEl(a.L, out)


def degree(a):
    """Filtration degree: max ``|I|`` over stored terms. Undefined for zero."""
    if not a.terms:
        raise ZeroElement("the degree of 0 is undefined")
    return max(sum(I) for I in a.terms)


def coproduct(a):
    from .tensor import Tensor

    out = {}
    for I, x in a.terms.items():
        for J, K in sub_indices(I):
            out[(J, K)] = out.get((J, K), 0) + x
    return Tensor(a.L, 2, out)


def fourier(beta, direction="forward"):
    """Galois map ``f(x)g -> f S(g1) (x) g2`` or its inverse ``f g1 (x) g2``."""
    from .tensor import Tensor

    if direction not in ("forward", "inverse"):
        raise ValueError(f"direction must be 'forward' or 'inverse', not {direction!r}")
    L = beta.L
    out = {}
    for (I, J), c in beta.terms.items():
        for J1, J2 in sub_indices(J):
            left = mono_antipode(L, J1) if direction == "forward" else {J1: Fraction(1)}
            for A, a in left.items():
                for K, z in mono_mul(L, I, A).items():
                    key = (K, J2)
                    out[key] = out.get(key, 0) + c * a * z
    return Tensor(L, 2, out)


def format_index(I):
    if not any(I):
        return "1"
    parts = []
    for k, e in enumerate(I):
        if e:
            parts.append(f"d{k + 1}" + (f"^({e})" if e > 1 else ""))
    return "*".join(parts)


def format_uel(a):
    if not a.terms:
        return "0"
    bits = []
    for I, c in a.sorted_terms():
        m = format_index(I)
        if m == "1":
            bits.append(str(c))
        elif c == 1:
            bits.append(m)
        else:
            bits.append(f"{c}*{m}")
    return " + ".join(bits)
