"""Sparse elements of ``H (x) H`` and ``H (x) H (x) H``.

A :class:`Tensor` of arity ``n`` maps ``n``-tuples of multi-indices to exact
rationals, meaning ``sum c * d^(I1) (x) ... (x) d^(In)`` in the divided-power
PBW basis. ``T2`` and ``T3`` are the two arities the package uses.
"""

from fractions import Fraction

from .errors import AmbientMismatch, ArityMismatch
from .lie import as_fraction
from .uea import UEl, compact, format_index, mono_mul, sub_indices


class Tensor:
    __slots__ = ("L", "arity", "terms")

    def __init__(self, L, arity, terms=None):
        self.L = L
        self.arity = arity
        self.terms = {k: compact(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, L, arity):
        return cls(L, arity)

    @classmethod
    def scalar(cls, L, arity, c):
        """Scalar embedding ``c -> c * (1 (x) ... (x) 1)``."""
        z = (0,) * L.dim
        return cls(L, arity, {(z,) * arity: as_fraction(c)})

    @classmethod
    def outer(cls, *elems):
        """``a (x) b (x) ...`` for :class:`UEl` factors."""
        L = elems[0].L
        out = {(): Fraction(1)}
        for e in elems:
            if e.L is not L and e.L != L:
                raise AmbientMismatch("tensor factors live in different algebras")
            out = {k + (I,): c * x for k, c in out.items() for I, x in e.terms.items()}
        return cls(L, len(elems), out)

    def _coerce(self, other):
        if isinstance(other, Tensor):
            if other.arity != self.arity:
                raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
            if other.L is not self.L and other.L != self.L:
                raise AmbientMismatch("tensors live over different algebras")
            return other
        return Tensor.scalar(self.L, self.arity, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Tensor(self.L, self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return Tensor(self.L, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = as_fraction(c)
        return Tensor(self.L, self.arity, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Tensor):
            return t_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, Tensor):
            return self.arity == other.arity and self.L == other.L and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Tensor.scalar(self.L, self.arity, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"T{self.arity}({format_tensor(self)})"

    def sorted_terms(self):
        return sorted(self.terms.items())

    def degree(self):
        """Largest total degree ``|I1| + ... + |In|`` of a stored term (``-1`` for zero)."""
        return max((sum(map(sum, k)) for k in self.terms), default=-1)


def T2(L, terms=None):
    return Tensor(L, 2, terms)


def T3(L, terms=None):
    return Tensor(L, 3, terms)


def t_mul(u, v):
    """Slotwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""
    if u.arity != v.arity:
        raise ArityMismatch(f"arity {u.arity} vs {v.arity}")
    if u.L is not v.L and u.L != v.L:
        raise AmbientMismatch("tensors live over different algebras")
    L = u.L
    out = {}
    for ku, cu in u.terms.items():
        for kv, cv in v.terms.items():
            partial = {(): compact(cu * cv)}
            for A, B in zip(ku, kv):
                prod = mono_mul(L, A, B)
                if len(prod) == 1:
                    ((K, z),) = prod.items()
                    if z == 1:
                        partial = {k + (K,): c for k, c in partial.items()}
                        continue
                partial = {k + (K,): c * z for k, c in partial.items() for K, z in prod.items()}
            for k, c in partial.items():
                out[k] = out.get(k, 0) + c
    return Tensor(L, u.arity, out)


LIFT_MODES = ("delta_left", "delta_right", "pad_right", "pad_left")


def lift(beta, mode):
    """Map ``H (x) H`` into ``H^{(x)3}``.

    ``delta_left`` is ``(Delta (x) id)``, ``delta_right`` is ``(id (x) Delta)``,
    ``pad_right`` is ``b -> b (x) 1`` and ``pad_left`` is ``b -> 1 (x) b``.
    """
    if beta.arity != 2:
        raise ArityMismatch("lift expects an element of H (x) H")
    z = (0,) * beta.L.dim
    out = {}
    for (I, J), c in beta.terms.items():
        if mode == "delta_left":
            keys = [(A, B, J) for A, B in sub_indices(I)]
        elif mode == "delta_right":
            keys = [(I, A, B) for A, B in sub_indices(J)]
        elif mode == "pad_right":
            keys = [(I, J, z)]
        elif mode == "pad_left":
            keys = [(z, I, J)]
        else:
            raise ValueError(f"unknown lift mode {mode!r}; expected one of {LIFT_MODES}")
        for k in keys:
            out[k] = out.get(k, 0) + c
    return Tensor(beta.L, 3, out)


_PERMS = {"sigma": (2, (1, 0)), "12": (3, (1, 0, 2)), "23": (3, (0, 2, 1))}


def swap(u, perm):
    """Permute tensor slots: ``sigma`` on T2, ``12`` or ``23`` on T3."""
    try:
        arity, order = _PERMS[perm]
    except KeyError:
        raise ValueError(f"unknown permutation {perm!r}") from None
    if u.arity != arity:
        raise ArityMismatch(f"permutation {perm} needs arity {arity}, got {u.arity}")
    return Tensor(u.L, arity, {tuple(k[i] for i in order): c for k, c in u.terms.items()})


def delta(a):
    """``Delta(a)`` as a T2 (re-exported from the enveloping algebra module)."""
    from .uea import coproduct

    return coproduct(a)


def delta2(a):
    """``Delta^2(a) = sum d^(A) (x) d^(B) (x) d^(C)`` over ``A + B + C = I``."""
    from .uea import sub_indices3

    out = {}
    for I, x in a.terms.items():
        for key in sub_indices3(I):
            out[key] = out.get(key, 0) + x
    return Tensor(a.L, 3, out)


class GaloisForm:
    """``sum_i (d^(h_i) (x) 1) Delta(l_i)`` with pairwise distinct monomials ``h_i``."""

    __slots__ = ("L", "pairs")

    def __init__(self, L, pairs):
        self.L = L
        self.pairs = pairs

    def expand(self):
        z = (0,) * self.L.dim
        total = Tensor.zero(self.L, 2)
        for h, l in self.pairs:
            total = total + t_mul(Tensor(self.L, 2, {(h, z): Fraction(1)}), delta(l))
        return total

    def __eq__(self, other):
        return isinstance(other, GaloisForm) and self.L == other.L and self.pairs == other.pairs

    def __repr__(self):
        inner = ", ".join(f"({format_index(h)}, {l!r})" for h, l in self.pairs)
        return f"GaloisForm[{inner}]"


def galois_decompose(beta):
    """Unique decomposition ``beta = sum (h_i (x) 1) Delta(l_i)``.

    The Fourier image ``sum f S(g1) (x) g2`` grouped by its first slot gives the pairs.
    """
    from .uea import fourier

    if beta.arity != 2:
        raise ArityMismatch("galois_decompose expects a T2")
    grouped = {}
    for (h, J), c in fourier(beta, "forward").terms.items():
        grouped.setdefault(h, {})[J] = c
    pairs = [(h, UEl(beta.L, grouped[h])) for h in sorted(grouped)]
    return GaloisForm(beta.L, [(h, l) for h, l in pairs if l])


def format_tensor(u):
    if not u.terms:
        return "0"
    bits = []
    for k, c in u.sorted_terms():
        body = " (x) ".join(format_index(I) for I in k)
        bits.append(body if c == 1 else f"{c}*[{body}]")
    return " + ".join(bits)
