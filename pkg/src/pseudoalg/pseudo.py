"""Pseudoalgebra structures on free modules ``A = H e_1 + ... + H e_n``.

Elements of ``(H (x) H) (x)_H A`` and ``H^{(x)3} (x)_H A`` are kept in the
canonical form whose last tensor slot is 1:

* arity 2: key ``(I, J, k)`` means ``(d^(I) (x) 1) (x)_H d^(J) e_k``
* arity 3: key ``(I1, I2, J, k)`` means ``(d^(I1) (x) d^(I2) (x) 1) (x)_H d^(J) e_k``

A general representative is brought to this form with
``f (x) g = sum (f S(g1) (x) 1) Delta(g2)`` and its three-slot analogue
``f (x) g (x) z = sum (f S(z1) (x) g S(z2) (x) 1) Delta^2(z3)``.
"""

from dataclasses import dataclass, field
from .errors import AmbientMismatch, ArityMismatch, RankMismatch
from .tensor import Tensor, t_mul
from .uea import UEl, compact, format_index, mono_antipode, mono_mul, sub_indices, sub_indices3

AXIOMS = ("assoc", "left-prelie", "right-prelie")


def _same_ambient(a, b):
    if a is not b and a != b:
        raise AmbientMismatch("objects live over different Lie algebras")


class ModuleElement:
    """``sum_k h_k e_k`` in the free module of the given rank."""

    __slots__ = ("L", "coords")

    def __init__(self, L, coords):
        self.L = L
        self.coords = tuple(coords)
        for h in self.coords:
            _same_ambient(h.L, L)

    @property
    def rank(self):
        return len(self.coords)

    @classmethod
    def basis(cls, L, rank, i, coeff=None):
        coeff = UEl.one(L) if coeff is None else coeff
        return cls(L, [coeff if k == i else UEl.zero(L) for k in range(rank)])

    @classmethod
    def zero(cls, L, rank):
        return cls(L, [UEl.zero(L)] * rank)

    def act(self, h):
        """Left action of ``h`` in ``H``."""
        return ModuleElement(self.L, [h * c for c in self.coords])

    def __add__(self, other):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")
        return ModuleElement(self.L, [a + b for a, b in zip(self.coords, other.coords)])

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return "ModuleElement(" + ", ".join(repr(c) for c in self.coords) + ")"


class PseudoEl:
    """Canonical element of ``H^{(x)arity} (x)_H A``; equality is term-map identity."""

    __slots__ = ("L", "arity", "terms")

    def __init__(self, L, arity, terms=None):
        self.L = L
        self.arity = arity
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def __add__(self, other):
        if other.arity != self.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return PseudoEl(self.L, self.arity, out)

    def __neg__(self):
        return PseudoEl(self.L, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return PseudoEl(self.L, self.arity, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, PseudoEl)
            and self.arity == other.arity
            and self.L == other.L
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        return f"PseudoEl{self.arity}({format_pseudo(self)})"


def format_pseudo(p):
    if not p.terms:
        return "0"
    bits = []
    for key, c in p.sorted_terms():
        *slots, J, k = key
        body = " (x) ".join(format_index(I) for I in slots) + " (x) 1"
        mod = f"e{k + 1}" if not any(J) else f"{format_index(J)}.e{k + 1}"
        bits.append(f"{c}*[{body} (x)_H {mod}]")
    return " + ".join(bits)


def _fourier2(L, f, g):
    """``f (x) g = sum c (d^(I) (x) 1) Delta(d^(G))`` as ``{(I, G): c}`` (memoised)."""
    cache = L._cache.setdefault("F2", {})
    key = (f, g)
    hit = cache.get(key)
    if hit is not None:
        return hit
    res = {}
    for G1, G2 in sub_indices(g):
        for A, a in mono_antipode(L, G1).items():
            for I, x in mono_mul(L, f, A).items():
                k = (I, G2)
                res[k] = res.get(k, 0) + a * x
    res = {k: compact(v) for k, v in res.items() if v}
    cache[key] = res
    return res


def _fourier3(L, f, g, z):
    """``f (x) g (x) z = sum c (d^(I1) (x) d^(I2) (x) 1) Delta^2(d^(Z))`` as ``{(I1, I2, Z): c}``."""
    cache = L._cache.setdefault("F3", {})
    key = (f, g, z)
    hit = cache.get(key)
    if hit is not None:
        return hit
    res = {}
    for Z1, Z2, Z3 in sub_indices3(z):
        left = {}
        for A, a in mono_antipode(L, Z1).items():
            for I, x in mono_mul(L, f, A).items():
                left[I] = left.get(I, 0) + a * x
        mid = {}
        for B, b in mono_antipode(L, Z2).items():
            for I, x in mono_mul(L, g, B).items():
                mid[I] = mid.get(I, 0) + b * x
        for I1, x1 in left.items():
            for I2, x2 in mid.items():
                k = (I1, I2, Z3)
                res[k] = res.get(k, 0) + x1 * x2
    res = {k: compact(v) for k, v in res.items() if v}
    cache[key] = res
    return res


def _normalize_term(L, key, c, u, k, out):
    """Accumulate ``c * (slots of key) (x)_H (u e_k)`` in canonical form into ``out``."""
    if len(key) == 2:
        table = _fourier2(L, *key)
    elif len(key) == 3:
        table = _fourier3(L, *key)
    else:
        raise ArityMismatch(f"unsupported arity {len(key)}")
    unit = len(u.terms) == 1 and not any(next(iter(u.terms))) and u.terms[next(iter(u.terms))] == 1
    for (*slots, G), v in table.items():
        cv = c * v
        if unit:
            kk = (*slots, G, k)
            out[kk] = out.get(kk, 0) + cv
            continue
        for U, cu in u.terms.items():
            cvu = cv * cu
            for J, y in mono_mul(L, G, U).items():
                kk = (*slots, J, k)
                out[kk] = out.get(kk, 0) + cvu * y


def normalize(raw):
    """Canonical form of ``sum beta (x)_H a`` for a list of ``(Tensor, ModuleElement)`` pairs.

    The result does not depend on the chosen representative.
    """
    if not raw:
        raise ValueError("normalize needs at least one (tensor, module element) pair")
    L = raw[0][0].L
    arity = raw[0][0].arity
    rank = raw[0][1].rank
    out = {}
    for beta, a in raw:
        _same_ambient(beta.L, L)
        _same_ambient(a.L, L)
        if beta.arity != arity:
            raise ArityMismatch(f"arity {beta.arity} vs {arity}")
        if a.rank != rank:
            raise RankMismatch(f"rank {a.rank} vs {rank}")
        for key, c in beta.terms.items():
            for k, u in enumerate(a.coords):
                if u:
                    _normalize_term(L, key, c, u, k, out)
    return PseudoEl(L, arity, out)


def to_tensors(p, rank):
    """Inverse of normalisation for free modules: ``{k: beta_k}`` with ``p = sum beta_k (x)_H e_k``.

    Uses ``(f (x) 1) (x)_H u e = ((f (x) 1) Delta(u)) (x)_H e``.
    """
    L = p.L
    out = [dict() for _ in range(rank)]
    for key, c in p.terms.items():
        *slots, J, k = key
        if p.arity == 2:
            (I,) = slots
            for J1, J2 in sub_indices(J):
                for K, x in mono_mul(L, I, J1).items():
                    kk = (K, J2)
                    out[k][kk] = out[k].get(kk, 0) + c * x
        else:
            I1, I2 = slots
            for J1, J2, J3 in sub_indices3(J):
                for K1, x1 in mono_mul(L, I1, J1).items():
                    for K2, x2 in mono_mul(L, I2, J2).items():
                        kk = (K1, K2, J3)
                        out[k][kk] = out[k].get(kk, 0) + c * x1 * x2
    return {k: Tensor(L, p.arity, t) for k, t in enumerate(out)}


class ProductTable:
    """``e_i * e_j = sum_k alpha[i, j, k] (x)_H e_k`` with each coefficient a T2."""

    __slots__ = ("L", "rank", "alpha", "_memo")

    def __init__(self, L, rank, alpha=None):
        if rank < 1:
            raise RankMismatch("rank must be at least 1")
        self.L = L
        self.rank = rank
        clean = {}
        for (i, j, k), t in (alpha or {}).items():
            if not (0 <= i < rank and 0 <= j < rank and 0 <= k < rank):
                raise RankMismatch(f"index {(i, j, k)} out of range for rank {rank}")
            if t.arity != 2:
                raise ArityMismatch("product table coefficients must be T2")
            _same_ambient(t.L, L)
            if t:
                clean[i, j, k] = t
        self.alpha = clean
        self._memo = {}

    def entry(self, i, j, k):
        return self.alpha.get((i, j, k)) or Tensor.zero(self.L, 2)

    def __eq__(self, other):
        return (
            isinstance(other, ProductTable)
            and self.rank == other.rank
            and self.L == other.L
            and self.alpha == other.alpha
        )

    def __repr__(self):
        from .tensor import format_tensor

        rows = []
        for i in range(self.rank):
            for j in range(self.rank):
                parts = [
                    f"({format_tensor(self.alpha[i, j, k])}) (x)_H e{k + 1}"
                    for k in range(self.rank)
                    if (i, j, k) in self.alpha
                ]
                rows.append(f"e{i + 1}*e{j + 1} = " + (" + ".join(parts) or "0"))
        return "ProductTable(" + "; ".join(rows) + ")"


def _check(x, T):
    _same_ambient(x.L, T.L)
    if x.rank != T.rank:
        raise RankMismatch(f"module element of rank {x.rank} with a rank-{T.rank} table")


def _mono_product(T, A, i, B, j):
    """Canonical terms of ``(d^(A) e_i) * (d^(B) e_j)`` (memoised on the table)."""
    key = (A, i, B, j)
    hit = T._memo.get(key)
    if hit is not None:
        return hit
    L = T.L
    out = {}
    hg = Tensor(L, 2, {(A, B): 1})
    one = UEl.one(L)
    for k in range(T.rank):
        a = T.alpha.get((i, j, k))
        if a is None:
            continue
        for slots, c in t_mul(hg, a).terms.items():
            _normalize_term(L, slots, c, one, k, out)
    out = {kk: compact(v) for kk, v in out.items() if v}
    T._memo[key] = out
    return out


def pseudo_product(x, y, T):
    """``x * y`` by H-bilinearity: ``(h e_i) * (g e_j) = sum_k ((h (x) g) alpha^k_ij) (x)_H e_k``."""
    _check(x, T)
    _check(y, T)
    out = {}
    for i, h in enumerate(x.coords):
        for A, ca in h.terms.items():
            for j, g in enumerate(y.coords):
                for B, cb in g.terms.items():
                    cab = compact(ca * cb)
                    for kk, v in _mono_product(T, A, i, B, j).items():
                        out[kk] = out.get(kk, 0) + cab * v
    return PseudoEl(T.L, 2, out)


def _shift_left(L, I, A):
    """``(d^(I) (x) 1)(Delta d^(A))`` as ``{(K, A2): c}`` (memoised)."""
    cache = L._cache.setdefault("shift", {})
    hit = cache.get((I, A))
    if hit is not None:
        return hit
    res = {}
    for A1, A2 in sub_indices(A):
        for K, x in mono_mul(L, I, A1).items():
            res[K, A2] = res.get((K, A2), 0) + x
    res = {k: compact(v) for k, v in res.items() if v}
    cache[I, A] = res
    return res


def _times_element(T, J, k, z, left):
    """``(d^(J) e_k) * z`` if ``left`` else ``z * (d^(J) e_k)``, as a dict of canonical terms."""
    out = {}
    for m, g in enumerate(z.coords):
        for B, cb in g.terms.items():
            cb = compact(cb)
            prod = _mono_product(T, J, k, B, m) if left else _mono_product(T, B, m, J, k)
            for kk, v in prod.items():
                out[kk] = out.get(kk, 0) + cb * v
    return out


def compose(x, y, z, T, side):
    """``(x*y)*z`` for ``side='left'``, ``x*(y*z)`` for ``side='right'``, in canonical form."""
    L = T.L
    out = {}
    if side == "left":
        for (I, J, k), c in pseudo_product(x, y, T).terms.items():
            for (A, B, m), d in _times_element(T, J, k, z, True).items():
                cd = c * d
                # (d^(I) (x) 1 (x) 1) (Delta (x) id)(d^(A) (x) 1)
                for (K, A2), x1 in _shift_left(L, I, A).items():
                    kk = (K, A2, B, m)
                    out[kk] = out.get(kk, 0) + cd * x1
    elif side == "right":
        for (I, J, k), c in pseudo_product(y, z, T).terms.items():
            for (A, B, m), d in _times_element(T, J, k, x, False).items():
                # (1 (x) d^(I) (x) 1)(id (x) Delta)(d^(A) (x) 1) = d^(A) (x) d^(I) (x) 1
                kk = (A, I, B, m)
                out[kk] = out.get(kk, 0) + c * d
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return PseudoEl(L, 3, out)


def permute(p, perm):
    """Apply ``(12)`` or ``(23)`` to a canonical arity-3 element, re-normalising for ``(23)``."""
    if p.arity != 3:
        raise ArityMismatch("slot permutations act on arity-3 elements")
    if perm == "12":
        return PseudoEl(p.L, 3, {(I2, I1, J, k): c for (I1, I2, J, k), c in p.terms.items()})
    if perm == "23":
        L = p.L
        zero = (0,) * L.dim
        out = {}
        for (I1, I2, J, k), c in p.terms.items():
            _normalize_term(L, (I1, zero, I2), c, UEl.mono(L, J), k, out)
        return PseudoEl(L, 3, out)
    raise ValueError(f"unknown permutation {perm!r}")


def associator(x, y, z, T):
    return compose(x, y, z, T, "left") - compose(x, y, z, T, "right")


def defect(x, y, z, T, axiom):
    """Left side minus right side of the chosen axiom, canonical in ``H^{(x)3} (x)_H A``."""
    if axiom == "assoc":
        return associator(x, y, z, T)
    if axiom == "left-prelie":
        return associator(x, y, z, T) - permute(associator(y, x, z, T), "12")
    if axiom == "right-prelie":
        return associator(x, y, z, T) - permute(associator(x, z, y, T), "23")
    raise ValueError(f"unknown axiom {axiom!r}; expected one of {AXIOMS}")


@dataclass
class AxiomReport:
    axiom: str
    passed: bool
    failures: list = field(default_factory=list)  # [(triple, PseudoEl), ...]

    def __bool__(self):
        return self.passed


def check_axiom(T, axiom):
    """Evaluate the defect on every generator triple ``(e_i, e_j, e_k)``.

    The defect is H-polylinear, so vanishing on generators is sufficient.
    """
    if axiom not in AXIOMS:
        raise ValueError(f"unknown axiom {axiom!r}; expected one of {AXIOMS}")
    gens = [ModuleElement.basis(T.L, T.rank, i) for i in range(T.rank)]
    assoc = {}

    def gen_assoc(i, j, k):
        if (i, j, k) not in assoc:
            assoc[i, j, k] = associator(gens[i], gens[j], gens[k], T)
        return assoc[i, j, k]

    failures = []
    for i in range(T.rank):
        for j in range(T.rank):
            for k in range(T.rank):
                d = gen_assoc(i, j, k)
                if axiom == "left-prelie":
                    d = d - permute(gen_assoc(j, i, k), "12")
                elif axiom == "right-prelie":
                    d = d - permute(gen_assoc(i, k, j), "23")
                if d:
                    failures.append(((i, j, k), d))
    return AxiomReport(axiom, not failures, failures)


def zero_table(L, rank):
    return ProductTable(L, rank)


def rank1(alpha):
    return ProductTable(alpha.L, 1, {(0, 0, 0): alpha})


def rank2(L, e11=(), e12=(), e21=(), e22=()):
    """Rank-2 table from four products, each a pair ``(coeff of e1, coeff of e2)``.

    ``None`` or an empty tuple means zero.
    """
    alpha = {}
    for (i, j), row in {(0, 0): e11, (0, 1): e12, (1, 0): e21, (1, 1): e22}.items():
        for k, t in enumerate(row or ()):
            if t is not None and t:
                alpha[i, j, k] = t
    return ProductTable(L, 2, alpha)


__all__ = [
    "AXIOMS",
    "AxiomReport",
    "ModuleElement",
    "ProductTable",
    "PseudoEl",
    "associator",
    "check_axiom",
    "compose",
    "defect",
    "normalize",
    "permute",
    "pseudo_product",
    "rank1",
    "rank2",
    "to_tensors",
    "zero_table",
]
