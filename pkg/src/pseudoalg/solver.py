"""Residuals of the rank-one and lemma equations, and exact nullspaces of the linear ones.

Scalars ``t`` inside a tensor expression stand for ``t * (1 (x) 1)`` or
``t * (1 (x) 1 (x) 1)``. Every residual is "left side minus right side".
"""

import random
from fractions import Fraction
from itertools import product as iproduct
from math import lcm

from .errors import EmptyBasisDomain, MissingParam, NotLinear, UnknownLabel
from .lie import as_fraction
from .tensor import Tensor, lift, swap
from .uea import UEl

LABELS = ("eq2.1", "eq2.2", "eq3.1", "eq3.2", "eq3.7", "eq3.8", "eq3.9", "eq3.10", "eq4.1")

# the unknown for eq3.10 is an element g of H; all others take a T2
_REQUIRED = {
    "eq2.1": (),
    "eq2.2": (),
    "eq3.1": (),
    "eq3.2": ("s", "t"),
    "eq3.7": ("s", "t"),
    "eq3.8": ("s", "t"),
    "eq3.9": ("s", "t", "l", "k"),
    "eq3.10": ("s", "t"),
    "eq4.1": (),
}


def required_params(label):
    try:
        return _REQUIRED[label]
    except KeyError:
        raise UnknownLabel(f"unknown equation {label!r}; expected one of {LABELS}") from None


def _left(a, b):
    """``(a (x) 1)(Delta (x) id) b``."""
    return lift(a, "pad_right") * lift(b, "delta_left")


def _right(a, b):
    """``(1 (x) a)(id (x) Delta) b``."""
    return lift(a, "pad_left") * lift(b, "delta_right")


def _slot_vec(L, s, slot, arity):
    """``s`` placed in one tensor slot, ones elsewhere."""
    one = UEl.one(L)
    sv = UEl.from_delta(L, s)
    return Tensor.outer(*(sv if i == slot else one for i in range(arity)))


def _params(L, label, params):
    out = {}
    for name in required_params(label):
        if name not in params or params[name] is None:
            raise MissingParam(f"{label} needs parameter {name!r}")
        v = params[name]
        if name == "s":
            v = tuple(as_fraction(x) for x in v)
            if len(v) != L.dim:
                raise MissingParam(f"parameter s must have length {L.dim}")
        else:
            v = as_fraction(v)
        out[name] = v
    return out


def residual(label, alpha, **params):
    """Left minus right side of the named equation at ``alpha``.

    ``alpha`` is a T2 except for ``eq3.10``, where it is the element ``g`` of H
    and the result is a T2.
    """
    required_params(label)
    L = alpha.L
    p = _params(L, label, params)
    if label == "eq3.10":
        from .uea import coproduct

        g, s, t = alpha, p["s"], p["t"]
        sv = UEl.from_delta(L, s)
        one = UEl.one(L)
        return Tensor.outer(g, g) - (Tensor.outer(one, sv) + t) * coproduct(g) + Tensor.outer(one, g * sv)
    a = alpha
    if label in ("eq2.1", "eq2.2", "eq4.1"):
        x = _left(a, a) - _right(a, a)
        if label == "eq4.1":
            return x
        return x - swap(x, "12" if label == "eq2.1" else "23")
    if label == "eq3.1":
        y = _right(a, a)
        return y - swap(y, "12")
    s, t = p["s"], p["t"]
    one2 = Tensor.scalar(L, 2, 1)
    s_mid = _slot_vec(L, s, 1, 3) + t
    s_last = _slot_vec(L, s, 2, 3) + t
    if label == "eq3.2":
        y = s_mid * lift(a, "delta_left") - _right(a, a)
        return y - swap(y, "12")
    if label == "eq3.7":
        return _left(a, a) - s_last * lift(a, "delta_right")
    if label == "eq3.8":
        rhs_t2 = _slot_vec(L, s, 1, 2) + t * one2
        y = s_mid * lift(a, "delta_left") - _right(a, rhs_t2)
        return y - swap(y, "12")
    # eq3.9
    l, k = p["l"], p["k"]
    lhs = _left(a, a) - s_last * lift(a, "delta_right")
    factor3 = _slot_vec(L, s, 1, 3) + _slot_vec(L, s, 0, 3).scale(l) + k
    beta = _slot_vec(L, s, 1, 2) + _slot_vec(L, s, 0, 2).scale(l) + k * one2
    rhs = factor3 * lift(a, "delta_left") - _right(a, beta)
    return lhs - swap(rhs, "12")


def unknown_basis(L, D):
    """T2 monomial keys ``(I, J)`` with ``|I| + |J| <= D``, in a fixed order."""
    if D < 0:
        raise EmptyBasisDomain(f"degree bound must be nonnegative, got {D}")
    monos = [I for I in iproduct(range(D + 1), repeat=L.dim) if sum(I) <= D]
    monos.sort(key=lambda I: (sum(I), tuple(-x for x in I)))
    return [(I, J) for I in monos for J in monos if sum(I) + sum(J) <= D]


def _random_t2(L, D, rng):
    keys = unknown_basis(L, D)
    picks = rng.sample(keys, min(3, len(keys)))
    return Tensor(L, 2, {k: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for k in picks})


def is_linear(fn, L, D=2, probes=3, seed=0):
    """Probe ``fn(a + b) - fn(a) - fn(b) + fn(0) == 0`` on random pairs."""
    rng = random.Random(seed)
    zero = fn(Tensor.zero(L, 2))
    for _ in range(probes):
        a, b = _random_t2(L, D, rng), _random_t2(L, D, rng)
        if fn(a + b) - fn(a) - fn(b) + zero:
            return False
    return True


def _to_integer_rows(rows):
    out = []
    for row in rows:
        m = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * m) for x in row])
    return out


def nullspace(rows, ncols):
    """Exact right nullspace of a rational matrix.

    Forward elimination is fraction-free (Bareiss) on an integer copy; the
    basis is read off the reduced echelon form with each free variable set to 1.
    """
    a = _to_integer_rows([list(r) for r in rows if any(r)])
    pivots = []
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            a[i] = [(a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev for j in range(ncols)]
        prev = a[r][c]
        pivots.append(c)
        r += 1
    rref = [[Fraction(x) for x in row] for row in a[:r]]
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        p = rref[i][c]
        rref[i] = [x / p for x in rref[i]]
        for j in range(i):
            f = rref[j][c]
            if f:
                rref[j] = [x - f * y for x, y in zip(rref[j], rref[i])]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rref[i][f]
        basis.append(v)
    return basis


def solve_linear(fn, L, D):
    """Basis of ``{alpha : fn(alpha) = 0, deg alpha <= D}`` for a linear ``fn`` from T2."""
    keys = unknown_basis(L, D)
    if not is_linear(fn, L, min(D, 2)):
        raise NotLinear("residual is not linear in the unknown")
    cols = [fn(Tensor(L, 2, {key: Fraction(1)})) for key in keys]
    row_keys = sorted({rk for col in cols for rk in col.terms})
    rows = [[col.terms.get(rk, Fraction(0)) for col in cols] for rk in row_keys]
    out = []
    for v in nullspace(rows, len(keys)):
        out.append(Tensor(L, 2, {key: c for key, c in zip(keys, v) if c}))
    return out


def linear_nullspace(label, D, L, **params):
    """Exact degree-``D`` solution space of a linear equation such as ``eq3.8``."""
    required_params(label)
    if D < 0:
        raise EmptyBasisDomain(f"degree bound must be nonnegative, got {D}")
    if label == "eq3.10":
        raise NotLinear("eq3.10 is quadratic in g")
    _params(L, label, params)
    return solve_linear(lambda a: residual(label, a, **params), L, D)


def residual_rank(tensors):
    """Rank of the span of a list of residual tensors (used for maximality spot checks)."""
    keys = sorted({k for t in tensors for k in t.terms})
    rows = [[t.terms.get(k, Fraction(0)) for t in tensors] for k in keys]
    return len(tensors) - len(nullspace(rows, len(tensors)))
