"""Declarative catalogue of rank-1 and rank-2 pseudoalgebra structures.

Every entry is plain data: the four products ``e_i * e_j`` are written as
pairs ``(coefficient of e1, coefficient of e2)`` of T2 templates (see
:mod:`pseudoalg.templates`), side conditions are small predicate strings and
basis changes are matrices of H-valued templates. :func:`instantiate` compiles
an entry for a concrete Lie algebra and parameter set.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    AmbientMismatch,
    InputError,
    MissingParam,
    NotInvertible,
    NotPreLie,
    RankMismatch,
    UnknownEntry,
)
from .lie import as_fraction
from .pseudo import ModuleElement, ProductTable, normalize, to_tensors
from .templates import eval_condition, eval_h, eval_t2
from .tensor import Tensor, t_mul
from .uea import UEl

VECTOR_PARAMS = ("s", "s1", "s2")
SCALAR_PARAMS = ("t", "t1", "t2", "l", "k", "c")
UEL_PARAMS = ("g", "h")
SELECTOR_PARAMS = ("alpha",)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    axiom: str
    rank: int
    params: tuple
    products: dict  # {(i, j): (template for e1, template for e2)}; rank 1 uses {(0, 0): (tmpl,)}
    conditions: tuple = ()
    choices: dict = field(default_factory=dict)  # selector name -> {choice: template}
    family: str = ""

    @property
    def kind(self):
        return self.id.split("/")[0]


def _entry(id, axiom, params, e11, e22, e12=(None, None), e21=(None, None), conditions=(), choices=None):
    products = {(0, 0): e11, (0, 1): e12, (1, 0): e21, (1, 1): e22}
    return CatalogEntry(id, axiom, 2, tuple(params), products, tuple(conditions), choices or {})


def _rank1(id, axiom, params, alpha, conditions=()):
    return CatalogEntry(id, axiom, 1, tuple(params), {(0, 0): (alpha,)}, tuple(conditions))


LP = "left-prelie"
AS = "assoc"
Z = (None, None)

_ENTRIES = []


def _add(*entries):
    _ENTRIES.extend(entries)


# rank one
_add(
    _rank1("prop2.2", LP, ("s", "t"), "1(x)s + t"),
    _rank1("prop2.3", "right-prelie", ("s", "t"), "s(x)1 + t"),
    _rank1("cor2.4", "left+right", ("t",), "t"),
    _rank1("thm4.1", AS, ("t",), "t"),
    _rank1("thm4.1/1", AS, (), "0"),
    _rank1("thm4.1/2", AS, (), "1"),
)

# all four of s1, s2, t1, t2 nonzero
_B36 = dict(e11=("1(x)s1 + t1", None), e22=(None, "1(x)s2 + t2"))
_P4 = ("s1", "s2", "t1", "t2")
_NZ4 = ("s1 != 0", "s2 != 0", "t1 != 0", "t2 != 0")
_PROP = ("t1*s2 == t2*s1", "t1*s2 != 0")
_COMM = ("[s1,s2] == 0",)
_add(
    _entry("thm3.6/1", LP, _P4, **_B36, conditions=_NZ4),
    _entry("thm3.6/2", LP, _P4, **_B36, e12=(None, "1(x)s1 + t1"), e21=(None, "1(x)s1 + t1"), conditions=_NZ4 + _PROP),
    _entry("thm3.6/3", LP, _P4, **_B36, e12=(None, "1(x)s1"), e21=("1(x)s2", None), conditions=_NZ4 + _COMM),
    _entry("thm3.6/4", LP, _P4, **_B36, e12=(None, "1(x)s1 + t1"), e21=("1(x)s2 + t2", None), conditions=_NZ4 + _PROP),
    _entry("thm3.6/5", LP, _P4, **_B36, e12=(None, "1(x)s1 + t1"), e21=("1(x)s2", "t1"), conditions=_NZ4 + _COMM),
    _entry(
        "thm3.6/6", LP, _P4, **_B36,
        e12=(None, "1(x)s1 + 2*t1"), e21=("1(x)s2 + 1/2*t2", "t1"),
        conditions=_NZ4 + ("2*t1*s2 == t2*s1", "2*t1*s2 != 0"),
    ),
    _entry("thm3.6/7", LP, _P4, **_B36, e12=("t2", "1(x)s1"), e21=("1(x)s2", "t1"), conditions=_NZ4 + _PROP),
    _entry(
        "thm3.6/8", LP, _P4, **_B36,
        e12=("t2", "1(x)s1 + 2*t1"), e21=("1(x)s2 + 2*t2", "t1"), conditions=_NZ4 + _PROP,
    ),
    _entry("thm3.6/9", LP, _P4, **_B36, e12=("t2", "1(x)s1"), e21=("1(x)s2 + t2", None), conditions=_NZ4 + _COMM),
    _entry(
        "thm3.6/10", LP, _P4, **_B36,
        e12=("t2", "1(x)s1 + 1/2*t1"), e21=("1(x)s2 + 2*t2", None),
        conditions=_NZ4 + ("1/2*t1*s2 == t2*s1", "t1*s2 != 0"),
    ),
    _entry("thm3.6/11", LP, _P4, **_B36, e12=("1(x)s2 + t2", None), e21=("1(x)s2 + t2", None), conditions=_NZ4 + _PROP),
)

# reduced forms of the previous family
_add(
    _entry("cor3.7/i", LP, ("s1", "s2"), ("1(x)s1 + 1", None), (None, "1(x)s2 + 1"), conditions=("s1 != 0", "s2 != 0")),
    _entry("cor3.7/ii", LP, ("s",), ("1(x)s + 1", None), (None, "1(x)s + 1"), conditions=("s != 0",)),
    _entry(
        "cor3.7/iii", LP, ("s1", "s2"), ("1(x)s1 + 1", None), (None, "1(x)s2 + 1"),
        e12=(None, "1(x)s1"), e21=("1(x)s2", None), conditions=("s1 != 0", "s2 != 0") + _COMM,
    ),
    _entry("cor3.7/iv", LP, ("s",), ("1(x)s + 1", None), Z, e12=(None, "1(x)s + 1"), conditions=("s != 0",)),
    _entry(
        "cor3.7/v", LP, ("s1", "s2"), ("1(x)s1 + 1", None), (None, "1(x)s2 + 1"),
        e12=(None, "1(x)s1 + 1"), e21=("1(x)s2", "1"), conditions=("s1 != 0", "s2 != 0") + _COMM,
    ),
    _entry("cor3.7/vi", LP, ("s",), (None, "-1"), (None, "1(x)s + 2"), e21=("1(x)s + 1", None), conditions=("s != 0",)),
    _entry("cor3.7/vii", LP, ("s",), ("1(x)s + 1", None), Z, e12=(None, "1(x)s"), e21=(None, "1"), conditions=("s != 0",)),
)

# all of s1, s2, t1, t2 zero
_add(
    _entry("thm3.8/1", LP, (), Z, Z),
    _entry("thm3.8/2", LP, ("g",), Z, Z, e21=("g(x)1", None), conditions=("g != 0",)),
    _entry("thm3.8/3", LP, ("h",), Z, Z, e12=(None, "h(x)1"), conditions=("h != 0",)),
)

# s1 = t1 = 0, s2 = s nonzero
_ALPHA39 = {"zero": "0", "t": "t", "s+t": "1(x)s + t"}
_add(
    _entry("thm3.9/1", LP, ("s", "t"), Z, (None, "1(x)s + t"), conditions=("s != 0",)),
    _entry(
        "thm3.9/2", LP, ("s", "t", "l", "k", "alpha"), Z, (None, "1(x)s + t"),
        e12=("{alpha}", None), e21=("1(x)s + l*s(x)1 + k", None),
        conditions=("s != 0",), choices={"alpha": _ALPHA39},
    ),
)

# s1 = s2 = t1 = 0, t2 = t nonzero
_add(
    _entry(
        "thm3.10", LP, ("t", "g", "alpha"), Z, (None, "t"),
        e12=("{alpha}", None), e21=("g(x)1", None),
        conditions=("t != 0",), choices={"alpha": {"zero": "0", "t": "t"}},
    ),
)

# s1 = s2 = 0, t1, t2 nonzero
_B311 = dict(e11=("t1", None), e22=(None, "t2"))
_T12 = ("t1", "t2")
_NZT = ("t1 != 0", "t2 != 0")
_add(
    _entry("thm3.11/1", LP, _T12, **_B311, conditions=_NZT),
    _entry("thm3.11/2", LP, _T12, **_B311, e12=(None, "t1"), e21=("t2", None), conditions=_NZT),
    _entry("thm3.11/3", LP, _T12, **_B311, e12=(None, "t1"), e21=(None, "t1"), conditions=_NZT),
    _entry("thm3.11/4", LP, _T12, **_B311, e12=(None, "2*t1"), e21=("1/2*t2", "t1"), conditions=_NZT),
    _entry("thm3.11/5", LP, _T12, **_B311, e12=("t2", None), e21=("t2", None), conditions=_NZT),
    _entry("thm3.11/6", LP, _T12, **_B311, e12=("t2", None), e21=(None, "t1"), conditions=_NZT),
    _entry("thm3.11/7", LP, _T12, **_B311, e12=("t2", "1/2*t1"), e21=("2*t2", None), conditions=_NZT),
    _entry("thm3.11/8", LP, _T12, **_B311, e12=("t2", "2*t1"), e21=("2*t2", "t1"), conditions=_NZT),
)

# constant reductions, current algebras of 2-dimensional pre-Lie algebras
_add(
    _entry("cor3.12/i", LP, (), ("1", None), (None, "1")),
    _entry("cor3.12/ii", LP, (), Z, (None, "1"), e21=("1", None)),
    _entry("cor3.12/iii", LP, (), ("2", None), ("-1", None), e12=(None, "1")),
    _entry("cor3.12/iv", LP, (), Z, (None, "1"), e12=("1", None)),
)

# t1 = t2 = 0, s1, s2 nonzero
_B313 = dict(e11=("1(x)s1", None), e22=(None, "1(x)s2"))
_S12 = ("s1", "s2")
_NZS = ("s1 != 0", "s2 != 0")
_add(
    _entry("thm3.13/1", LP, _S12, **_B313, conditions=_NZS),
    _entry(
        "thm3.13/2", LP, _S12 + ("c",), **_B313,
        e12=(None, "1(x)s1"), e21=(None, "1(x)s1"), conditions=_NZS + ("s1 == c*s2", "c != 0"),
    ),
    _entry("thm3.13/3", LP, _S12, **_B313, e12=(None, "1(x)s1"), e21=("1(x)s2", None), conditions=_NZS + _COMM),
    _entry(
        "thm3.13/4", LP, _S12 + ("c",), **_B313,
        e12=("1(x)s2", None), e21=("1(x)s2", None), conditions=_NZS + ("s1 == c*s2", "c != 0"),
    ),
    _entry("cor3.14/i", LP, _S12, **_B313, conditions=_NZS),
    _entry("cor3.14/ii", LP, ("s",), ("1(x)s", None), (None, "1(x)s"), conditions=("s != 0",)),
    _entry("cor3.14/iii", LP, _S12, **_B313, e12=(None, "1(x)s1"), e21=("1(x)s2", None), conditions=_NZS + _COMM),
)

# s1 = t2 = 0; e1*e1 = t e1, e2*e2 = (1(x)s) e2
_B315 = dict(e11=("t", None), e22=(None, "1(x)s"))
_ST = ("s", "t")
_NZST = ("s != 0", "t != 0")
_add(
    _entry("thm3.15/1", LP, _ST, **_B315, conditions=_NZST),
    _entry("thm3.15/2", LP, _ST, **_B315, e21=("1(x)s", None), conditions=_NZST),
    _entry("thm3.15/3", LP, _ST, **_B315, e12=(None, "t"), e21=("1(x)s", "t"), conditions=_NZST),
    _entry("thm3.15/4", LP, _ST, **_B315, e12=("1(x)s", None), e21=("1(x)s + s(x)1", None), conditions=_NZST),
    _entry("cor3.16/i", LP, ("s",), ("1", None), (None, "1(x)s"), conditions=("s != 0",)),
    _entry("cor3.16/ii", LP, ("s",), ("1", None), (None, "1(x)s"), e21=("1(x)s", None), conditions=("s != 0",)),
    _entry(
        "cor3.16/iii", LP, ("s",), ("1", None), (None, "1(x)s"),
        e12=(None, "1"), e21=("1(x)s", "1"), conditions=("s != 0",),
    ),
)

# t1 = 0, s1, s2 nonzero; e2*e2 = (1(x)s2 + t) e2
_B317 = dict(e11=("1(x)s1", None), e22=(None, "1(x)s2 + t"))
_P317 = ("s1", "s2", "t")
_NZ317 = ("s1 != 0", "s2 != 0", "t != 0")
_add(
    _entry("thm3.17/1", LP, _P317, **_B317, conditions=_NZ317),
    _entry("thm3.17/2", LP, _P317, **_B317, e12=(None, "1(x)s1"), e21=("1(x)s2", None), conditions=_NZ317 + _COMM),
    _entry(
        "thm3.17/3", LP, _P317, **_B317,
        e12=("t", "1(x)s1"), e21=("1(x)s2 + t", None), conditions=_NZ317 + _COMM,
    ),
    _entry("cor3.18/i", LP, _S12, ("1(x)s1", None), (None, "1(x)s2 + 1"), conditions=_NZS),
    _entry(
        "cor3.18/ii", LP, _S12, ("1(x)s1", None), (None, "1(x)s2 + 1"),
        e12=(None, "1(x)s1"), e21=("1(x)s2", None), conditions=_NZS + _COMM,
    ),
    _entry(
        "cor3.18/iii", LP, _S12, ("1(x)s1", None), (None, "1(x)s2 + 1"),
        e12=("1", "1(x)s1"), e21=("1(x)s2 + 1", None), conditions=_NZS + _COMM,
    ),
)

# s1 = 0; e1*e1 = t1 e1, e2*e2 = (1(x)s + t2) e2
_B319 = dict(e11=("t1", None), e22=(None, "1(x)s + t2"))
_P319 = ("s", "t1", "t2")
_NZ319 = ("s != 0", "t1 != 0", "t2 != 0")
_add(
    _entry("thm3.19/1", LP, _P319, **_B319, conditions=_NZ319),
    _entry("thm3.19/2", LP, _P319, **_B319, e21=("1(x)s", None), conditions=_NZ319),
    _entry("thm3.19/3", LP, _P319, **_B319, e12=(None, "t1"), e21=("1(x)s", "t1"), conditions=_NZ319),
    _entry("thm3.19/4", LP, _P319, **_B319, e12=("t2", None), e21=("1(x)s + t2", None), conditions=_NZ319),
    _entry(
        "thm3.19/5", LP, _P319, **_B319,
        e12=("1(x)s + t2", None), e21=("1(x)s + s(x)1 + t2", None), conditions=_NZ319,
    ),
    _entry("cor3.20/i", LP, ("s",), ("1", None), (None, "1(x)s + 1"), conditions=("s != 0",)),
    _entry("cor3.20/ii", LP, ("s",), ("1", None), (None, "1(x)s + 1"), e21=("1(x)s", None), conditions=("s != 0",)),
    _entry(
        "cor3.20/iii", LP, ("s",), ("1", None), (None, "1(x)s + 1"),
        e12=(None, "1"), e21=("1(x)s", "1"), conditions=("s != 0",),
    ),
)

# associative, rank two
_add(
    _entry("thm4.2", AS, (), Z, Z),
    _entry("thm4.3/1", AS, (), Z, (None, "1")),
    _entry("thm4.3/2", AS, (), Z, (None, "1"), e21=("1", None)),
    _entry("thm4.3/3", AS, (), Z, (None, "1"), e12=("1", None)),
    _entry("thm4.3/4", AS, (), Z, (None, "1"), e12=("1", None), e21=("1", None)),
    _entry("thm4.4/1", AS, _T12, **_B311, conditions=_NZT),
    _entry("thm4.4/2", AS, _T12, **_B311, e12=("t2", None), e21=("t2", None), conditions=_NZT),
    _entry("thm4.4/3", AS, _T12, **_B311, e12=(None, "t1"), e21=("t2", None), conditions=_NZT),
    _entry("thm4.4/4", AS, _T12, **_B311, e12=("t2", None), e21=(None, "t1"), conditions=_NZT),
    _entry("thm4.4/5", AS, _T12, **_B311, e12=(None, "t1"), e21=(None, "t1"), conditions=_NZT),
    _entry("cor4.5/i", AS, (), ("1", None), (None, "1")),
    _entry("cor4.5/ii", AS, (), Z, (None, "1"), e21=("1", None)),
    _entry("cor4.5/iii", AS, (), Z, (None, "1"), e12=("1", None)),
)

CATALOG = {e.id: e for e in _ENTRIES}
CURRENT_ID = "cur"


def entry_ids():
    """Every instantiable id (``cur`` is built from structure constants by :func:`current`)."""
    return sorted(CATALOG, key=_id_sort_key) + [CURRENT_ID]


_ROMAN = {"i": 1, "ii": 2, "iii": 3, "iv": 4, "v": 5, "vi": 6, "vii": 7}


def _id_sort_key(eid):
    head, _, tail = eid.partition("/")
    kind = "".join(ch for ch in head if ch.isalpha())
    nums = tuple(int(x) for x in "".join(ch for ch in head if not ch.isalpha()).split("."))
    sub = int(tail) if tail.isdigit() else _ROMAN.get(tail, 0)
    return (nums, kind, sub)


def get_entry(eid):
    try:
        return CATALOG[eid]
    except KeyError:
        raise UnknownEntry(f"unknown catalog entry {eid!r}") from None


@dataclass
class SideConditionReport:
    results: list  # [(condition, bool)]

    @property
    def satisfied(self):
        return all(ok for _, ok in self.results)

    def as_dict(self):
        return {cond: ok for cond, ok in self.results}


def _coerce_params(L, entry, params):
    out = {}
    for name in entry.params:
        if name not in params:
            raise MissingParam(f"entry {entry.id} needs parameter {name!r}")
        v = params[name]
        if name in VECTOR_PARAMS:
            if isinstance(v, UEl):
                raise InputError(f"parameter {name!r} must be a vector of the Lie algebra")
            v = tuple(as_fraction(x) for x in v)
            if len(v) != L.dim:
                raise InputError(f"parameter {name!r} has length {len(v)}, expected {L.dim}")
        elif name in UEL_PARAMS:
            if not isinstance(v, UEl):
                v = UEl.scalar(L, v)
            if v.L != L:
                raise AmbientMismatch(f"parameter {name!r} lives over a different Lie algebra")
        elif name in SELECTOR_PARAMS:
            if v not in entry.choices[name]:
                raise InputError(f"{name} must be one of {sorted(entry.choices[name])}, got {v!r}")
        else:
            v = as_fraction(v)
        out[name] = v
    return out


def _template(entry, tmpl, params):
    if tmpl is None:
        return None
    for name, options in entry.choices.items():
        tmpl = tmpl.replace("{" + name + "}", options[params[name]])
    return tmpl


def instantiate(eid, params, L):
    """Compile a catalogue entry into a :class:`ProductTable` and evaluate its side conditions.

    The table is returned even when some side condition fails. ``cur`` takes the
    pre-Lie structure constants as ``params["m"]``.
    """
    if eid == CURRENT_ID:
        if "m" not in params:
            raise MissingParam("cur needs structure constants 'm'")
        return current(params["m"], L), SideConditionReport([])
    entry = get_entry(eid)
    p = _coerce_params(L, entry, params)
    alpha = {}
    for (i, j), row in entry.products.items():
        for k, tmpl in enumerate(row):
            tmpl = _template(entry, tmpl, p)
            if tmpl is None:
                continue
            t = eval_t2(L, tmpl, p)
            if t:
                alpha[i, j, k] = t
    table = ProductTable(L, entry.rank, alpha)
    report = SideConditionReport([(c, eval_condition(L, c, p)) for c in entry.conditions])
    return table, report


def current(m, L):
    """Current pseudoalgebra of a finite-dimensional pre-Lie algebra with ``e_i o e_j = sum m[i][j][k] e_k``.

    Left-symmetry of the associator is checked first.
    """
    n = len(m)
    if n < 1 or any(len(row) != n or any(len(col) != n for col in row) for row in m):
        raise InputError("pre-Lie structure constants must have shape n x n x n")
    mm = [[[as_fraction(x) for x in col] for col in row] for row in m]

    def prod(x, y):
        out = [Fraction(0)] * n
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        for k in range(n):
                            out[k] += a * b * mm[i][j][k]
        return out

    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = basis[i], basis[j], basis[k]
                a_xyz = [p - q for p, q in zip(prod(prod(x, y), z), prod(x, prod(y, z)))]
                a_yxz = [p - q for p, q in zip(prod(prod(y, x), z), prod(y, prod(x, z)))]
                if a_xyz != a_yxz:
                    raise NotPreLie((i, j, k))
    alpha = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if mm[i][j][k]:
                    alpha[i, j, k] = Tensor.scalar(L, 2, mm[i][j][k])
    return ProductTable(L, n, alpha)


class BasisChange:
    """``e'_i = sum_j P[i][j] e_j`` with an inverse ``Pinv`` over H (checked exactly)."""

    __slots__ = ("L", "P", "Pinv")

    def __init__(self, L, P, Pinv=None):
        n = len(P)
        if any(len(row) != n for row in P):
            raise InputError("basis change must be a square matrix")
        self.L = L
        self.P = [list(row) for row in P]
        self.Pinv = [list(row) for row in Pinv] if Pinv is not None else _invert(L, self.P)
        if len(self.Pinv) != n or any(len(row) != n for row in self.Pinv):
            raise InputError("inverse must have the same shape as P")
        one, zero = UEl.one(L), UEl.zero(L)
        for A, B in ((self.P, self.Pinv), (self.Pinv, self.P)):
            for i in range(n):
                for j in range(n):
                    s = zero
                    for k in range(n):
                        s = s + A[i][k] * B[k][j]
                    if s != (one if i == j else zero):
                        raise NotInvertible("P * Pinv is not the identity over H")

    @property
    def rank(self):
        return len(self.P)

    @classmethod
    def identity(cls, L, n):
        one, zero = UEl.one(L), UEl.zero(L)
        P = [[one if i == j else zero for j in range(n)] for i in range(n)]
        return cls(L, P, P)


def _invert(L, P):
    """Inverse of a matrix over H that is triangular with nonzero scalar diagonal, or purely scalar."""
    n = len(P)
    zero, one = UEl.zero(L), UEl.one(L)
    if all(x.is_scalar for row in P for x in row):
        return _invert_scalar(L, P)
    lower = all(not P[i][j] for i in range(n) for j in range(i + 1, n))
    upper = all(not P[i][j] for i in range(n) for j in range(i))
    if not (lower or upper):
        raise NotInvertible("cannot invert a non-triangular matrix over H; supply Pinv")
    for i in range(n):
        d = P[i][i]
        if not d or not d.is_scalar:
            raise NotInvertible("diagonal entries must be nonzero scalars")
    inv = [[zero] * n for _ in range(n)]
    order = range(n) if lower else range(n - 1, -1, -1)
    for col in range(n):
        for i in order:
            rhs = one if i == col else zero
            for j in range(n):
                if j != i and P[i][j]:
                    rhs = rhs - P[i][j] * inv[j][col]
            inv[i][col] = rhs.scale(1 / _scalar(P[i][i]))
    return inv


def _scalar(x):
    return Fraction(next(iter(x.terms.values())))


def _invert_scalar(L, P):
    n = len(P)
    a = [[(_scalar(x) if x else Fraction(0)) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(P)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise NotInvertible("singular scalar basis change")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [[UEl.scalar(L, a[i][n + j]) for j in range(n)] for i in range(n)]


def transform(T, B):
    """Structure constants of ``T`` in the basis ``e'_i = sum_j P_ij e_j``."""
    if T.rank != B.rank:
        raise RankMismatch(f"table of rank {T.rank} with a {B.rank}x{B.rank} basis change")
    if T.L != B.L:
        raise AmbientMismatch("table and basis change live over different Lie algebras")
    L, n = T.L, T.rank
    alpha = {}
    for i in range(n):
        for j in range(n):
            raw = []
            for a in range(n):
                if not B.P[i][a]:
                    continue
                for b in range(n):
                    if not B.P[j][b]:
                        continue
                    coeff = Tensor.outer(B.P[i][a], B.P[j][b])
                    for c in range(n):
                        t = T.alpha.get((a, b, c))
                        if t is None:
                            continue
                        # e_c = sum_d Pinv[c][d] e'_d
                        raw.append((t_mul(coeff, t), ModuleElement(L, B.Pinv[c])))
            if not raw:
                continue
            for k, t in to_tensors(normalize(raw), n).items():
                if t:
                    alpha[i, j, k] = t
    return ProductTable(L, n, alpha)


def relabel(T, perm):
    """Rename ``e_i -> e_perm[i]``."""
    return ProductTable(T.L, T.rank, {(perm[i], perm[j], perm[k]): t for (i, j, k), t in T.alpha.items()})


def equivalent(T1, T2):
    """Exact termwise equality of two product tables."""
    if T1.L != T2.L:
        raise AmbientMismatch("tables live over different Lie algebras")
    if T1.rank != T2.rank:
        raise RankMismatch(f"rank {T1.rank} vs {T2.rank}")
    return T1.alpha == T2.alpha


@dataclass(frozen=True)
class Reduction:
    """A stated or derived basis change taking ``source`` to ``target``.

    ``P`` holds H-valued templates, ``target_params`` maps the target's
    parameters to expressions in the source's, ``exchange`` relabels
    ``e1 <-> e2`` after the change. ``note`` records a flagged discrepancy.
    """

    source: str
    target: str
    P: tuple
    target_params: dict = field(default_factory=dict)
    exchange: bool = False
    stated: bool = True
    note: str = ""


_DIAG = (("1/t1", "0"), ("0", "1/t2"))
_S1S2 = {"s1": "s1/t1", "s2": "s2/t2"}
_SW = {"s1": "s2/t2", "s2": "s1/t1"}

REDUCTIONS = (
    Reduction("thm3.6/1", "cor3.7/i", _DIAG, _S1S2),
    Reduction("thm3.6/2", "cor3.7/ii", (("1/t1", "-1/t2"), ("0", "1/t2")), {"s": "s1/t1"}),
    Reduction("thm3.6/3", "cor3.7/iii", _DIAG, _S1S2),
    Reduction("thm3.6/4", "cor3.7/iv", (("1/t1", "0"), ("1/t1", "-1/t2")), {"s": "s1/t1"}),
    Reduction("thm3.6/5", "cor3.7/v", _DIAG, _S1S2),
    Reduction("thm3.6/6", "cor3.7/vi", (("1/t1", "-2/t2"), ("0", "2/t2")), {"s": "s1/t1"}),
    Reduction("thm3.6/7", "cor3.7/vii", (("1/2/t1", "1/2/t2"), ("1/2/t1", "-1/2/t2")), {"s": "s1/t1"}),
    Reduction("thm3.6/8", "cor3.7/vi", (("1/2/t1", "1/2/t2"), ("1/2/t1", "-1/2/t2")), {"s": "s1/t1"}, exchange=True),
    Reduction("thm3.6/9", "cor3.7/v", _DIAG, _SW, exchange=True),
    Reduction("thm3.6/10", "cor3.7/vi", (("2/t1", "0"), ("2/t1", "-1/t2")), {"s": "2*s1/t1"}, exchange=True),
    Reduction("thm3.6/11", "cor3.7/ii", (("1/t1", "0"), ("-1/t1", "1/t2")), {"s": "s1/t1"}),
    Reduction("thm3.11/1", "cor3.12/i", _DIAG),
    Reduction("thm3.11/2", "cor3.12/ii", (("-1/t1", "1/t2"), ("0", "1/t2"))),
    Reduction("thm3.11/3", "cor3.12/i", (("1/t1", "-1/t2"), ("0", "1/t2"))),
    Reduction("thm3.11/4", "cor3.12/iii", (("0", "2/t2"), ("1/t1", "-2/t2"))),
    Reduction("thm3.11/5", "cor3.12/i", (("1/t1", "0"), ("-1/t1", "1/t2"))),
    Reduction("thm3.11/6", "cor3.12/iv", (("1/t1", "-1/t2"), ("0", "1/t2"))),
    Reduction("thm3.11/7", "cor3.12/iii", (("2/t1", "0"), ("-2/t1", "1/t2"))),
    Reduction("thm3.11/8", "cor3.12/iii", (("1/2/t1", "1/2/t2"), ("1/2/t1", "-1/2/t2"))),
    Reduction("thm3.13/1", "cor3.14/i", (("1", "0"), ("0", "1")), {"s1": "s1", "s2": "s2"}, stated=False),
    Reduction("thm3.13/2", "cor3.14/ii", (("1", "-c"), ("0", "c")), {"s": "s1"}, stated=False),
    Reduction("thm3.13/3", "cor3.14/iii", (("1", "0"), ("0", "1")), {"s1": "s1", "s2": "s2"}, stated=False),
    Reduction("thm3.13/4", "cor3.14/ii", (("1", "0"), ("-1", "c")), {"s": "s1"}, stated=False),
    Reduction("thm3.15/1", "cor3.16/i", (("1/t", "0"), ("0", "1")), {"s": "s"}, stated=False),
    Reduction("thm3.15/2", "cor3.16/ii", (("1/t", "0"), ("0", "1")), {"s": "s"}, stated=False),
    Reduction("thm3.15/3", "cor3.16/iii", (("1/t", "0"), ("0", "1")), {"s": "s"}, stated=False),
    Reduction(
        "thm3.15/4", "cor3.16/ii", (("1/t", "0"), ("-1/t*s", "1")), {"s": "s"},
        note="the accompanying text names type (iii); the computed table is type (ii)",
    ),
    Reduction("thm3.17/1", "cor3.18/i", (("1", "0"), ("0", "1/t")), {"s1": "s1", "s2": "s2/t"}, stated=False),
    Reduction("thm3.17/2", "cor3.18/ii", (("1", "0"), ("0", "1/t")), {"s1": "s1", "s2": "s2/t"}, stated=False),
    Reduction("thm3.17/3", "cor3.18/iii", (("1", "0"), ("0", "1/t")), {"s1": "s1", "s2": "s2/t"}, stated=False),
    Reduction("thm3.19/1", "cor3.20/i", _DIAG, {"s": "s/t2"}, stated=False),
    Reduction("thm3.19/2", "cor3.20/ii", _DIAG, {"s": "s/t2"}, stated=False),
    Reduction("thm3.19/3", "cor3.20/iii", _DIAG, {"s": "s/t2"}, stated=False),
    Reduction("thm3.19/4", "cor3.20/ii", (("1/t1", "0"), ("-1/t1", "1/t2")), {"s": "s/t2"}, stated=False),
    Reduction(
        "thm3.19/5", "cor3.20/ii", (("1/t1", "0"), ("-1/t1/t2*s - 1/t1", "1/t2")), {"s": "s/t2"},
    ),
    Reduction("thm4.4/1", "cor4.5/i", _DIAG, stated=False),
    Reduction("thm4.4/2", "cor4.5/i", (("1/t1", "0"), ("-1/t1", "1/t2")), stated=False),
    Reduction("thm4.4/3", "cor4.5/ii", (("-1/t1", "1/t2"), ("0", "1/t2")), stated=False),
    Reduction("thm4.4/4", "cor4.5/iii", (("1/t1", "-1/t2"), ("0", "1/t2")), stated=False),
    Reduction("thm4.4/5", "cor4.5/i", (("1/t1", "-1/t2"), ("0", "1/t2")), stated=False),
)

# associative types that reappear among the pre-Lie ones: (source, pre-Lie id, fixed params)
CROSS_CHECKS = (
    ("thm4.2", "thm3.8/1", {}),
    ("thm4.3/1", "thm3.10", {"t": 1, "g": 0, "alpha": "zero"}),
    ("thm4.3/2", "thm3.10", {"t": 1, "g": 1, "alpha": "zero"}),
    ("thm4.3/3", "thm3.10", {"t": 1, "g": 0, "alpha": "t"}),
    ("thm4.3/4", "thm3.10", {"t": 1, "g": 1, "alpha": "t"}),
    ("thm4.4/1", "thm3.11/1", {}),
    ("thm4.4/2", "thm3.11/5", {}),
    ("thm4.4/3", "thm3.11/2", {}),
    ("thm4.4/4", "thm3.11/6", {}),
    ("thm4.4/5", "thm3.11/3", {}),
)


def reduction_basis(L, red, params):
    """Compile the reduction's P matrix for concrete parameters."""
    P = [[eval_h(L, x, params) for x in row] for row in red.P]
    return BasisChange(L, P)


def reduction_target_params(L, red, params):
    """Target parameters evaluated from the source ones (vectors via ``eval_product``)."""
    from .templates import eval_product

    return {name: eval_product(expr, params) for name, expr in red.target_params.items()}


def apply_reduction(L, red, params):
    """``(transformed source table, expected target table)`` for one reduction."""
    source, _ = instantiate(red.source, params, L)
    moved = transform(source, reduction_basis(L, red, _coerce_params(L, get_entry(red.source), params)))
    if red.exchange:
        moved = relabel(moved, (1, 0))
    target, _ = instantiate(red.target, reduction_target_params(L, red, _coerce_params(L, get_entry(red.source), params)), L)
    return moved, target
