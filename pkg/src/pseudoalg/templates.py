"""Tiny expression language used by the declarative catalog.

Scalar/vector/H-valued products: ``"2*t1"``, ``"1/2*t2"``, ``"-1/t1"``,
``"t1*s2"``, ``"c*s2"`` -- factors joined by ``*`` and ``/``; numbers, scalar
parameters and at most one vector or H-valued parameter.

T2 sums: ``"1(x)s1 + t1"``, ``"1(x)s + l*s(x)1 + k"``, ``"h(x)1"``; a term
without ``(x)`` is a scalar multiple of ``1 (x) 1``.

H sums: ``"-1/t1*s + 1/t2"`` -- used for basis-change matrix entries.
"""

import re
from fractions import Fraction

from .errors import InputError, MissingParam
from .lie import bracket as lie_bracket
from .tensor import Tensor
from .uea import UEl

_FACTOR = re.compile(r"\s*([*/])?\s*([A-Za-z_][A-Za-z_0-9]*|\d+)\s*")


def _split_sum(expr):
    """Split on top-level ``+``/``-`` keeping signs; returns [(sign, term)]."""
    out = []
    cur = ""
    sign = 1
    expr = expr.strip()
    i = 0
    while i < len(expr):
        ch = expr[i]
        if ch in "+-" and cur.strip() and not cur.rstrip().endswith(("*", "/")):
            out.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif ch == "-" and not cur.strip():
            sign = -sign
        else:
            cur += ch
        i += 1
    if cur.strip():
        out.append((sign, cur.strip()))
    return out


def _lookup(name, params):
    if name.isdigit():
        return Fraction(int(name))
    if name not in params:
        raise MissingParam(f"missing parameter {name!r}")
    return params[name]


def _times(a, b):
    if isinstance(a, Fraction):
        if isinstance(b, tuple):
            return tuple(a * x for x in b)
        return a * b
    if isinstance(b, Fraction):
        return _times(b, a)
    raise InputError("a product may contain at most one non-scalar factor")


def eval_product(expr, params):
    """Evaluate a ``*``/``/`` chain; the result is a Fraction, a vector tuple or a UEl."""
    expr = expr.strip()
    sign = 1
    while expr.startswith("-"):
        sign = -sign
        expr = expr[1:].strip()
    pos = 0
    value = Fraction(sign)
    first = True
    while pos < len(expr):
        m = _FACTOR.match(expr, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot parse {expr!r}")
        op, tok = m.groups()
        if first and op:
            raise InputError(f"cannot parse {expr!r}")
        x = _lookup(tok, params)
        if op == "/":
            if not isinstance(x, Fraction):
                raise InputError("only scalars can divide")
            if x == 0:
                raise InputError(f"division by zero parameter in {expr!r}")
            value = _times(value, 1 / x)
        else:
            value = _times(value, x)
        first = False
        pos = m.end()
    return value


def _as_uel(L, value):
    if isinstance(value, UEl):
        return value
    if isinstance(value, tuple):
        return UEl.from_delta(L, value)
    return UEl.scalar(L, value)


def eval_h(L, expr, params):
    """An element of H from a ``+``-separated sum of products."""
    total = UEl.zero(L)
    if expr.strip() in ("", "0"):
        return total
    for sign, term in _split_sum(expr):
        total = total + _as_uel(L, eval_product(term, params)).scale(sign)
    return total


def eval_t2(L, expr, params):
    """An element of ``H (x) H`` from a template such as ``"1(x)s1 + l*s1(x)1 + k"``."""
    total = Tensor.zero(L, 2)
    if expr is None or expr.strip() in ("", "0"):
        return total
    for sign, term in _split_sum(expr):
        if "(x)" in term:
            left, right = term.split("(x)")
            a = _as_uel(L, eval_product(left, params))
            b = _as_uel(L, eval_product(right, params))
            total = total + Tensor.outer(a, b).scale(sign)
        else:
            v = eval_product(term, params)
            if not isinstance(v, Fraction):
                raise InputError(f"bare non-scalar term {term!r}; write it as x(x)1 or 1(x)x")
            total = total + Tensor.scalar(L, 2, v * sign)
    return total


def _is_zero(v):
    if isinstance(v, tuple):
        return not any(v)
    return not v


def _eval_side(L, expr, params):
    expr = expr.strip()
    if expr.startswith("["):
        inner = expr.strip("[]")
        a, b = (eval_product(p, params) for p in inner.split(","))
        return lie_bracket(L, a, b)
    total = None
    for sign, term in _split_sum(expr):
        v = eval_product(term, params)
        v = _times(Fraction(sign), v) if not isinstance(v, UEl) else v.scale(sign)
        if total is None:
            total = v
        elif isinstance(v, tuple):
            total = tuple(x + y for x, y in zip(total, v))
        else:
            total = total + v
    return total


def eval_condition(L, cond, params):
    """Evaluate ``"lhs == rhs"`` or ``"lhs != rhs"``; either side may be a bracket ``[a,b]``."""
    if "==" in cond:
        lhs, rhs = cond.split("==")
        want_equal = True
    elif "!=" in cond:
        lhs, rhs = cond.split("!=")
        want_equal = False
    else:
        raise InputError(f"condition {cond!r} needs == or !=")
    a = _eval_side(L, lhs, params)
    b = _eval_side(L, rhs, params)
    if isinstance(a, tuple) and isinstance(b, Fraction) and b == 0:
        equal = _is_zero(a)
    elif isinstance(b, tuple) and isinstance(a, Fraction) and a == 0:
        equal = _is_zero(b)
    elif isinstance(a, tuple) and isinstance(b, tuple):
        equal = a == b
    else:
        equal = a == b
    return equal if want_equal else not equal
