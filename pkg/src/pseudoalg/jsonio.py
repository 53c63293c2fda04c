"""JSON encoding of Lie algebras, enveloping-algebra elements, tensors, tables and parameters.

Rationals travel as ``{"num": "p", "den": "q"}`` pairs inside term lists and as
strings like ``"-3/4"`` (or plain integers) in parameter files. Integers are
accepted wherever a numerator or denominator string is expected.
"""

import json
from fractions import Fraction

from .errors import InputError
from .lie import PRESETS, as_fraction, from_brackets
from .pseudo import ProductTable
from .tensor import Tensor
from .uea import UEl


def _integer(x):
    if isinstance(x, bool):
        raise InputError("num and den must be integers")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise InputError(f"num and den must be integers or integer strings, got {x!r}")


def _frac(obj):
    try:
        num = obj["num"]
        den = obj.get("den", 1)
    except (KeyError, TypeError, AttributeError):
        raise InputError(f"expected a {{num, den}} pair, got {obj!r}") from None
    num, den = _integer(num), _integer(den)
    if den == 0:
        raise InputError("zero denominator")
    return Fraction(num, den)


def _enc_frac(c):
    return {"num": str(c.numerator), "den": str(c.denominator)}


def _index(obj, dim):
    if not isinstance(obj, list) or len(obj) != dim or not all(isinstance(x, int) and x >= 0 for x in obj):
        raise InputError(f"multi-index must be a list of {dim} nonnegative integers, got {obj!r}")
    return tuple(obj)


def lie_from_json(obj):
    if not isinstance(obj, dict):
        raise InputError("Lie algebra must be a JSON object")
    if "preset" in obj:
        try:
            return PRESETS[obj["preset"]]()
        except KeyError:
            raise InputError(f"unknown preset {obj['preset']!r}; choose from {sorted(PRESETS)}") from None
    try:
        dim = obj["dim"]
    except KeyError:
        raise InputError("Lie algebra needs 'dim' or 'preset'") from None
    entries = []
    for b in obj.get("bracket", []):
        try:
            entries.append((b["i"], b["j"], b["k"], _frac(b)))
        except (KeyError, TypeError):
            raise InputError(f"bracket entry needs i, j, k, num[, den]: {b!r}") from None
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise InputError("dim must be an integer")
    return from_brackets(dim, entries, obj.get("name"))


def lie_to_json(L):
    out = {"dim": L.dim, "bracket": []}
    for (i, j), row in sorted(L._brackets.items()):
        for k, c in row:
            out["bracket"].append({"i": i, "j": j, "k": k, **_enc_frac(c)})
    if L.name:
        out["name"] = L.name
    return out


def uel_from_json(obj, L):
    if isinstance(obj, (int, str)) and not isinstance(obj, bool):
        return UEl.scalar(L, as_fraction(obj))
    if not isinstance(obj, dict):
        raise InputError("element of H must be a JSON object or a rational")
    if obj.get("basis", "divided-pbw") != "divided-pbw":
        raise InputError("only the 'divided-pbw' basis is supported")
    terms = {}
    for t in obj.get("terms", []):
        I = _index(t.get("index"), L.dim)
        terms[I] = terms.get(I, 0) + _frac(t)
    return UEl(L, terms)


def uel_to_json(a):
    return {
        "basis": "divided-pbw",
        "terms": [{"index": list(I), **_enc_frac(c)} for I, c in a.sorted_terms()],
    }


_SLOT_NAMES = ("I", "J", "K")


def tensor_from_json(obj, L):
    if not isinstance(obj, dict):
        raise InputError("tensor must be a JSON object")
    arity = obj.get("arity")
    if arity not in (2, 3):
        raise InputError("tensor arity must be 2 or 3")
    names = _SLOT_NAMES[:arity]
    terms = {}
    for t in obj.get("terms", []):
        if not isinstance(t, dict) or any(n not in t for n in names):
            raise InputError(f"each arity-{arity} term needs keys {list(names)}: {t!r}")
        key = tuple(_index(t[n], L.dim) for n in names)
        terms[key] = terms.get(key, 0) + _frac(t)
    return Tensor(L, arity, terms)


def tensor_to_json(u):
    names = _SLOT_NAMES[: u.arity]
    return {
        "arity": u.arity,
        "terms": [{**{n: list(I) for n, I in zip(names, k)}, **_enc_frac(c)} for k, c in u.sorted_terms()],
    }


def table_from_json(obj):
    if not isinstance(obj, dict):
        raise InputError("product table must be a JSON object")
    try:
        rank = obj["rank"]
        L = lie_from_json(obj["lie"])
    except KeyError as exc:
        raise InputError(f"product table is missing {exc.args[0]!r}") from None
    if not isinstance(rank, int) or rank < 1:
        raise InputError("rank must be a positive integer")
    alpha = {}
    for a in obj.get("alpha", []):
        try:
            i, j, k = a["i"], a["j"], a["k"]
            t = tensor_from_json(a["t2"], L)
        except (KeyError, TypeError):
            raise InputError(f"alpha entry needs i, j, k, t2: {a!r}") from None
        if not all(isinstance(x, int) and 0 <= x < rank for x in (i, j, k)):
            raise InputError(f"alpha index out of range: {(i, j, k)}")
        if t.arity != 2:
            raise InputError("alpha tensors must have arity 2")
        alpha[i, j, k] = alpha[i, j, k] + t if (i, j, k) in alpha else t
    return ProductTable(L, rank, alpha)


def table_to_json(T):
    return {
        "rank": T.rank,
        "lie": lie_to_json(T.L),
        "alpha": [
            {"i": i, "j": j, "k": k, "t2": tensor_to_json(t)} for (i, j, k), t in sorted(T.alpha.items())
        ],
    }


def pseudo_to_json(p):
    """Canonical element of ``H^{(x)n} (x)_H A``: H slots (the last one is 1), then ``d^(J) e_k``."""
    terms = []
    for key, c in p.sorted_terms():
        *slots, J, k = key
        terms.append({"slots": [list(I) for I in slots], "J": list(J), "k": k, **_enc_frac(c)})
    return {"arity": p.arity, "terms": terms}


def params_from_json(obj, L):
    """Catalogue parameters: vectors as lists, scalars as strings or ints, g/h as H elements."""
    from .catalog import SCALAR_PARAMS, SELECTOR_PARAMS, UEL_PARAMS, VECTOR_PARAMS

    if not isinstance(obj, dict):
        raise InputError("parameters must be a JSON object")
    out = {}
    for name, v in obj.items():
        if name in VECTOR_PARAMS:
            if not isinstance(v, list):
                raise InputError(f"{name} must be a list of rationals")
            out[name] = tuple(as_fraction(x) for x in v)
        elif name in SCALAR_PARAMS:
            out[name] = as_fraction(v)
        elif name in UEL_PARAMS:
            out[name] = uel_from_json(v, L)
        elif name in SELECTOR_PARAMS:
            if not isinstance(v, str):
                raise InputError(f"{name} must be a string")
            out[name] = v
        elif name == "m":
            out[name] = v
        else:
            raise InputError(f"unknown parameter {name!r}")
    return out


def basis_from_json(obj, L):
    from .catalog import BasisChange

    if not isinstance(obj, dict) or "P" not in obj:
        raise InputError("basis change needs a 'P' matrix")

    def matrix(m):
        if not isinstance(m, list) or not all(isinstance(row, list) for row in m):
            raise InputError("matrices must be lists of rows")
        return [[uel_from_json(x, L) for x in row] for row in m]

    Pinv = matrix(obj["Pinv"]) if obj.get("Pinv") is not None else None
    return BasisChange(L, matrix(obj["P"]), Pinv)


def dumps(obj):
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None
