"""Byte-deterministic JSON for polynomials, configs, decompositions and reports.

Documents must be canonical to deserialize: terms in canonical order, no
zero coefficients, reduced ``"p/q"`` strings (``q`` omitted when 1), blades
strictly increasing.  Under that rule ``serialize(deserialize(s)) == s`` for
every compact document ``s``.
"""
from __future__ import annotations

import json
import re

from .almansi import AlmansiResult
from .clifford import indices_to_mask
from .errors import SchemaError
from .poly import CliffordPolynomial, _term_key, format_rational, rational
from .umbral import FAMILIES, VARIANTS, CalculusConfig
from .verify import IdentityReport

_RATIONAL = re.compile(r"-?(0|[1-9]\d*)(/[1-9]\d*)?")


def polynomial_to_json(f: CliffordPolynomial) -> dict:
    return {
        "n": f.n,
        "terms": [
            {"coef": format_rational(c), "monomial": list(alpha), "blade": list(blade.indices)}
            for alpha, blade, c in f.terms()
        ],
    }


def config_to_json(cfg: CalculusConfig) -> dict:
    return {
        "n": cfg.n,
        "family": cfg.family,
        "h": None if cfg.h is None else format_rational(cfg.h),
        "raising_variant": cfg.raising_variant,
    }


def almansi_to_json(result: AlmansiResult) -> dict:
    return {
        "k": result.k,
        "config": config_to_json(result.cfg),
        "components": [polynomial_to_json(c) for c in result.components],
    }


def report_to_json(r: IdentityReport) -> dict:
    cex = None
    if r.counterexample is not None:
        f, lhs, rhs = r.counterexample
        cex = {"input": polynomial_to_json(f), "lhs": polynomial_to_json(lhs), "rhs": polynomial_to_json(rhs)}
    return {
        "identity_name": r.identity_name,
        "config": config_to_json(r.config),
        "trials": r.trials,
        "max_degree": r.max_degree,
        "seed": r.seed,
        "passed": r.passed,
        "counterexample": cex,
    }


def to_json(payload):
    if isinstance(payload, CliffordPolynomial):
        return polynomial_to_json(payload)
    if isinstance(payload, AlmansiResult):
        return almansi_to_json(payload)
    if isinstance(payload, CalculusConfig):
        return config_to_json(payload)
    if isinstance(payload, IdentityReport):
        return report_to_json(payload)
    if isinstance(payload, (list, tuple)) and all(isinstance(r, IdentityReport) for r in payload):
        return [report_to_json(r) for r in payload]
    raise TypeError(f"cannot serialize {type(payload).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def serialize(payload) -> str:
    return dumps(to_json(payload))


# -- reading ---------------------------------------------------------------

def _expect(cond: bool, message: str, path: str) -> None:
    if not cond:
        raise SchemaError(message, path)


def _keys(obj, keys: tuple, path: str) -> None:
    _expect(isinstance(obj, dict), "expected an object", path)
    _expect(set(obj) == set(keys), f"expected keys {sorted(keys)}, got {sorted(obj)}", path)


def _int(obj, path: str, minimum: int = 0) -> int:
    _expect(isinstance(obj, int) and not isinstance(obj, bool), "expected an integer", path)
    _expect(obj >= minimum, f"expected an integer >= {minimum}", path)
    return obj


def _rational_text(obj, path: str):
    _expect(isinstance(obj, str) and _RATIONAL.fullmatch(obj) is not None, "expected a rational string 'p' or 'p/q'", path)
    value = rational(obj)
    _expect(format_rational(value) == obj, "rational is not in lowest terms", path)
    return value


def polynomial_from_json(obj, path: str = "") -> CliffordPolynomial:
    _keys(obj, ("n", "terms"), path or "/")
    n = _int(obj["n"], f"{path}/n", 1)
    terms = obj["terms"]
    _expect(isinstance(terms, list), "expected an array", f"{path}/terms")
    out = {}
    prev = None
    for i, t in enumerate(terms):
        tp = f"{path}/terms/{i}"
        _keys(t, ("coef", "monomial", "blade"), tp)
        c = _rational_text(t["coef"], f"{tp}/coef")
        _expect(c != 0, "zero coefficients are not allowed", f"{tp}/coef")
        mono = t["monomial"]
        _expect(isinstance(mono, list) and len(mono) == n, f"expected {n} exponents", f"{tp}/monomial")
        alpha = tuple(_int(a, f"{tp}/monomial/{j}") for j, a in enumerate(mono))
        blade = t["blade"]
        _expect(isinstance(blade, list), "expected an array", f"{tp}/blade")
        idx = tuple(_int(b, f"{tp}/blade/{j}", 1) for j, b in enumerate(blade))
        _expect(all(a < b for a, b in zip(idx, idx[1:])), "blade indices must be strictly increasing", f"{tp}/blade")
        _expect(not idx or idx[-1] <= n, f"blade index outside 1..{n}", f"{tp}/blade")
        key = (alpha, indices_to_mask(idx))
        order = _term_key((key, c))
        _expect(prev is None or prev < order, "terms are not in canonical order (or repeat)", tp)
        prev = order
        out[key] = c
    return CliffordPolynomial._raw(n, out)


def config_from_json(obj, path: str = "") -> CalculusConfig:
    _keys(obj, ("n", "family", "h", "raising_variant"), path or "/")
    n = _int(obj["n"], f"{path}/n", 1)
    family = obj["family"]
    _expect(family in FAMILIES, f"family must be one of {list(FAMILIES)}", f"{path}/family")
    variant = obj["raising_variant"]
    _expect(variant in VARIANTS, f"raising_variant must be one of {list(VARIANTS)}", f"{path}/raising_variant")
    if family == "continuum":
        _expect(obj["h"] is None, "continuum family takes h = null", f"{path}/h")
        _expect(variant == "plain", "continuum family uses the plain variant", f"{path}/raising_variant")
        return CalculusConfig(n)
    h = _rational_text(obj["h"], f"{path}/h")
    _expect(h != 0, "step h must be nonzero", f"{path}/h")
    return CalculusConfig(n, family, h, variant)


def almansi_from_json(obj, path: str = "") -> AlmansiResult:
    _keys(obj, ("k", "config", "components"), path or "/")
    k = _int(obj["k"], f"{path}/k", 1)
    cfg = config_from_json(obj["config"], f"{path}/config")
    comps = obj["components"]
    _expect(isinstance(comps, list) and len(comps) == k, f"expected {k} components", f"{path}/components")
    polys = []
    for i, c in enumerate(comps):
        p = polynomial_from_json(c, f"{path}/components/{i}")
        _expect(p.n == cfg.n, "component dimension differs from config", f"{path}/components/{i}/n")
        polys.append(p)
    return AlmansiResult(cfg, k, tuple(polys))


def report_from_json(obj, path: str = "") -> IdentityReport:
    _keys(obj, ("identity_name", "config", "trials", "max_degree", "seed", "passed", "counterexample"), path or "/")
    _expect(isinstance(obj["identity_name"], str), "expected a string", f"{path}/identity_name")
    cfg = config_from_json(obj["config"], f"{path}/config")
    trials = _int(obj["trials"], f"{path}/trials", 1)
    max_degree = _int(obj["max_degree"], f"{path}/max_degree")
    _expect(isinstance(obj["seed"], int) and not isinstance(obj["seed"], bool), "expected an integer", f"{path}/seed")
    _expect(isinstance(obj["passed"], bool), "expected a boolean", f"{path}/passed")
    cex = obj["counterexample"]
    if cex is None:
        _expect(obj["passed"], "failed report needs a counterexample", f"{path}/counterexample")
        triple = None
    else:
        _expect(not obj["passed"], "passed report cannot carry a counterexample", f"{path}/counterexample")
        _keys(cex, ("input", "lhs", "rhs"), f"{path}/counterexample")
        triple = tuple(polynomial_from_json(cex[k], f"{path}/counterexample/{k}") for k in ("input", "lhs", "rhs"))
    return IdentityReport(obj["identity_name"], cfg, trials, max_degree, obj["seed"], obj["passed"], triple)


def from_json(obj):
    if isinstance(obj, list):
        return [report_from_json(r, f"/{i}") for i, r in enumerate(obj)]
    _expect(isinstance(obj, dict), "expected an object or array", "/")
    if "components" in obj:
        return almansi_from_json(obj)
    if "terms" in obj:
        return polynomial_from_json(obj)
    if "identity_name" in obj:
        return report_from_json(obj)
    if "family" in obj:
        return config_from_json(obj)
    raise SchemaError("unrecognized document kind", "/")


def deserialize(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} at offset {exc.pos}", "/") from None
    return from_json(obj)


__all__ = ["serialize", "deserialize", "to_json", "from_json", "dumps"]
