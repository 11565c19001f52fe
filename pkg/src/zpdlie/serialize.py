"""JSON documents for algebras, modules, configs and reports.

Scalars are strings ("p/q" over Q, the residue over GF(p)) and the field is
declared once per document.  Reports embed the algebra or module they are
about, so replaying one needs nothing but the document.
"""

from __future__ import annotations

import json
from dataclasses import asdict

from .catalog import from_ref
from .commuting import CommutingPair, ModulePair, SamplerConfig
from .decide import Witness, ZadReport, ZpdReport
from .errors import InputError, MalformedDocumentError
from .exactla import QQ, Field, Matrix, parse_field, same_field
from .liealg import LieAlgebra, validated
from .repmod import LieModule, validated_module


def field_name(F: Field) -> str:
    return "Q" if F.char == 0 else f"GF({F.char})"


def _vec(F: Field, v) -> list[str]:
    return [F.format(a) for a in v]


def _scalars(F: Field, values, what: str) -> list:
    if not isinstance(values, list):
        raise MalformedDocumentError(f"{what} must be a list")
    try:
        return [F(a) for a in values]
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise MalformedDocumentError(f"bad scalar in {what}: {exc}") from None


def _get(doc: dict, key: str, what: str):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedDocumentError(f"{what} is missing {key!r}")
    return doc[key]


# -- algebras and modules ----------------------------------------------------

def algebra_to_doc(L: LieAlgebra, with_field: bool = True) -> dict:
    F = L.field
    brackets = []
    for (i, j), sparse in sorted(L.structure_constants().items()):
        coeffs = {str(k): F.format(c) for k, c in sorted(sparse.items()) if c != 0}
        if coeffs:
            brackets.append({"i": i, "j": j, "coeffs": coeffs})
    doc = {"field": field_name(F)} if with_field else {}
    doc.update(dim=L.n, names=list(L.names), brackets=brackets)
    return doc


def algebra_from_doc(doc, field: Field | None = None) -> LieAlgebra:
    """A document dict or a builtin reference string."""
    if isinstance(doc, str):
        obj = from_ref(doc, field or QQ)
        if not isinstance(obj, LieAlgebra):
            raise InputError(f"{doc!r} is a module, not an algebra")
        return obj
    if not isinstance(doc, dict):
        raise MalformedDocumentError("an algebra must be a JSON object or a builtin reference")
    if "field" in doc:
        F = parse_field(str(doc["field"]))
        if field is not None:
            same_field(field, F)
    elif field is not None:
        F = field
    else:
        raise MalformedDocumentError("algebra document is missing 'field'")
    n = _get(doc, "dim", "algebra")
    if not isinstance(n, int) or n < 0:
        raise MalformedDocumentError("dim must be a nonnegative integer")
    brackets = {}
    for entry in doc.get("brackets", []):
        i, j = _get(entry, "i", "bracket"), _get(entry, "j", "bracket")
        coeffs = _get(entry, "coeffs", "bracket")
        if not isinstance(coeffs, dict):
            raise MalformedDocumentError("coeffs must be an object")
        try:
            vec = {int(k): F(c) for k, c in coeffs.items()}
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise MalformedDocumentError(f"bad coefficient: {exc}") from None
        if not (isinstance(i, int) and isinstance(j, int)):
            raise MalformedDocumentError("bracket indices must be integers")
        if i > j:
            i, j = j, i
            vec = {k: F.reduce(-c) for k, c in vec.items()}
        if (i, j) in brackets:
            raise MalformedDocumentError(f"bracket ({i}, {j}) given twice")
        brackets[(i, j)] = vec
    return validated(LieAlgebra(F, n, brackets, doc.get("names")))


def module_to_doc(M: LieModule, with_field: bool = True) -> dict:
    F = M.field
    doc = {"field": field_name(F)} if with_field else {}
    doc.update(
        algebra=algebra_to_doc(M.parent, with_field=False),
        dim=M.dim,
        names=list(M.names),
        action=[[_vec(F, r) for r in m.data] for m in M.rho],
    )
    return doc


def module_from_doc(doc, field: Field | None = None) -> LieModule:
    if isinstance(doc, str):
        obj = from_ref(doc, field or QQ)
        if not isinstance(obj, LieModule):
            raise InputError(f"{doc!r} is an algebra, not a module")
        return obj
    if not isinstance(doc, dict):
        raise MalformedDocumentError("a module must be a JSON object or a builtin reference")
    if "field" in doc:
        F = parse_field(str(doc["field"]))
        if field is not None:
            same_field(field, F)
    else:
        F = field or QQ
    L = algebra_from_doc(_get(doc, "algebra", "module"), F)
    d = _get(doc, "dim", "module")
    action = _get(doc, "action", "module")
    if not isinstance(action, list) or not all(isinstance(m, list) for m in action):
        raise MalformedDocumentError("action must be a list of matrices")
    rho = [Matrix(L.field, [_scalars(L.field, r, "action") for r in m], d) for m in action]
    return validated_module(LieModule(L, d, rho, doc.get("names")))


def load_object(doc, field: Field | None = None):
    """Algebra or module, whichever the document (or reference) describes."""
    if isinstance(doc, str):
        return from_ref(doc, field or QQ)
    if isinstance(doc, dict) and "action" in doc:
        return module_from_doc(doc, field)
    return algebra_from_doc(doc, field)


# -- config ------------------------------------------------------------------

def config_to_doc(cfg: SamplerConfig) -> dict:
    doc = asdict(cfg)
    doc["strategies"] = list(cfg.strategies)
    doc["grid"] = [str(g) for g in cfg.grid]
    return doc


def config_from_doc(doc: dict) -> SamplerConfig:
    known = set(SamplerConfig.__dataclass_fields__)
    extra = set(doc) - known
    if extra:
        raise MalformedDocumentError(f"unknown config keys {sorted(extra)}")
    doc = dict(doc)
    if "strategies" in doc:
        doc["strategies"] = tuple(doc["strategies"])
    if "grid" in doc:
        doc["grid"] = tuple(int(g) for g in doc["grid"])
    return SamplerConfig(**doc)


# -- reports -----------------------------------------------------------------

def _pair_doc(F, pair) -> dict:
    if isinstance(pair, ModulePair):
        return {"x": _vec(F, pair.x), "v": _vec(F, pair.v)}
    return {"x": _vec(F, pair.x), "y": _vec(F, pair.y)}


def _witness_doc(F, w: Witness, module: bool) -> dict:
    second = "v" if module else "y"
    return {
        "xi": _vec(F, w.xi),
        "mu": _vec(F, w.mu),
        "terms": [{"x": _vec(F, x), second: _vec(F, y)} for x, y in w.terms],
        "value": F.format(w.value),
        "validated": w.validated,
    }


def report_to_doc(rep: ZpdReport | ZadReport, cfg: SamplerConfig | None = None) -> dict:
    F = rep.field
    module = isinstance(rep, ZadReport)
    doc = {"kind": rep.kind, "input": rep.input, "field": field_name(F)}
    if module:
        doc["module"] = module_to_doc(rep.module, with_field=False)
    else:
        doc["algebra"] = algebra_to_doc(rep.algebra, with_field=False)
    doc["dims"] = dict(rep.dims)
    doc["verdict"] = rep.verdict
    if rep.certificate is not None:
        doc["certificate"] = [_pair_doc(F, p) for p in rep.certificate]
    if rep.witness is not None:
        doc["witness"] = _witness_doc(F, rep.witness, module)
    doc["stats"] = dict(rep.stats)
    if cfg is not None:
        doc["config"] = config_to_doc(cfg)
    doc["seed"] = rep.seed
    return doc


def report_from_doc(doc: dict) -> ZpdReport | ZadReport:
    if not isinstance(doc, dict):
        raise MalformedDocumentError("a report must be a JSON object")
    kind = _get(doc, "kind", "report")
    F = parse_field(str(_get(doc, "field", "report")))
    if kind == "zpd":
        obj = algebra_from_doc(_get(doc, "algebra", "report"), F)
        second, n2 = "y", obj.n
    elif kind == "zad":
        obj = module_from_doc(_get(doc, "module", "report"), F)
        second, n2 = "v", obj.dim
    else:
        raise MalformedDocumentError(f"unknown report kind {kind!r}")
    cert = None
    if "certificate" in doc:
        cert = []
        for entry in doc["certificate"]:
            x = _scalars(F, _get(entry, "x", "pair"), "pair")
            y = _scalars(F, _get(entry, second, "pair"), "pair")
            if len(y) != n2:
                raise MalformedDocumentError("pair has the wrong length")
            cert.append(ModulePair(tuple(x), tuple(y)) if kind == "zad" else CommutingPair(tuple(x), tuple(y)))
    wit = None
    if "witness" in doc:
        w = doc["witness"]
        terms = [
            (_scalars(F, _get(t, "x", "term"), "term"), _scalars(F, _get(t, second, "term"), "term"))
            for t in _get(w, "terms", "witness")
        ]
        wit = Witness(
            _scalars(F, _get(w, "xi", "witness"), "xi"),
            _scalars(F, _get(w, "mu", "witness"), "mu"),
            terms,
            F(_get(w, "value", "witness")),
            int(w.get("validated", 0)),
        )
    cls = ZadReport if kind == "zad" else ZpdReport
    return cls(
        doc.get("input", "inline"), obj, dict(doc.get("dims", {})), _get(doc, "verdict", "report"),
        cert, wit, dict(doc.get("stats", {})), int(doc.get("seed", 0)),
    )


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocumentError(f"malformed JSON: {exc}") from None
