"""Reading and writing structure documents in canonical JSON.

A document is a JSON object with a ``kind`` and the structure's tables, where
every morphism and object is referred to by name. The canonical form has
sorted keys, a 2-space indent, arrays sorted by names, flat arrays and the
morphism records on one line, and a trailing newline.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from common.errors import XmodkitError
from distlaw import ActionSystem, SplitEpiPair, validate_action, validate_split_pair
from equivalences import (
    CrossedModule,
    InternalCat,
    PreCrossedModule,
    ReflexiveGraph,
    validate_crossed_module,
    validate_internal_cat,
    validate_precrossed,
    validate_reflexive_graph,
    validate_splitepi,
)
from fincat import FinCatX, IdOnObjFunctor, RawCategoryData, UnknownName, validate_category, validate_functor
from spans import SpanError

KINDS = ("category", "splitepi", "reflgraph", "action", "prexmod", "xmod", "relcat")


class DocumentError(XmodkitError):
    """Raised when a document is not well-formed JSON or does not follow the schema."""


@dataclass(frozen=True)
class Document:
    """A parsed document.

    Attributes:
        kind: One of KINDS.
        body: The JSON object, ``kind`` and ``meta`` included.
        meta: Optional ``name`` and ``comments``.
    """

    kind: str
    body: dict
    meta: dict = field(default_factory=dict)


def parse_document(text: str) -> Document:
    """Parses document text and checks its top-level shape.

    Raises:
        DocumentError: On invalid JSON, a non-object document or an unknown kind.
    """
    try:
        body = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"Not valid JSON: {e}") from e
    if not isinstance(body, dict):
        raise DocumentError("A document must be a JSON object")
    kind = body.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"Unknown document kind {kind!r}")
    meta = body.get("meta", {})
    if not isinstance(meta, dict):
        raise DocumentError("'meta' must be an object")
    return Document(kind, body, meta)


def read_document(path: Path | str) -> Document:
    """Reads and parses a document file (UTF-8)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"Cannot read {path}: {e}") from e
    return parse_document(text)


def _require(body: dict, key: str, kind: type) -> Any:
    if key not in body:
        raise DocumentError(f"Missing key {key!r}")
    value = body[key]
    if not isinstance(value, kind):
        raise DocumentError(f"{key!r} must be a {kind.__name__}")
    return value


def _names(values: Any, what: str) -> list[str]:
    if not isinstance(values, list) or not all(isinstance(v, str) for v in values):
        raise DocumentError(f"{what} must be a list of names")
    return values


def _triples(values: Any, what: str) -> list[tuple[str, str, str]]:
    if not isinstance(values, list):
        raise DocumentError(f"{what} must be a list of triples")
    triples = []
    for entry in values:
        if not (isinstance(entry, list) and len(entry) == 3 and all(isinstance(v, str) for v in entry)):
            raise DocumentError(f"Every entry of {what} must be a triple of names")
        triples.append(tuple(entry))
    return triples


def _name_map(body: dict, key: str) -> dict[str, str]:
    mapping = _require(body, key, dict)
    if not all(isinstance(k, str) and isinstance(v, str) for k, v in mapping.items()):
        raise DocumentError(f"{key!r} must map names to names")
    return mapping


# ---- reading ----


def category_from_body(body: Any) -> FinCatX:
    """Builds and validates a category from its document object.

    Raises:
        DocumentError: If the object does not follow the category schema.
        CategoryError: If the tables break a category law.
    """
    if not isinstance(body, dict):
        raise DocumentError("A category must be a JSON object")
    objects = _names(_require(body, "objects", list), "'objects'")
    identities = _names(_require(body, "identities", list), "'identities'")
    morphisms = []
    for entry in _require(body, "morphisms", list):
        if not isinstance(entry, dict) or not all(isinstance(entry.get(k), str) for k in ("name", "src", "tgt")):
            raise DocumentError("Every morphism needs string 'name', 'src' and 'tgt'")
        morphisms.append((entry["name"], entry["src"], entry["tgt"]))
    compose = _triples(_require(body, "compose", list), "'compose'")
    raw = RawCategoryData(tuple(objects), tuple(morphisms), tuple(identities), compose=tuple(compose))
    try:
        return validate_category(raw)
    except (UnknownName, SpanError) as e:
        # undeclared or repeated names break the schema, not a category law
        raise DocumentError(e.args[0], e.witness) from e


def _lookup(category: FinCatX, name: str) -> int:
    try:
        return category.morphism(name)
    except UnknownName as e:
        raise DocumentError(e.args[0]) from e


def _functor_table(body: dict, key: str, dom: FinCatX, cod: FinCatX) -> dict[int, int]:
    return {_lookup(dom, k): _lookup(cod, v) for k, v in _name_map(body, key).items()}


def _action_from_body(body: dict) -> ActionSystem:
    base = category_from_body(_require(body, "base", dict))
    fiber = category_from_body(_require(body, "fiber", dict))
    table = {}
    for b, y, result in _triples(_require(body, "action", list), "'action'"):
        table[(_lookup(base, b), _lookup(fiber, y))] = _lookup(fiber, result)
    return validate_action(base, fiber, table)


def _pair_parts(body: dict) -> tuple[FinCatX, FinCatX, dict, dict]:
    total = category_from_body(_require(body, "total", dict))
    base = category_from_body(_require(body, "base", dict))
    return total, base, _functor_table(body, "i", base, total), _functor_table(body, "s", total, base)


def structure_from_document(doc: Document, strict: bool = True):
    """Builds the in-memory structure a document describes, validating it.

    Args:
        doc: The parsed document.
        strict: When False, a split pair is accepted without checking that q
            is invertible and (pre-)crossed modules are wrapped without the
            pre-crossed and Peiffer checks, so that checkers can report on them.

    Returns:
        FinCatX, SplitEpiPair, ReflexiveGraph, InternalCat, ActionSystem,
        PreCrossedModule or CrossedModule, according to the kind.

    Raises:
        DocumentError: If the body does not follow the schema.
        XmodkitError: If the structure is invalid.
    """
    body = doc.body
    if doc.kind == "category":
        return category_from_body(body)
    if doc.kind == "splitepi":
        total, base, i, s = _pair_parts(body)
        return validate_splitepi(total, base, i, s) if strict else validate_split_pair(total, base, i, s)
    if doc.kind in ("reflgraph", "relcat"):
        total, base, i, s = _pair_parts(body)
        graph = validate_reflexive_graph(total, base, i, s, _functor_table(body, "t", total, base))
        if doc.kind == "reflgraph":
            return graph
        d = {}
        for a, a2, result in _triples(_require(body, "d", list), "'d'"):
            d[(_lookup(total, a), _lookup(total, a2))] = _lookup(total, result)
        return validate_internal_cat(graph, d)
    action = _action_from_body(body)
    if doc.kind == "action":
        return action
    kappa = _functor_table(body, "kappa", action.fiber, action.base)
    if not strict:
        pxm = PreCrossedModule(action, validate_functor(kappa, action.fiber, action.base))
        return pxm if doc.kind == "prexmod" else CrossedModule(pxm)
    if doc.kind == "prexmod":
        return validate_precrossed(action, kappa)
    return validate_crossed_module(action, kappa)


# ---- writing ----


def category_to_body(c: FinCatX) -> dict:
    """The canonical document object of a category."""
    order = sorted(range(c.objects.size), key=lambda x: c.objects.labels[x])
    label = c.objects.labels
    return {
        "kind": "category",
        "objects": [label[x] for x in order],
        "identities": [c.names[c.identities[x]] for x in order],
        "morphisms": sorted(
            ({"name": c.names[f], "src": label[c.src[f]], "tgt": label[c.tgt[f]]} for f in c.morphisms),
            key=lambda entry: entry["name"],
        ),
        "compose": sorted([c.names[g], c.names[f], c.names[c.table[g][f]]] for g, f in c.composable_pairs()),
    }


def _functor_to_map(functor: IdOnObjFunctor) -> dict[str, str]:
    return {functor.dom.names[f]: functor.cod.names[functor(f)] for f in functor.dom.morphisms}


def _action_body(action: ActionSystem) -> dict:
    B, Y = action.base, action.fiber
    return {
        "base": category_to_body(B),
        "fiber": category_to_body(Y),
        "action": sorted([B.names[b], Y.names[y], Y.names[action.act(b, y)]] for b, y in action.composable_pairs()),
    }


def _pair_body(pair: SplitEpiPair) -> dict:
    return {
        "total": category_to_body(pair.total),
        "base": category_to_body(pair.base),
        "i": _functor_to_map(pair.i),
        "s": _functor_to_map(pair.s),
    }


def document_from_structure(structure, meta: dict | None = None) -> Document:
    """Describes an in-memory structure as a document."""
    if isinstance(structure, FinCatX):
        kind, body = "category", category_to_body(structure)
    elif isinstance(structure, SplitEpiPair):
        kind, body = "splitepi", _pair_body(structure)
    elif isinstance(structure, (ReflexiveGraph, InternalCat)):
        graph = structure.graph if isinstance(structure, InternalCat) else structure
        body = _pair_body(graph.pair)
        body["t"] = _functor_to_map(graph.t)
        kind = "reflgraph"
        if isinstance(structure, InternalCat):
            A = graph.total
            body["d"] = sorted([A.names[a], A.names[a2], A.names[result]] for (a, a2), result in structure.d.items())
            kind = "relcat"
    elif isinstance(structure, ActionSystem):
        kind, body = "action", _action_body(structure)
    elif isinstance(structure, (PreCrossedModule, CrossedModule)):
        body = _action_body(structure.action)
        body["kappa"] = _functor_to_map(structure.kappa)
        kind = "xmod" if isinstance(structure, CrossedModule) else "prexmod"
    else:
        raise DocumentError(f"Cannot describe a {type(structure).__name__} as a document")
    body["kind"] = kind
    if meta:
        body["meta"] = dict(meta)
    return Document(kind, body, dict(meta or {}))


def _is_scalar(value: Any) -> bool:
    return value is None or isinstance(value, (str, int, float, bool))


def _is_flat(value: Any) -> bool:
    if isinstance(value, list):
        return all(_is_scalar(v) for v in value)
    return _is_scalar(value) or isinstance(value, dict)


def _inline(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False, sort_keys=True)


def _render(value: Any, indent: int) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{_inline(key)}: {_render(value[key], indent + 1)}" for key in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, list):
        if all(_is_scalar(v) for v in value):
            return _inline(value)
        items = [inner + (_inline(v) if _is_flat(v) else _render(v, indent + 1)) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return _inline(value)


def serialize_document(doc: Document) -> str:
    """The canonical text of a document."""
    return _render(doc.body, 0) + "\n"


def canonicalize(text: str, strict: bool = True) -> str:
    """Parses, rebuilds and re-serializes a document, validating it on the way."""
    doc = parse_document(text)
    structure = structure_from_document(doc, strict)
    return serialize_document(document_from_structure(structure, doc.meta or None))
