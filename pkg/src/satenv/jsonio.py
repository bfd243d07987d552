"""Stable JSON encoding of clause trees.

One clause per document, discriminated by ``kind`` tags (clause,
literal, predicate, function, variable) plus a ``format`` marker.  The
encoder emits a fixed key order with no insignificant whitespace, so
output is deterministic and usable in golden files; the decoder is
strict — unknown fields, missing fields and type mismatches raise
:class:`~satenv.errors.DecodeError` naming the first offending path.
The same shape is shipped as ``schema/clause.schema.json``.
"""

from __future__ import annotations

import json
import re
from importlib import resources

from .errors import DecodeError
from .logic import Clause, Function, Literal, Predicate, Term, Variable

FORMAT_VERSION = 1

_VARIABLE_NAME = re.compile(r"[A-Z][A-Za-z0-9_]*")


def schema_path():
    """Filesystem path of the shipped clause document schema."""
    return resources.files("satenv").joinpath("schema/clause.schema.json")


def dumps(obj) -> str:
    """Canonical JSON text: fixed key order, compact separators, UTF-8."""
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


# --- encoding ----------------------------------------------------------------


def term_to_obj(term: Term) -> dict:
    if isinstance(term, Variable):
        return {"kind": "variable", "name": term.name}
    return {
        "kind": "function",
        "name": term.name,
        "arguments": [term_to_obj(arg) for arg in term.arguments],
    }


def literal_to_obj(literal: Literal) -> dict:
    return {
        "kind": "literal",
        "negated": literal.negated,
        "atom": {
            "kind": "predicate",
            "name": literal.atom.name,
            "arguments": [term_to_obj(arg) for arg in literal.atom.arguments],
        },
    }


def clause_to_obj(clause: Clause) -> dict:
    return {
        "format": FORMAT_VERSION,
        "kind": "clause",
        "label": clause.label,
        "role": clause.role,
        "literals": [literal_to_obj(lit) for lit in clause.literals],
        "inference_rule": clause.inference_rule,
        "inference_parents": list(clause.inference_parents),
        "birth_step": clause.birth_step,
        "processed": clause.processed,
    }


def to_json(clause: Clause) -> str:
    return dumps(clause_to_obj(clause))


# --- decoding ----------------------------------------------------------------


def _check_object(obj, path: str, fields: dict[str, type | tuple[type, ...]]) -> None:
    if not isinstance(obj, dict):
        raise DecodeError(path, f"expected an object, got {type(obj).__name__}")
    unknown = set(obj) - set(fields)
    if unknown:
        raise DecodeError(f"{path}.{sorted(unknown)[0]}", "unknown field")
    for name, types in fields.items():
        if name not in obj:
            raise DecodeError(path, f"missing field {name!r}")
        value = obj[name]
        allowed = types if isinstance(types, tuple) else (types,)
        # bool is a subclass of int; never accept one for an int field
        if not isinstance(value, allowed) or (isinstance(value, bool) and bool not in allowed):
            wanted = " or ".join(t.__name__ for t in allowed)
            raise DecodeError(f"{path}.{name}", f"expected {wanted}, got {type(value).__name__}")


def _expect_kind(obj, path: str, kind: str) -> None:
    if not isinstance(obj, dict):
        raise DecodeError(path, f"expected an object, got {type(obj).__name__}")
    if "kind" not in obj:
        raise DecodeError(path, "missing field 'kind'")
    if obj["kind"] != kind:
        raise DecodeError(f"{path}.kind", f"expected {kind!r}, got {obj['kind']!r}")


def term_from_obj(obj, path: str = "$") -> Term:
    if not isinstance(obj, dict):
        raise DecodeError(path, f"expected an object, got {type(obj).__name__}")
    kind = obj.get("kind")
    if kind == "variable":
        _check_object(obj, path, {"kind": str, "name": str})
        if not _VARIABLE_NAME.fullmatch(obj["name"]):
            raise DecodeError(f"{path}.name", "variable names start with an uppercase letter")
        return Variable(obj["name"])
    if kind == "function":
        _check_object(obj, path, {"kind": str, "name": str, "arguments": list})
        if not obj["name"]:
            raise DecodeError(f"{path}.name", "function names are nonempty")
        args = tuple(
            term_from_obj(arg, f"{path}.arguments[{i}]")
            for i, arg in enumerate(obj["arguments"])
        )
        return Function(obj["name"], args)
    if kind is None:
        raise DecodeError(path, "missing field 'kind'")
    raise DecodeError(f"{path}.kind", f"expected 'variable' or 'function', got {kind!r}")


def literal_from_obj(obj, path: str = "$") -> Literal:
    _expect_kind(obj, path, "literal")
    _check_object(obj, path, {"kind": str, "negated": bool, "atom": dict})
    atom_path = f"{path}.atom"
    atom = obj["atom"]
    _expect_kind(atom, atom_path, "predicate")
    _check_object(atom, atom_path, {"kind": str, "name": str, "arguments": list})
    if not atom["name"]:
        raise DecodeError(f"{atom_path}.name", "predicate names are nonempty")
    args = tuple(
        term_from_obj(arg, f"{atom_path}.arguments[{i}]")
        for i, arg in enumerate(atom["arguments"])
    )
    if atom["name"] == "=" and len(args) != 2:
        raise DecodeError(f"{atom_path}.arguments", "the equality predicate takes 2 arguments")
    return Literal(obj["negated"], Predicate(atom["name"], args))


def clause_from_obj(obj, path: str = "$") -> Clause:
    _expect_kind(obj, path, "clause")
    _check_object(
        obj,
        path,
        {
            "format": int,
            "kind": str,
            "label": str,
            "role": str,
            "literals": list,
            "inference_rule": (str, type(None)),
            "inference_parents": list,
            "birth_step": int,
            "processed": bool,
        },
    )
    if obj["format"] != FORMAT_VERSION:
        raise DecodeError(f"{path}.format", f"expected {FORMAT_VERSION}, got {obj['format']!r}")
    if obj["birth_step"] < -1:
        raise DecodeError(f"{path}.birth_step", "must be >= -1")
    for i, parent in enumerate(obj["inference_parents"]):
        if not isinstance(parent, str):
            raise DecodeError(f"{path}.inference_parents[{i}]", "expected a string")
    literals = tuple(
        literal_from_obj(lit, f"{path}.literals[{i}]")
        for i, lit in enumerate(obj["literals"])
    )
    return Clause(
        literals=literals,
        label=obj["label"],
        role=obj["role"],
        inference_rule=obj["inference_rule"],
        inference_parents=tuple(obj["inference_parents"]),
        birth_step=obj["birth_step"],
        processed=obj["processed"],
    )


def from_json(text: str) -> Clause:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError("$", f"invalid JSON: {exc}") from exc
    return clause_from_obj(obj)
