"""Algebra files, canonical JSON and report encoding.

Scalars are always strings (``"3"``, ``"-1/2"``, residues for GF(p)).  The
canonical form sorts keys and drops all optional whitespace, so equal
objects serialize to identical bytes and digests are stable.
"""

from __future__ import annotations

import hashlib
import json
from enum import Enum
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra
from .linalg import Field, Subspace

FORMAT_VERSION = 1


class AlgebraFileError(ValueError):
    """Malformed algebra file; the message names the offending location."""


def field_to_json(f: Field):
    return "Q" if f.p is None else {"GFp": f.p}


def field_from_json(x, where: str = "field") -> Field:
    if x == "Q":
        return Field()
    if isinstance(x, dict) and set(x) == {"GFp"}:
        p = x["GFp"]
        if isinstance(p, bool) or not isinstance(p, int):
            raise AlgebraFileError(f"{where}.GFp: expected an integer, got {p!r}")
        try:
            return Field(p)
        except ValueError as e:
            raise AlgebraFileError(f"{where}.GFp: {e}") from None
    raise AlgebraFileError(f'{where}: expected "Q" or {{"GFp": p}}, got {x!r}')


def algebra_to_dict(a: Algebra) -> dict:
    f = a.field
    d = {
        "format_version": FORMAT_VERSION,
        "field": field_to_json(f),
        "dim": a.dim,
        "table": [[[f.format(x) for x in v] for v in row] for row in a.table],
    }
    if a.basis_names is not None:
        d["basis_names"] = list(a.basis_names)
    return d


def algebra_from_dict(d, where: str = "") -> Algebra:
    """Parse an algebra dict, raising :class:`AlgebraFileError` with a field path."""
    pre = f"{where}." if where else ""
    if not isinstance(d, dict):
        raise AlgebraFileError(f"{where or 'document'}: expected an object")
    unknown = set(d) - {"format_version", "field", "dim", "table", "basis_names"}
    if unknown:
        raise AlgebraFileError(f"{pre}{sorted(unknown)[0]}: unknown key")
    for key in ("format_version", "field", "dim", "table"):
        if key not in d:
            raise AlgebraFileError(f"{pre}{key}: missing")
    if d["format_version"] != FORMAT_VERSION:
        raise AlgebraFileError(f"{pre}format_version: unsupported version {d['format_version']!r}")
    f = field_from_json(d["field"], pre + "field")
    n = d["dim"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise AlgebraFileError(f"{pre}dim: expected a nonnegative integer, got {n!r}")
    table = d["table"]
    if not isinstance(table, list) or len(table) != n:
        raise AlgebraFileError(f"{pre}table: expected {n} rows")
    rows = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise AlgebraFileError(f"{pre}table[{i}]: expected {n} entries")
        out = []
        for j, v in enumerate(row):
            if not isinstance(v, list) or len(v) != n:
                raise AlgebraFileError(f"{pre}table[{i}][{j}]: expected {n} coordinates")
            coords = []
            for k, s in enumerate(v):
                if not isinstance(s, str):
                    raise AlgebraFileError(f"{pre}table[{i}][{j}][{k}]: scalars must be strings, got {s!r}")
                try:
                    coords.append(f.parse(s))
                except ValueError as e:
                    raise AlgebraFileError(f"{pre}table[{i}][{j}][{k}]: {e}") from None
            out.append(tuple(coords))
        rows.append(tuple(out))
    names = d.get("basis_names")
    if names is not None:
        if not isinstance(names, list) or len(names) != n or not all(isinstance(s, str) for s in names):
            raise AlgebraFileError(f"{pre}basis_names: expected {n} strings")
        names = tuple(names)
    return Algebra(f, n, tuple(rows), names)


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def pretty_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def digest(obj) -> str:
    """sha256 of the canonical serialization (algebras are serialized first)."""
    if isinstance(obj, Algebra):
        obj = algebra_to_dict(obj)
    return hashlib.sha256(canonical_dumps(obj).encode()).hexdigest()


def dumps_algebra(a: Algebra, canonical: bool = True) -> str:
    d = algebra_to_dict(a)
    return canonical_dumps(d) if canonical else pretty_dumps(d)


def loads_json(text: str, source: str = "<string>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}") from None


def loads_algebra(text: str, source: str = "<string>") -> Algebra:
    try:
        return algebra_from_dict(loads_json(text, source))
    except AlgebraFileError as e:
        msg = str(e)
        raise AlgebraFileError(msg if msg.startswith(source) else f"{source}: {msg}") from None


def load_algebra(path) -> Algebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraFileError(f"{path}: {e.strerror}") from None
    return loads_algebra(text, str(path))


def save_algebra(a: Algebra, path) -> None:
    Path(path).write_text(dumps_algebra(a) + "\n", encoding="utf-8")


# --------------------------------------------------------------------------
# generic values (subspaces, vectors, decisions) inside reports


def encode(obj, f: Field):
    """JSON-ready form: subspaces and vectors are tagged, scalars become strings."""
    if isinstance(obj, Subspace):
        return {"subspace": [[f.format(x) for x in r] for r in obj.basis], "n": obj.ambient_dim}
    if isinstance(obj, tuple):
        return {"vector": [f.format(x) for x in obj]}
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): encode(v, f) for k, v in obj.items()}
    if isinstance(obj, list):
        return [encode(v, f) for v in obj]
    if isinstance(obj, Fraction):
        return f.format(obj)
    if hasattr(obj, "space") and isinstance(obj.space, Subspace):
        return encode(obj.space, f)
    return obj


def decode(obj, f: Field):
    if isinstance(obj, dict):
        if set(obj) == {"subspace", "n"}:
            rows = [tuple(f.parse(s) for s in r) for r in obj["subspace"]]
            s = Subspace.span(f, obj["n"], rows)
            if s.basis != tuple(rows):
                raise AlgebraFileError("subspace basis is not in canonical form")
            return s
        if set(obj) == {"vector"}:
            return tuple(f.parse(s) for s in obj["vector"])
        return {k: decode(v, f) for k, v in obj.items()}
    if isinstance(obj, list):
        return [decode(v, f) for v in obj]
    return obj


def encode_decision(d, f: Field) -> dict:
    return {"question": d.question, "status": d.status.value, "method": d.method.value,
            "witness": encode(d.witness, f) if d.witness else None}
