"""JSON documents for solutions, racks and braces.

Every document is an object with a ``kind`` of ``solution``, ``rack`` or
``brace``.  Tables are row-major lists of lists over ``0..n-1``.  Parsing
checks structure only; the ``build`` methods run the mathematical
validation of the owning module.
"""

import json
from dataclasses import dataclass
from functools import cache
from importlib import resources

import jsonschema

from .brace import validate_brace
from .errors import KindUnknown, ParseError, SchemaError
from .rack import RackData, build_rack_from_data, validate_rack
from .solution import validate_solution

KINDS = ("solution", "rack", "brace")


@cache
def schema(kind):
    text = resources.files(__package__).joinpath("schemas", f"{kind}.schema.json").read_text()
    return json.loads(text)


def _rows(table):
    return tuple(tuple(row) for row in table)


def _lists(table):
    return [list(row) for row in table]


@dataclass(frozen=True)
class SolutionDocument:
    n: int
    lam: tuple
    rho: tuple
    name: str | None = None
    note: str | None = None

    kind = "solution"

    def to_json(self):
        out = {"kind": "solution", "n": self.n, "lambda": _lists(self.lam),
               "rho": _lists(self.rho), "name": self.name, "index_base": 0}
        if self.note is not None:
            out["note"] = self.note
        return out

    def build(self):
        return validate_solution(self.lam, self.rho, self.name)


@dataclass(frozen=True)
class RackDocument:
    n: int
    op: tuple | None = None
    blocks: tuple | None = None
    f: tuple | None = None
    name: str | None = None
    note: str | None = None

    kind = "rack"

    def to_json(self):
        out = {"kind": "rack", "n": self.n}
        if self.op is not None:
            out["op"] = _lists(self.op)
        else:
            out["blocks"] = _lists(self.blocks)
            out["f"] = [_lists(row) for row in self.f]
        out.update(name=self.name, index_base=0)
        if self.note is not None:
            out["note"] = self.note
        return out

    @property
    def data(self):
        return None if self.blocks is None else RackData(self.blocks, self.f)

    def build(self):
        if self.op is not None:
            return validate_rack(self.op)
        return build_rack_from_data(self.data)


@dataclass(frozen=True)
class BraceDocument:
    n: int
    add: tuple
    mul: tuple
    name: str | None = None
    note: str | None = None

    kind = "brace"

    def to_json(self):
        out = {"kind": "brace", "n": self.n, "add": _lists(self.add),
               "mul": _lists(self.mul), "name": self.name, "index_base": 0}
        if self.note is not None:
            out["note"] = self.note
        return out

    def build(self):
        return validate_brace(self.add, self.mul, self.name)


def _check_matrix(obj, key, n):
    table = obj[key]
    if len(table) != n:
        raise SchemaError(f"{key} must have {n} rows", path=[key])
    for i, row in enumerate(table):
        if len(row) != n:
            raise SchemaError(f"{key} row {i} must have {n} entries", path=[key, i])
        for j, v in enumerate(row):
            if v >= n:
                raise SchemaError(f"entry {v} is outside 0..{n - 1}", path=[key, i, j])


def from_json(obj):
    """Document from an already decoded JSON value."""
    if not isinstance(obj, dict):
        raise SchemaError("a document must be a JSON object", path=[])
    kind = obj.get("kind")
    if kind not in KINDS:
        raise KindUnknown(f"unknown document kind {kind!r}", kind=kind, known=list(KINDS))
    try:
        jsonschema.validate(obj, schema(kind))
    except jsonschema.ValidationError as exc:
        raise SchemaError(exc.message, path=list(exc.absolute_path)) from None
    n = obj["n"]
    name, note = obj.get("name"), obj.get("note")
    if kind == "solution":
        _check_matrix(obj, "lambda", n)
        _check_matrix(obj, "rho", n)
        return SolutionDocument(n, _rows(obj["lambda"]), _rows(obj["rho"]), name, note)
    if kind == "brace":
        _check_matrix(obj, "add", n)
        _check_matrix(obj, "mul", n)
        return BraceDocument(n, _rows(obj["add"]), _rows(obj["mul"]), name, note)
    if "op" in obj:
        _check_matrix(obj, "op", n)
        return RackDocument(n, op=_rows(obj["op"]), name=name, note=note)
    for i, block in enumerate(obj["blocks"]):
        for k, x in enumerate(block):
            if x >= n:
                raise SchemaError(f"point {x} is outside 0..{n - 1}", path=["blocks", i, k])
    f = tuple(tuple(tuple(p) for p in row) for row in obj["f"])
    return RackDocument(n, blocks=_rows(obj["blocks"]), f=f, name=name, note=note)


def parse_document(text):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc.reason}", line=None, col=None) from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, col=exc.colno) from None
    return from_json(obj)


def dumps(obj):
    """Indented JSON with every list of scalars kept on one line, so tables
    read as one row per line."""
    def emit(v, depth):
        pad = "  " * depth
        if isinstance(v, dict):
            if not v:
                return "{}"
            items = [f'{pad}  {json.dumps(k)}: {emit(x, depth + 1)}' for k, x in v.items()]
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(v, list) and any(isinstance(x, (list, dict)) for x in v):
            items = [pad + "  " + emit(x, depth + 1) for x in v]
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        return json.dumps(v)
    return emit(obj, 0) + "\n"


def serialize_document(doc):
    return dumps(doc.to_json())


def load_document(path):
    with open(path, "rb") as fh:
        return parse_document(fh.read())


def solution_document(s, note=None):
    return SolutionDocument(s.n, s.lam, s.rho, s.name, note)


def rack_document(rack, name=None, note=None):
    return RackDocument(rack.n, op=rack.op, name=name, note=note)


def rack_data_document(data, name=None, note=None):
    return RackDocument(data.n, blocks=data.blocks, f=data.f, name=name, note=note)


def brace_document(b, note=None):
    return BraceDocument(b.size, b.add, b.mul, b.name, note)
