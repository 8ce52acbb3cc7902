import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from yangbaxter import fixtures as F
from yangbaxter.documents import (BraceDocument, RackDocument, SolutionDocument, dumps,
                                  from_json, load_document, parse_document,
                                  serialize_document, solution_document)
from yangbaxter.errors import KindUnknown, ParseError, SchemaError, YBEError

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def test_fixture_files_match_generators():
    docs = F.documents()
    on_disk = {p.stem for p in FIXTURES.glob("*.json")}
    assert on_disk == set(docs)
    for name, doc in docs.items():
        assert (FIXTURES / f"{name}.json").read_text() == serialize_document(doc)


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.json")), ids=lambda p: p.stem)
def test_fixture_files_load_and_build(path):
    doc = load_document(path)
    obj = doc.build()
    assert doc.n == (obj.size if doc.kind == "brace" else obj.n)
    assert parse_document(serialize_document(doc)) == doc


def test_round_trip_of_every_kind():
    docs = [solution_document(F.z3_example(), "note"),
            RackDocument(2, op=((1, 1), (0, 0)), name="swap"),
            RackDocument(3, blocks=((0, 1), (2,)), f=(((1, 0), (0, 1)), ((0,), (0,))))]
    for doc in docs:
        assert parse_document(serialize_document(doc)) == doc
    b = F.documents()["hol_brace"]
    assert isinstance(b, BraceDocument)
    assert from_json(json.loads(serialize_document(b))) == b


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n))))
def test_any_well_shaped_tables_round_trip(args):
    n, lam, rho = args
    doc = SolutionDocument(n, tuple(map(tuple, lam)), tuple(map(tuple, rho)))
    assert parse_document(serialize_document(doc)) == doc


def test_minimal_document():
    doc = parse_document('{"kind": "solution", "n": 1, "lambda": [[0]], "rho": [[0]]}')
    s = doc.build()
    assert s.n == 1 and doc.name is None


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_document('{"kind": "solution",\n  "n": 2,,\n}')
    assert exc.value.details["line"] == 2
    assert exc.value.details["col"] == 10


def test_non_utf8():
    with pytest.raises(ParseError):
        parse_document(b"\xff\xfe{")


def test_unknown_kind():
    with pytest.raises(KindUnknown) as exc:
        parse_document('{"kind": "quiver", "n": 1}')
    assert exc.value.details["known"] == ["solution", "rack", "brace"]


@pytest.mark.parametrize("text,path", [
    ('{"kind": "solution", "n": 2, "lambda": [[0, 1], [0, 1]]}', []),
    ('{"kind": "solution", "n": 2, "lambda": [[0, 1], [0, "x"]], "rho": [[0, 1], [0, 1]]}',
     ["lambda", 1, 1]),
    ('{"kind": "solution", "n": 2, "lambda": [[0, 1], [0, 1]], "rho": [[0, 1]]}', ["rho"]),
    ('{"kind": "solution", "n": 2, "lambda": [[0, 1], [0, 2]], "rho": [[0, 1], [0, 1]]}',
     ["lambda", 1, 1]),
    ('{"kind": "solution", "n": 2, "lambda": [[0, 1], [0, 1]], "rho": [[0, 1], [0, 1]],'
     ' "extra": 1}', []),
    ('{"kind": "rack", "n": 2, "op": [[0, 0], [1, 1]], "blocks": [[0, 1]]}', []),
    ('{"kind": "rack", "n": 2, "blocks": [[0, 5]], "f": [[[0, 1]]]}', ["blocks", 0, 1]),
    ('[1, 2]', []),
])
def test_schema_errors(text, path):
    with pytest.raises(SchemaError) as exc:
        parse_document(text)
    assert exc.value.details["path"] == path


def test_build_reports_mathematical_failures():
    doc = parse_document('{"kind": "solution", "n": 2, "lambda": [[0, 1], [0, 1]],'
                         ' "rho": [[0, 0], [1, 1]]}')
    with pytest.raises(YBEError):
        doc.build()


def test_dumps_keeps_rows_on_one_line():
    text = dumps({"a": [[0, 1], [1, 0]], "b": []})
    assert "[0, 1]" in text and "[1, 0]" in text
    assert json.loads(text) == {"a": [[0, 1], [1, 0]], "b": []}
