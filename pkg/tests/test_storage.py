"""Documents: parsing, validation errors, serialization and the fixture corpus."""

import json

import pytest

from src.exceptions import DocumentError
from src.services.cardinality_service import matrix_of_span
from src.services.determinant_service import top_degree
from src.storage import DocumentManager, parse_text, serialize_document
from src.storage.fixtures import FIXTURES, write_fixtures

NON_ASSOCIATIVE = {
    "groupoids": {
        "bad": {
            "objects": ["*"],
            "identities": {"*": "e"},
            "morphisms": [["a", "*", "*"], ["b", "*", "*"]],
            "composition": [["a", "a", "b"], ["b", "a", "a"], ["a", "b", "b"], ["b", "b", "a"]],
        }
    }
}


def test_discrete_shorthand():
    model = parse_text('{"groupoids": {"X": {"discrete": ["x", "y"]}}}')
    assert model.groupoids["X"].objects == ("x", "y")


def test_group_shorthand_with_parity():
    model = parse_text('{"groupoids": {"B": {"group": {"catalog": "S3"}, "parity": "sign"}}}')
    bg = model.groupoids["B"]
    assert len(bg.morphisms) == 6
    assert sum(1 for s in bg.parity.values() if s.is_odd) == 3


def test_syntax_error_has_line_and_column():
    with pytest.raises(DocumentError) as info:
        parse_text('{\n  "groupoids": {,\n}')
    assert info.value.line == 2
    assert info.value.column == 17
    assert str(info.value).startswith("line 2, column 17:")


def test_non_associative_table_is_rejected():
    with pytest.raises(DocumentError, match="associativity"):
        parse_text(json.dumps(NON_ASSOCIATIVE))


def test_unknown_section_and_reference():
    with pytest.raises(DocumentError, match="unknown section"):
        parse_text('{"bogus": {}}')
    with pytest.raises(DocumentError, match="unknown groupoid 'Q'"):
        parse_text('{"spans": {"s": {"left": "Q", "right": "Q", "apex": "Q"}}}')


@pytest.mark.parametrize(
    "doc",
    [
        {"groupoids": {"X": {"discrete": ["a", "a,b"]}}},
        {"groupoids": {"X": {"codiscrete": ["u", "v>w"]}}},
        {"groupoids": {"X": {"objects": ["(x)"], "morphisms": [], "composition": []}}},
        {"groupoids": {"X": {"objects": ["x"], "identities": {"x": "[i]"}}}},
        {"groupoids": {"B": {"group": {"elements": ["e|1"], "table": [["e|1", "e|1", "e|1"]]}}}},
    ],
)
def test_reserved_characters_in_ids_are_rejected(doc):
    with pytest.raises(DocumentError, match="reserved character"):
        parse_text(json.dumps(doc))


@pytest.mark.parametrize(
    "doc, entry",
    [
        ({"groupoids": {"X": {"discrete": 3}}}, "groupoid 'X'"),
        ({"groupoids": {"X": {"objects": ["x"], "parity": [1]}}}, "groupoid 'X'"),
        ({"groupoids": {"B": {"group": 7}}}, "groupoid 'B'"),
        (
            {
                "groupoids": {"X": {"discrete": ["x"]}},
                "spans": {"s": {"left": "X", "right": "X", "apex": "X", "left_map": ["x"]}},
            },
            "left_map",
        ),
        (
            {
                "groupoids": {"X": {"discrete": ["x"]}},
                "spans": {
                    "s": {
                        "left": "X",
                        "right": "X",
                        "apex": "X",
                        "left_map": {"objects": {"x": "x"}},
                        "right_map": {"objects": {"x": "x"}},
                        "rho": [-1],
                    }
                },
            },
            "rho",
        ),
        ({"spans": {"s": [1, 2]}}, "span must be an object"),
        ({"actions": {"a": {"group": {"catalog": "C2"}, "target": {"discrete": ["x"]}, "objects": [1]}}}, "action 'a'"),
        ({"generated": {"g": 5}}, "generated 'g': entry must be an object"),
        ({"generated": {"g": {"kind": "foot"}}}, "generated 'g'"),
        ({"generated": {"g": {"kind": "cube", "seed": 1}}}, "generated 'g'"),
        ({"groupoids": ["X"]}, "section 'groupoids'"),
    ],
)
def test_malformed_entries_raise_document_error(doc, entry):
    with pytest.raises(DocumentError, match=entry):
        parse_text(json.dumps(doc))


def test_sign_parity_needs_a_permutation_group():
    doc = {
        "groupoids": {
            "B": {
                "group": {"name": "S2", "elements": ["e", "t"], "table": [["e", "e", "e"], ["e", "t", "t"], ["t", "e", "t"], ["t", "t", "e"]]},
                "parity": "sign",
            }
        }
    }
    with pytest.raises(DocumentError, match="'sign' parity needs a symmetric group"):
        parse_text(json.dumps(doc))


def test_unnatural_span_is_rejected():
    doc = {
        "groupoids": {
            "E": {"discrete": ["*"]},
            "B": {"group": {"catalog": "C2"}, "parity": {"a": -1}},
            "C": {"group": {"catalog": "C2"}},
        },
        "spans": {
            "s": {
                "left": "E",
                "right": "B",
                "apex": "C",
                "left_map": {"objects": {"*": "*"}, "morphisms": {"a": "id_*"}},
                "right_map": {"objects": {"*": "*"}, "morphisms": {"a": "a"}},
            }
        },
    }
    with pytest.raises(DocumentError, match="rho naturality"):
        parse_text(json.dumps(doc))


def test_fixture_files_match_the_corpus(fixture_dir):
    for name, document in FIXTURES.items():
        with open(f"{fixture_dir}/{name}.json", encoding="utf-8") as fh:
            assert json.load(fh) == document


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_serialization_round_trip(manager, name):
    text = serialize_document(manager.load(name))
    assert serialize_document(parse_text(text)) == text


def test_round_trip_keeps_the_matrix(manager):
    model = parse_text(serialize_document(manager.load("split_idempotent")))
    assert matrix_of_span(model.spans["A"]).compact() == "[[1,1],[1,2]]"


def test_generated_section(manager):
    model = manager.load("generated")
    assert "foot" in model.groupoids
    assert {"span", "endo1", "endo2", "endo3"} <= set(model.spans)
    for degree in (1, 2, 3):
        assert top_degree(model.spans[f"endo{degree}"].left_foot) == degree


def test_resolve(manager):
    model, name = manager.resolve("split_idempotent#A")
    assert name == "A"
    assert "A" in model.spans
    with pytest.raises(DocumentError):
        manager.resolve("split_idempotent")
    with pytest.raises(DocumentError):
        manager.resolve("split_idempotent#Z")
    with pytest.raises(DocumentError, match="cannot read"):
        manager.load("missing")


def test_save_and_list(manager, tmp_path):
    target = DocumentManager(str(tmp_path))
    path = target.save("copy", manager.load("scalars"))
    assert path.name == "copy.json"
    assert target.list_documents() == ["copy"]
    assert set(target.load("copy").spans) == {"one", "minus_one", "plus_minus"}


def test_write_fixtures(tmp_path):
    paths = write_fixtures(str(tmp_path))
    assert sorted(p.stem for p in paths) == sorted(FIXTURES)
    assert DocumentManager(str(tmp_path)).list_documents() == sorted(FIXTURES)
