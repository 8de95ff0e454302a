import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grpdeg import GrpdegError, InvalidParameter, MalformedTable, ParseError, symmetric
from grpdeg.spec import default_corpus, load_group_file, parse_group_spec, read_corpus, resolve

from test_group_core import isomorphic_by_search


@pytest.mark.parametrize(
    "text, order",
    [("cyclic:6", 6), ("sym:3 x cyclic:2", 12), ("  dihedral : 4 ", 8), ("dicyclic:2", 8),
     ("heisenberg:3", 27), ("alt:4 x cyclic:2", 24), ("cyclic:2xcyclic:3", 6)],
)
def test_orders(text, order):
    spec = parse_group_spec(text)
    assert spec.order() == order == resolve(text).order


@given(st.lists(st.sampled_from(["cyclic:5", "dihedral:3", "sym:3", "alt:4", "dicyclic:2"]),
                min_size=1, max_size=3))
def test_round_trip(parts):
    text = " x ".join(parts)
    spec = parse_group_spec(text)
    assert str(spec) == text
    assert parse_group_spec(str(spec)) == spec


def test_products_are_left_associative():
    spec = parse_group_spec("cyclic:2 x cyclic:3 x cyclic:5")
    assert spec.kind == "product" and str(spec.left) == "cyclic:2 x cyclic:3"


def test_resolve_caches():
    assert resolve("sym:3") is resolve(" sym : 3 ")


@pytest.mark.parametrize("text", ["dihedral:0", "alt:2", "heisenberg:4", "dicyclic:1"])
def test_invalid_parameter(text):
    with pytest.raises(InvalidParameter):
        parse_group_spec(text)


@pytest.mark.parametrize("text, pos", [("", 0), ("klein:4", 0), ("cyclic:", 7), ("cyclic:3 y", 8),
                                       ("cyclic:3 x", 10), ("file:", 5)])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse_group_spec(text)
    assert info.value.position == pos


def test_cayley_file(tmp_path):
    path = tmp_path / "c3.json"
    path.write_text(json.dumps({"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]],
                                "labels": ["e", "a", "b"]}))
    G = resolve(f"file:{path}")
    assert G.order == 3 and G.is_abelian and G.label(1) == "a"
    assert resolve(f"file:{path} x cyclic:2").order == 6


def test_generator_file(tmp_path):
    path = tmp_path / "s3 gens.json"  # spaces in paths are allowed
    path.write_text(json.dumps({"degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}))
    G = resolve(f"cyclic:2 x file:{path}")
    assert G.order == 12
    assert isomorphic_by_search(load_group_file(str(path)), symmetric(3))


def test_bad_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"order": 4, "table": [[0, 1], [1, 0]]}))
    with pytest.raises(MalformedTable):
        load_group_file(str(bad))
    bad.write_text("{}")
    with pytest.raises(MalformedTable):
        load_group_file(str(bad))
    with pytest.raises(GrpdegError):
        load_group_file(str(tmp_path / "missing.json"))


def test_default_corpus():
    corpus = default_corpus(24)
    assert len(corpus) == len(set(corpus))
    orders = [resolve(s).order for s in corpus]
    assert max(orders) == 24 and min(orders) == 1
    for needed in ("sym:3", "dihedral:4", "dicyclic:2", "sym:4", "cyclic:2 x sym:3"):
        assert needed in corpus
    assert "heisenberg:3" not in corpus and "heisenberg:3" in default_corpus(27)
    assert default_corpus(2) == ["cyclic:1", "cyclic:2", "dihedral:1"]


def test_read_corpus(tmp_path):
    txt = tmp_path / "c.txt"
    txt.write_text("# header\ncyclic:4\n\nsym:3   # comment\n")
    assert read_corpus(str(txt)) == ["cyclic:4", "sym:3"]
    js = tmp_path / "c.json"
    js.write_text('["dihedral:4"]')
    assert read_corpus(str(js)) == ["dihedral:4"]
    js.write_text('{"a": 1}')
    with pytest.raises(GrpdegError):
        read_corpus(str(js))
