import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcolor.cover import hard_cover
from dpcolor.formats import (
    FormatError,
    dumps_cover,
    dumps_graph,
    graph_from_graph6,
    graph_to_graph6,
    loads_cover,
    loads_graph,
    read_graph,
)
from dpcolor.multigraph import build, complete, cycle


def test_graph6_round_trip():
    for g in (complete(5), cycle(4), build(3, [(0, 1)])):
        assert graph_from_graph6(graph_to_graph6(g)) == g


def test_graph6_known_string():
    assert graph_to_graph6(complete(5)) == "D~{\n"
    assert graph_from_graph6(">>graph6<<C~\n") == complete(4)


def test_graph6_rejects_multigraph():
    with pytest.raises(ValueError):
        graph_to_graph6(complete(2, 2))


def test_graph6_errors_carry_position():
    with pytest.raises(FormatError) as e:
        graph_from_graph6("\n\n D!!!\n", "bad.g6")
    assert e.value.line == 3


def test_multigraph_json_is_canonical():
    text = dumps_graph(complete(2, 4), [4, 4])
    assert loads_graph(text) == (complete(2, 4), (4, 4))
    assert dumps_graph(*loads_graph(text)) == text


def test_json_syntax_error_has_line_and_column():
    with pytest.raises(FormatError) as e:
        loads_graph('{"n": 2,\n "edges": [[0, 1, 4]\n}', "g.json")
    assert (e.value.line, e.value.column) == (3, 1)
    assert "g.json:3:1" in str(e.value)


@pytest.mark.parametrize("doc", ['[1, 2]', '{"n": "2"}', '{"n": 2, "edges": [[0, 0, 1]]}',
                                 '{"n": 2, "edges": [[0, 1]], "h": [1]}', '{"n": 2, "edges": [[0, "1"]]}'])
def test_schema_errors(doc):
    with pytest.raises(FormatError):
        loads_graph(doc)


def test_cover_round_trip():
    c = hard_cover("clique", 3, 2)
    text = dumps_cover(c)
    assert loads_cover(text) == c
    assert dumps_cover(loads_cover(text)) == text


@pytest.mark.parametrize("bad", [
    '{"graph": {"n": 2, "edges": [[0, 1]]}, "list_sizes": [1, 1], "matchings": {"0-1": [[[0, 0], [0, 1]]]}}',
    '{"graph": {"n": 2, "edges": [[0, 1]]}, "list_sizes": [1, 1], "matchings": {"0_1": [[]]}}',
    '{"graph": {"n": 2, "edges": [[0, 1]]}, "list_sizes": [1, 1], "matchings": {}}',
])
def test_cover_errors(bad):
    with pytest.raises(FormatError):
        loads_cover(bad)


def test_read_graph_detects_format(tmp_path):
    (tmp_path / "a.g6").write_text(graph_to_graph6(cycle(4)))
    (tmp_path / "b.txt").write_text(dumps_graph(cycle(4, 2)))
    assert read_graph(tmp_path / "a.g6") == (cycle(4), None)
    assert read_graph(tmp_path / "b.txt") == (cycle(4, 2), None)
    with pytest.raises(FormatError):
        read_graph(tmp_path / "missing.g6")


@st.composite
def multigraphs(draw):
    n = draw(st.integers(0, 6))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mults = draw(st.lists(st.integers(0, 3), min_size=len(pairs), max_size=len(pairs)))
    return build(n, [(u, v, s) for (u, v), s in zip(pairs, mults) if s])


@settings(max_examples=60, deadline=None)
@given(multigraphs())
def test_json_round_trip_is_bit_exact(g):
    text = dumps_graph(g)
    assert loads_graph(text)[0] == g
    assert dumps_graph(loads_graph(text)[0]) == text
