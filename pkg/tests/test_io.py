import pytest

from cliquetrees import clique_tree as ct
from cliquetrees import relation as rel
from cliquetrees.io import (
    ParseError,
    format_bipartite,
    format_edge_list,
    format_tree,
    format_walk_log,
    graph_hash,
    parse_edge_list,
    parse_tree,
    read_edge_list,
)

from conftest import PATH_OF_3_CLIQUES, STAR


def test_parse_edge_list_with_comments_and_isolated_vertices():
    g = parse_edge_list("# a star\n1 2\n\n1 3\n   1 4  \n9\n")
    assert g.vertices == (1, 2, 3, 4, 9)
    assert g.edges == ((1, 2), (1, 3), (1, 4))


@pytest.mark.parametrize(
    "text, line",
    [("1 2\n1 x\n", 2), ("1 2 3\n", 1), ("4 4\n", 1), ("-1 2\n", 1)],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.lineno == line
    assert f"line {line}" in str(info.value)


def test_edge_list_round_trip(tmp_path):
    g = parse_edge_list("1 2\n2 3\n7\n")
    text = format_edge_list(g)
    assert text == "1 2\n2 3\n7\n"
    path = tmp_path / "g.txt"
    path.write_text(text)
    assert read_edge_list(path) == g


def test_empty_input():
    g = parse_edge_list("")
    assert len(g) == 0 and format_edge_list(g) == ""


def test_graph_hash_is_stable():
    assert graph_hash(STAR) == graph_hash(parse_edge_list("1 4\n1 3\n1 2\n"))
    assert len(graph_hash(STAR)) == 16


def test_tree_round_trip():
    for t in ct.enumerate_clique_trees(STAR):
        text = format_tree(t)
        assert parse_tree(text, STAR) == t


def test_tree_format():
    t = ct.enumerate_clique_trees(PATH_OF_3_CLIQUES)[0]
    assert format_tree(t) == "0 : 1 2\n1 : 2 3\n2 : 3 4\n0 1 | 2\n1 2 | 3\n"


def test_tree_file_with_wrong_clique_table():
    with pytest.raises(ParseError):
        parse_tree("0 : 1 3\n0 1\n", PATH_OF_3_CLIQUES)


def test_tree_file_with_bad_index():
    with pytest.raises(ParseError):
        parse_tree("0 7\n", PATH_OF_3_CLIQUES)


def test_walk_log_format():
    log = rel.random_walk(STAR, steps=2, seed=1)
    lines = format_walk_log(STAR, 1, log).splitlines()
    assert lines[0] == f"# seed=1 graph={graph_hash(STAR)}"
    assert lines[1].startswith("1 sequence ") and lines[2].startswith("2 tree ")


def test_bipartite_format():
    text = format_bipartite(rel.build_bipartite(STAR))
    assert text.count("\nT") == 3 + 12
    assert "# relation" in text
