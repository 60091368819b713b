import pytest

from graphrh import Multigraph, genus, subdivide_loops, valency
from graphrh.errors import DanglingEndpoint, Disconnected, EmptyGraph, IdCollision, UnknownVertex
from graphrh.graph import connected_components

from shapes import bowtie, path, triangle


def test_triangle_is_valid():
    g = triangle()
    assert g.vertices == ("a", "b", "c")
    assert len(g.edges) == 3


def test_two_disjoint_edges_are_disconnected():
    with pytest.raises(Disconnected) as info:
        Multigraph(["a", "b", "c", "d"], {"e": ("a", "b"), "f": ("c", "d")})
    assert info.value.component_count == 2


def test_undeclared_endpoint():
    with pytest.raises(DanglingEndpoint):
        Multigraph(["a"], {"e": ("a", "x")})


def test_single_vertex_is_connected():
    assert Multigraph(["v"]).genus == 0


def test_empty_graph_rejected():
    with pytest.raises(EmptyGraph):
        Multigraph([])


def test_vertex_and_edge_ids_must_differ():
    with pytest.raises(IdCollision):
        Multigraph(["a", "b"], {"a": ("a", "b")})


def test_endpoints_are_stored_sorted():
    g = Multigraph(["a", "b"], {"e": ("b", "a")})
    assert g.endpoints("e") == ("a", "b")


@pytest.mark.parametrize("v", ["a", "b", "c"])
def test_valency_on_triangle(v):
    assert valency(triangle(), v) == 2


def test_loop_counts_twice():
    g = Multigraph(["v"], {"l": ("v", "v")})
    assert valency(g, "v") == 2
    assert g.loops == ("l",)


def test_bowtie_center_valency():
    assert valency(bowtie(), "p") == 4


def test_valency_unknown_vertex():
    with pytest.raises(UnknownVertex):
        valency(triangle(), "z")


def test_genus_examples():
    assert genus(path("a", "b", "c", "d", "e")) == 0
    assert genus(triangle()) == 1
    assert genus(bowtie()) == 2


def test_subdivide_loopless_is_identity():
    g = triangle()
    out, mids = subdivide_loops(g)
    assert out is g and mids == {}


def test_subdivide_single_loop():
    g = Multigraph(["v"], {"l": ("v", "v")})
    out, mids = subdivide_loops(g)
    assert mids == {"l": "loopmid:l"}
    assert len(out.vertices) == 2 and len(out.edges) == 2
    assert out.is_loopless and out.genus == 1
    assert set(out.edges.values()) == {("loopmid:l", "v")}


def test_subdivide_two_loops():
    g = Multigraph(["v"], {"l1": ("v", "v"), "l2": ("v", "v")})
    out, _ = subdivide_loops(g)
    assert (len(out.vertices), len(out.edges), out.genus) == (3, 4, 2)
    assert out.valency("v") == 4


def test_components_of_edge_list():
    assert connected_components(["a", "b", "c"], {"e": ("a", "b")}) == [["a", "b"], ["c"]]
