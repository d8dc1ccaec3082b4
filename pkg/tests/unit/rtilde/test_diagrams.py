"""
Unit tests for S-graph geometry and rendering.
"""
import itertools

import pytest

from rtilde.diagrams import (
    PALETTE,
    color_of,
    leaf_file_name,
    leaf_to_sgraph,
    render_leaves,
    sgraph_to_svg,
    sgraph_to_text,
)
from rtilde.lightleaves import iter_leaves
from rtilde.symmetric import SymmetricGroup


@pytest.fixture
def sss_leaves():
    return {leaf.code: leaf for leaf in iter_leaves(SymmetricGroup(2), (0, 0, 0))}


@pytest.mark.unit
class TestSGraph:
    """Test the geometry built from light leaves."""

    def test_all_dots(self, sss_leaves):
        """Test a leaf made of dots only."""
        graph = leaf_to_sgraph(sss_leaves["DDD"])
        assert len(graph.dots) == 3
        assert len(graph.strands) == 3
        assert graph.top_sequence() == ()
        assert graph.bottom_sequence() == (0, 0, 0)
        assert graph.height == 4

    def test_merge_draws_an_arc(self, sss_leaves):
        """Test a merge of two strands of the same colour."""
        graph = leaf_to_sgraph(sss_leaves["TMT"])
        assert len(graph.arcs) == 1
        arc = graph.arcs[0]
        assert (arc.left, arc.right, arc.letter) == (0, 1, 0)
        assert graph.top == (0,)
        assert graph.top_sequence() == (0,)
        assert graph.bottom_sequence() == (0, 0, 0)

    def test_braid_vertex(self, s3):
        """Test the hexavalent vertex of s1 s2 s1 = s2 s1 s2."""
        leaf = next(leaf for leaf in iter_leaves(s3, (0, 1, 0, 1)) if leaf.code == "TTTM")
        graph = leaf_to_sgraph(leaf)
        assert len(graph.vertices) == 1
        vertex = graph.vertices[0]
        assert vertex.m == 3
        assert graph.valence(vertex) == 6
        assert graph.top_sequence() == (1, 0)

    def test_boundaries_match_leaf(self, s3):
        """Test that every S-graph has the leaf's word at the bottom and its top word on top."""
        for length in range(5):
            for word in itertools.product(range(2), repeat=length):
                for leaf in iter_leaves(s3, word):
                    graph = leaf_to_sgraph(leaf)
                    assert graph.bottom_sequence() == leaf.word
                    assert graph.top_sequence() == leaf.top_word
                    assert len(graph.dots) == sum(1 for step in leaf.code if step == "D")

    def test_color_of(self):
        """Test the palette wraps around."""
        assert color_of(0) == PALETTE[0]
        assert color_of(len(PALETTE)) == PALETTE[0]


@pytest.mark.unit
class TestRendering:
    """Test the text and SVG renderings."""

    def test_text_sketch(self, sss_leaves):
        """Test the ASCII rendering of a merge."""
        text = sgraph_to_text(leaf_to_sgraph(sss_leaves["TMT"]))
        lines = text.splitlines()
        assert lines[0] == "top: s1"
        assert lines[-1] == "bottom: s1s1s1"
        assert "(-)" in text
        assert text.endswith("\n")

    def test_text_marks_dots_and_vertices(self, s3):
        """Test dot and vertex characters."""
        leaf = next(leaf for leaf in iter_leaves(s3, (0, 1, 0, 1)) if leaf.code == "TTTM")
        assert "X" in sgraph_to_text(leaf_to_sgraph(leaf))
        dotted = next(leaf for leaf in iter_leaves(s3, (0,)) if leaf.code == "D")
        assert "." in sgraph_to_text(leaf_to_sgraph(dotted))

    def test_svg_document(self, sss_leaves):
        """Test that the SVG is a complete document with strand colours."""
        data = sgraph_to_svg(leaf_to_sgraph(sss_leaves["TMT"]))
        assert isinstance(data, bytes)
        assert b"<svg" in data
        assert data.rstrip().endswith(b"</svg>")
        assert PALETTE[0].encode() in data

    def test_file_names(self, sss_leaves):
        """Test file naming."""
        assert leaf_file_name(sss_leaves["TMT"]) == "leaf_TMT_deg0.svg"
        empty = next(iter_leaves(SymmetricGroup(2), ()))
        assert leaf_file_name(empty) == "leaf_empty_deg0.svg"

    def test_render_leaves(self, sss_leaves):
        """Test one document per leaf."""
        rendered = render_leaves(list(sss_leaves.values()))
        assert len(rendered) == 5
        assert "leaf_DDD_deg3.svg" in rendered
