import io

import numpy as np
import pytest
from hypothesis import given, settings

from toughspec.errors import Graph6Error
from toughspec.graph import Graph, complete, empty_graph
from toughspec.graph6 import (decode_batch, iter_records, parse_graph6, read_graph6,
                              write_graph6)

from oracles import graph6_reference
from strategies import graphs


@pytest.mark.parametrize("text, graph", [
    ("A_", complete(2)), ("A?", empty_graph(2)), ("Bw", complete(3)), ("?", empty_graph(0)),
    ("@", empty_graph(1)),
])
def test_known_records(text, graph):
    assert parse_graph6(text) == graph
    assert write_graph6(graph) == text.encode()


def test_bit_order_is_column_major():
    # x(0,1) x(0,2) x(1,2) x(0,3): only the edge 0-2 set
    g = parse_graph6(bytes([4 + 63, 0b010000 + 63]))
    assert g.edges() == [(0, 2)]


def test_header_and_newlines_are_skipped():
    assert parse_graph6(b">>graph6<<Bw\r\n") == complete(3)


@pytest.mark.parametrize("text, offset, fragment", [
    ("Bw~", 2, "trailing garbage"),
    ("C", 1, "truncated"),
    ("B\x10", 1, "invalid data byte"),
    ("~A?", 0, "long-form"),
    ("\x20", 0, "invalid length byte"),
    ("Bx", 1, "padding"),
    ("", 0, "empty"),
])
def test_malformed_records(text, offset, fragment):
    with pytest.raises(Graph6Error, match=fragment) as info:
        parse_graph6(text, line=7)
    assert info.value.offset == offset
    assert info.value.line == 7
    assert "line 7" in str(info.value)


def test_write_rejects_large_graphs():
    with pytest.raises(Graph6Error):
        write_graph6(empty_graph(63))


@settings(max_examples=200)
@given(graphs(0, 40, density=0.5))
def test_round_trip_and_reference_encoder(g):
    rec = write_graph6(g)
    assert rec == graph6_reference(g)
    assert parse_graph6(rec) == g


def test_round_trip_at_size_limit():
    rng = np.random.default_rng(5)
    a = np.triu(rng.random((62, 62)) < 0.5, 1)
    g = Graph(a | a.T)
    assert parse_graph6(write_graph6(g)) == g


def test_stream_reading_reports_line_numbers():
    data = b"Bw\n\nA_\nBz\n"
    recs = list(iter_records(io.BytesIO(data)))
    assert [ln for ln, _ in recs] == [1, 3, 4]
    with pytest.raises(Graph6Error, match="line 4"):
        list(read_graph6(io.BytesIO(data)))


def test_decode_batch_matches_single_parse(graphs_le8):
    eights = [g for g in graphs_le8 if g.n == 8][:500]
    recs = [write_graph6(g) for g in eights]
    batch = decode_batch(recs, 8)
    assert all((batch[i] == g.adj).all() for i, g in enumerate(eights))


def test_decode_batch_rejects_bad_records():
    with pytest.raises(Graph6Error):
        decode_batch([b"Bw", b"B\x10"], 3)
