"""graph6 reading and writing (short form, n <= 62).

Layout: one byte ``n + 63``, then the upper triangle in column order
x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte, most
significant bit first, zero padded, each group written as ``group + 63``.
"""
from __future__ import annotations

from typing import BinaryIO, Iterable, Iterator

import numpy as np

from .errors import Graph6Error
from .graph import Graph

HEADER = b">>graph6<<"
MAX_N = 62


def _pair_index(n: int) -> tuple[np.ndarray, np.ndarray]:
    # column order: for j in 1..n-1, for i in 0..j-1
    rows, cols = [], []
    for j in range(1, n):
        rows.extend(range(j))
        cols.extend([j] * j)
    return np.array(rows, dtype=np.intp), np.array(cols, dtype=np.intp)


_INDEX_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def pair_index(n: int):
    if n not in _INDEX_CACHE:
        _INDEX_CACHE[n] = _pair_index(n)
    return _INDEX_CACHE[n]


def data_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def _strip(text) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = bytes(text)
    if text.endswith(b"\n"):
        text = text[:-1]
    if text.endswith(b"\r"):
        text = text[:-1]
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    return text


def parse_graph6(text, *, line: int | None = None) -> Graph:
    """Decode one graph6 record (``bytes`` or ``str``, newline optional)."""
    data = _strip(text)
    if not data:
        raise Graph6Error("empty graph6 record", offset=0, line=line)
    first = data[0]
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", offset=0, line=line)
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid length byte {first!r}", offset=0, line=line)
    n = first - 63
    need = data_length(n)
    body = data[1:]
    for k, b in enumerate(body):
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid data byte {b!r}", offset=k + 1, line=line)
    if len(body) < need:
        raise Graph6Error(f"truncated record: expected {need} data bytes, got {len(body)}",
                          offset=len(data), line=line)
    if len(body) > need:
        raise Graph6Error("trailing garbage after graph6 record", offset=1 + need, line=line)
    pairs = n * (n - 1) // 2
    adj = np.zeros((n, n), dtype=bool)
    if pairs:
        groups = np.frombuffer(body, dtype=np.uint8) - 63
        bits = np.unpackbits(groups[:, None], axis=1)[:, 2:].ravel()
        if bits[pairs:].any():
            raise Graph6Error("nonzero padding bits", offset=len(data) - 1, line=line)
        r, c = pair_index(n)
        on = bits[:pairs].astype(bool)
        adj[r[on], c[on]] = True
        adj |= adj.T
    return Graph._trusted(adj)


def write_graph6(g: Graph) -> bytes:
    """Encode ``g`` as a graph6 record without trailing newline."""
    n = g.n
    if n > MAX_N:
        raise Graph6Error(f"graph6 short form supports n <= {MAX_N}, got n = {n}")
    r, c = pair_index(n)
    bits = g.adj[r, c].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 6)
    groups = bits @ (1 << np.arange(5, -1, -1)).astype(np.uint8)
    return bytes([n + 63]) + (groups.astype(np.uint8) + 63).tobytes()


def iter_records(source: BinaryIO | Iterable[bytes]) -> Iterator[tuple[int, bytes]]:
    """Yield ``(line_number, record)`` for each nonblank line of a stream."""
    for lineno, raw in enumerate(source, start=1):
        if isinstance(raw, str):
            raw = raw.encode("ascii")
        rec = _strip(raw)
        if rec:
            yield lineno, rec


def read_graph6(source) -> Iterator[Graph]:
    for lineno, rec in iter_records(source):
        yield parse_graph6(rec, line=lineno)


def decode_batch(records: list[bytes], n: int) -> np.ndarray:
    """Decode many records of the same order into an (B, n, n) bool array.

    Every record must be exactly ``1 + data_length(n)`` bytes with a valid
    length byte; callers fall back to :func:`parse_graph6` for anything
    else so that errors carry proper offsets.
    """
    width = 1 + data_length(n)
    buf = np.frombuffer(b"".join(records), dtype=np.uint8).reshape(len(records), width)
    if not (buf[:, 0] == n + 63).all() or (buf < 63).any() or (buf > 126).any():
        raise Graph6Error("batch contains malformed records")
    pairs = n * (n - 1) // 2
    out = np.zeros((len(records), n, n), dtype=bool)
    if not pairs:
        return out
    bits = np.unpackbits((buf[:, 1:] - 63)[:, :, None], axis=2)[:, :, 2:].reshape(len(records), -1)
    if bits[:, pairs:].any():
        raise Graph6Error("batch contains nonzero padding bits")
    r, c = pair_index(n)
    out[:, r, c] = bits[:, :pairs].astype(bool)
    out |= out.transpose(0, 2, 1)
    return out
