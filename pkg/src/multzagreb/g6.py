"""graph6 encoder and decoder (single-byte size header, n <= 62)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import Malformed, TooLarge
from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 62


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-major over the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def encode_g6(g: Graph) -> str:
    n = g.n
    if n > MAX_N:
        raise TooLarge(f"graph6 single-byte header supports n <= {MAX_N}, got {n}")
    bits = [g.masks[i] >> j & 1 for i, j in _pairs(n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def decode_g6(record: str | bytes) -> Graph:
    if isinstance(record, bytes):
        try:
            record = record.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Malformed("graph6 record is not ASCII") from exc
    if record.startswith(HEADER):
        record = record[len(HEADER) :]
    if not record:
        raise Malformed("empty graph6 record")
    codes = [ord(c) for c in record]
    bad = [c for c in codes if not 63 <= c <= 126]
    if bad:
        raise Malformed(f"byte {bad[0]} outside 63..126")
    n = codes[0] - 63
    if n > MAX_N:
        raise Malformed("multi-byte size headers are not supported")
    nbits = n * (n - 1) // 2
    if len(codes) - 1 != (nbits + 5) // 6:
        raise Malformed(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(codes) - 1}")
    bits = []
    for c in codes[1:]:
        value = c - 63
        bits.extend(value >> s & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Malformed("nonzero padding bits")
    edges = [p for p, b in zip(_pairs(n), bits) if b]
    return Graph(n, edges)


def iter_records(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Decode a stream, yielding ``(line_number, graph)``; blank lines skipped.

    Errors are re-raised as :class:`Malformed` naming the 1-based line.
    """
    for lineno, line in enumerate(lines, 1):
        text = line.rstrip("\r\n")
        if not text.strip():
            continue
        try:
            yield lineno, decode_g6(text)
        except Malformed as exc:
            raise Malformed(f"line {lineno}: {exc}") from exc


def read_g6(fh: TextIO) -> list[Graph]:
    return [g for _, g in iter_records(fh)]


def write_g6(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(encode_g6(g) + "\n")
