from django.core.exceptions import ValidationError

from .graph import MAX_ORDER, Graph

HEADER = b">>graph6<<"

_OFFSET = 63
_EXTENDED = 126


def _error(message: str) -> ValidationError:
    return ValidationError(f"malformed graph6: {message}", code="graph6")


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise _error("empty input")
    first = data[0]
    if first < _OFFSET or first > _EXTENDED:
        raise _error(f"invalid length byte {first!r}")
    if first < _EXTENDED:
        return first - _OFFSET, 1
    if len(data) < 4:
        raise _error("truncated length prefix")
    if data[1] == _EXTENDED:
        raise _error(f"orders above {MAX_ORDER} are not supported")
    n = 0
    for byte in data[1:4]:
        if byte < _OFFSET or byte > _EXTENDED:
            raise _error(f"invalid length byte {byte!r}")
        n = (n << 6) | (byte - _OFFSET)
    if n > MAX_ORDER:
        raise _error(f"orders above {MAX_ORDER} are not supported")
    if n <= 62:
        raise _error(f"non-canonical length prefix for order {n}")
    return n, 4


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + _OFFSET])
    return bytes([_EXTENDED, ((n >> 12) & 63) + _OFFSET, ((n >> 6) & 63) + _OFFSET, (n & 63) + _OFFSET])


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 record.

    Accepts an optional `>>graph6<<` header and trailing whitespace. Upper-triangle bits are read
    column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    """
    if isinstance(text, str):
        try:
            text = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise _error("non-ASCII input") from exc
    data = bytes(text)
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER) :]
    n, offset = _decode_order(data)
    payload = data[offset:]

    pairs = n * (n - 1) // 2
    expected = (pairs + 5) // 6
    if len(payload) != expected:
        raise _error(f"order {n} needs {expected} payload bytes, got {len(payload)}")

    bits = 0
    for byte in payload:
        if byte < _OFFSET or byte > _EXTENDED:
            raise _error(f"invalid payload byte {byte!r}")
        bits = (bits << 6) | (byte - _OFFSET)
    padding = expected * 6 - pairs
    if bits & ((1 << padding) - 1):
        raise _error("non-zero padding bits")
    bits >>= padding

    rows = [0] * n
    position = pairs - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> position) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position -= 1
    return Graph(n, tuple(rows))


def to_graph6(graph: Graph) -> bytes:
    """Encode without header or trailing newline; `parse_graph6(to_graph6(g)) == g`."""
    n = graph.n
    out = bytearray(_encode_order(n))
    group = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | ((graph.masks[i] >> j) & 1)
            filled += 1
            if filled == 6:
                out.append(group + _OFFSET)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + _OFFSET)
    return bytes(out)
