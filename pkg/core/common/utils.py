from collections.abc import Iterator

MASK64 = (1 << 64) - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def tuple_to_bits(members) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def derive_seed(seed: int, index: int) -> int:
    """Per-instance seed for sweeps; independent of the order instances run in."""
    return (seed ^ index) & MASK64
