"""Helpers for vertex sets encoded as integer bitmasks (bit i <-> vertex i)."""

from __future__ import annotations

from typing import Iterable, Iterator


def popcount(x: int) -> int:
    return bin(x).count("1")


def to_mask(s: int | Iterable[int]) -> int:
    """Accept a bitmask or an iterable of vertex ids."""
    if isinstance(s, int):
        if s < 0:
            raise ValueError("negative bitmask")
        return s
    m = 0
    for v in s:
        if v < 0:
            raise ValueError(f"negative vertex id {v}")
        m |= 1 << v
    return m


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def to_list(x: int) -> list[int]:
    return list(iter_bits(x))


def set_label(x: int) -> str:
    """Render a mask as ``{0,2}``."""
    return "{" + ",".join(str(v) for v in iter_bits(x)) + "}"


def map_set(f, x: int) -> int:
    """Image f[x] of a mask under a vertex map given as a sequence."""
    out = 0
    for v in iter_bits(x):
        out |= 1 << f[v]
    return out
