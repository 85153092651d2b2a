"""Cell references: the points of the digital version of a tiling."""

from __future__ import annotations

import enum
from typing import NamedTuple


class Kind(enum.IntEnum):
    VERTEX = 0
    EDGE = 1
    FACE = 2

    @property
    def prefix(self) -> str:
        return ("v", "e", "f")[self]


class CellRef(NamedTuple):
    """A vertex, edge or face of a tiling window.

    Indices are dense per kind. Tuples order by ``(kind, index)``, which is
    the canonical order used for every deterministic output.
    """

    kind: Kind
    index: int

    def __str__(self) -> str:
        return f"{self.kind.prefix}{self.index}"

    __repr__ = __str__

    @property
    def is_vertex(self) -> bool:
        return self.kind is Kind.VERTEX

    @property
    def is_edge(self) -> bool:
        return self.kind is Kind.EDGE

    @property
    def is_face(self) -> bool:
        return self.kind is Kind.FACE


def V(i: int) -> CellRef:
    return CellRef(Kind.VERTEX, i)


def E(i: int) -> CellRef:
    return CellRef(Kind.EDGE, i)


def F(i: int) -> CellRef:
    return CellRef(Kind.FACE, i)


_PREFIXES = {"v": Kind.VERTEX, "e": Kind.EDGE, "f": Kind.FACE}


def parse_cell(text: str) -> CellRef:
    """Parse a canonical id such as ``v12``, ``e7`` or ``f3``."""
    text = text.strip()
    if len(text) < 2 or text[0] not in _PREFIXES or not text[1:].isdigit():
        raise ValueError(f"not a canonical cell id: {text!r}")
    return CellRef(_PREFIXES[text[0]], int(text[1:]))
