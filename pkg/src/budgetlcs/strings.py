"""String representation, alphabet remapping, frequencies, and matching-pair counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "SymbolString",
    "FrequencyTable",
    "remap_alphabet",
    "frequencies",
    "count_matching_pairs",
    "parse_bytes",
    "parse_tokens",
]


@dataclass(frozen=True)
class SymbolString:
    """A string over a dense integer alphabet.

    ``symbols`` is a read-only int32 array; every entry is < ``alphabet_size``.
    Instances are immutable and safe to share across threads.
    """

    symbols: np.ndarray
    alphabet_size: int

    def __post_init__(self) -> None:
        arr = np.asarray(self.symbols, dtype=np.int32)
        arr.flags.writeable = False
        object.__setattr__(self, "symbols", arr)
        if arr.size and (arr.min() < 0 or arr.max() >= self.alphabet_size):
            raise ValueError("symbol id out of range for alphabet_size")

    def __len__(self) -> int:
        return int(self.symbols.size)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return SymbolString(self.symbols[i], self.alphabet_size)
        return int(self.symbols[i])

    def __iter__(self):
        return iter(self.symbols.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolString):
            return NotImplemented
        return self.alphabet_size == other.alphabet_size and np.array_equal(
            self.symbols, other.symbols
        )

    def slice(self, start: int, stop: int) -> "SymbolString":
        return SymbolString(self.symbols[start:stop], self.alphabet_size)

    def is_subsequence_of(self, other: "SymbolString") -> bool:
        """Order-preserving containment check (used by structural tests)."""
        a, b = self.symbols, other.symbols
        if a.size == 0:
            return True
        j = 0
        bl = b.tolist()
        al = a.tolist()
        for sym in bl:
            if sym == al[j]:
                j += 1
                if j == len(al):
                    return True
        return False


@dataclass(frozen=True)
class FrequencyTable:
    """Occurrence counts per symbol id; zero-count symbols are not stored."""

    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if any(v <= 0 for v in self.counts.values()):
            raise ValueError("zero or negative counts must not be stored")

    def __getitem__(self, sym: int) -> int:
        return self.counts.get(sym, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: "FrequencyTable") -> "FrequencyTable":
        merged = dict(self.counts)
        for sym, cnt in other.counts.items():
            merged[sym] = merged.get(sym, 0) + cnt
        return FrequencyTable(merged)


def remap_alphabet(
    raw_x: Iterable, raw_y: Iterable
) -> tuple[SymbolString, SymbolString, dict]:
    """Map two token sequences onto one dense id space.

    Ids are assigned in order of first appearance over the concatenation x.y,
    so the shared alphabet is exactly the set of distinct tokens.  Returns the
    two remapped strings and the token -> id map.
    """
    mapping: dict = {}
    xs: list[int] = []
    ys: list[int] = []
    for out, toks in ((xs, raw_x), (ys, raw_y)):
        for tok in toks:
            sid = mapping.get(tok)
            if sid is None:
                sid = len(mapping)
                mapping[tok] = sid
            out.append(sid)
    size = len(mapping)
    return (
        SymbolString(np.array(xs, dtype=np.int32), size),
        SymbolString(np.array(ys, dtype=np.int32), size),
        mapping,
    )


def frequencies(s: SymbolString) -> FrequencyTable:
    """Count occurrences of every symbol appearing in ``s``."""
    if len(s) == 0:
        return FrequencyTable({})
    counts = np.bincount(s.symbols, minlength=s.alphabet_size)
    nz = np.flatnonzero(counts)
    return FrequencyTable({int(k): int(counts[k]) for k in nz})


def bincounts(s: SymbolString) -> np.ndarray:
    """Dense count vector over the full alphabet (internal fast path)."""
    return np.bincount(s.symbols, minlength=s.alphabet_size)


def count_matching_pairs(x: SymbolString, y: SymbolString) -> int:
    """Number of index pairs (i, j) with x[i] == y[j].

    Computed as the inner product of the two frequency vectors, which equals
    the brute-force pair count.
    """
    if len(x) == 0 or len(y) == 0:
        return 0
    size = max(x.alphabet_size, y.alphabet_size)
    cx = np.bincount(x.symbols, minlength=size)
    cy = np.bincount(y.symbols, minlength=size)
    return int(np.dot(cx, cy))


def parse_bytes(data: bytes) -> list[int]:
    """Each byte is one token."""
    return list(data)


def parse_tokens(text: str) -> list[int]:
    """Whitespace-separated unsigned decimal tokens."""
    return [int(tok) for tok in text.split()]
