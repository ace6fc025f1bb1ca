"""Integer partitions, conjugation, horizontal strips and partition statistics."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Sequence


class Partition:
    """A weakly decreasing sequence of positive integers (no trailing zeros).

    Parts beyond the length read as zero, matching the infinite-tail
    convention used throughout the identity layer.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts if int(p) != 0)
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part access with zero padding."""
        if i < 1:
            raise IndexError("parts are 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                cols[i] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: other fits inside self."""
        return all(self.part(i + 1) >= p for i, p in enumerate(other.parts))

    def multiplicity(self, i: int) -> int:
        if i < 1:
            raise ValueError("part values are >= 1")
        return sum(1 for p in self.parts if p == i)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}" if self.parts else "Partition()"

    def to_string(self) -> str:
        """Comma-separated part list; empty partition -> "0"."""
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    @staticmethod
    def from_string(s: str) -> "Partition":
        s = s.strip()
        if s in ("", "0", "()"):
            return Partition()
        return Partition(int(x) for x in s.split(","))


EMPTY = Partition()


class StripMask:
    """A 0/1 sequence fixing the first k columns of a horizontal strip."""

    __slots__ = ("omega",)

    def __init__(self, omega: Iterable[int]):
        omega = tuple(int(w) for w in omega)
        if any(w not in (0, 1) for w in omega):
            raise ValueError(f"mask entries must be 0 or 1: {omega}")
        if not omega:
            raise ValueError("mask must have positive length")
        object.__setattr__(self, "omega", omega)

    def __setattr__(self, name, value):
        raise AttributeError("StripMask is immutable")

    @property
    def weight(self) -> int:
        return sum(self.omega)

    def __len__(self):
        return len(self.omega)

    def __iter__(self):
        return iter(self.omega)

    def __getitem__(self, i):
        return self.omega[i]

    def __eq__(self, other):
        if isinstance(other, StripMask):
            return self.omega == other.omega
        return NotImplemented

    def __hash__(self):
        return hash(self.omega)

    def __repr__(self):
        return "StripMask(%s)" % "".join(str(w) for w in self.omega)

    def ascent_set(self):
        """Positions j (1-based) with omega_j = 0 and omega_{j+1} = 1."""
        return [
            j + 1
            for j in range(len(self.omega) - 1)
            if self.omega[j] == 0 and self.omega[j + 1] == 1
        ]

    @staticmethod
    def from_string(s: str) -> "StripMask":
        return StripMask(int(ch) for ch in s.strip())


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def n_stat(lam: Partition) -> int:
    """The weighted row statistic sum_i (i-1)*lam_i."""
    return sum(i * p for i, p in enumerate(lam.parts))


def dot(lam, mu) -> int:
    """Componentwise scalar product, zero-padding the shorter sequence.

    Accepts partitions, masks or plain integer sequences.
    """
    a = lam.parts if isinstance(lam, Partition) else tuple(lam)
    b = mu.parts if isinstance(mu, Partition) else tuple(mu)
    return sum(x * y for x, y in zip(a, b))


def multiplicity(lam: Partition, i: int) -> int:
    return lam.multiplicity(i)


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    """True iff mu fits in lam and lam/mu has at most one square per column."""
    if not lam.contains(mu):
        return False
    lc, mc = lam.conjugate(), mu.conjugate()
    return all(lc.part(i) - mc.part(i) in (0, 1) for i in range(1, lam.part(1) + 1))


def strip_columns(lam: Partition, mu: Partition) -> tuple:
    """Column components of the skew diagram lam/mu, as a 0/1 tuple.

    Indexed by columns 1..lam_1; raises when lam/mu is not a horizontal strip.
    """
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    lc, mc = lam.conjugate(), mu.conjugate()
    theta = tuple(lc.part(i) - mc.part(i) for i in range(1, lam.part(1) + 1))
    if any(t not in (0, 1) for t in theta):
        raise ValueError(f"{lam}/{mu} is not a horizontal strip")
    return theta


def enumerate_partitions(
    weight: int,
    max_length: Optional[int] = None,
    max_part: Optional[int] = None,
) -> list:
    """All partitions of the given weight, in reverse-lexicographic order."""
    if weight < 0:
        raise ValueError("weight must be non-negative")
    ml = weight if max_length is None else min(max_length, weight)
    mp = weight if max_part is None else min(max_part, weight)
    return [Partition(p) for p in _enum(weight, mp, ml)]


@lru_cache(maxsize=None)
def _enum(weight: int, max_part: int, max_len: int) -> tuple:
    if weight == 0:
        return ((),)
    if max_len == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(weight, max_part), 0, -1):
        for rest in _enum(weight - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(
    max_weight: int,
    max_length: Optional[int] = None,
    max_part: Optional[int] = None,
) -> list:
    """All partitions of weight 0..max_weight, weight-major reverse-lex order."""
    out = []
    for w in range(max_weight + 1):
        out.extend(enumerate_partitions(w, max_length, max_part))
    return out


def strips_over(
    mu: Partition, boxes: int, prefix: Optional[StripMask] = None
) -> list:
    """All lam containing mu with lam/mu a horizontal strip of `boxes` squares.

    With a prefix mask of length k, the first k column components of the strip
    are pinned to the mask. Columns beyond mu_1 + boxes (or the mask length)
    cannot be touched, so the result is finite.
    """
    if boxes < 0:
        raise ValueError("boxes must be non-negative")
    if prefix is not None and not isinstance(prefix, StripMask):
        prefix = StripMask(prefix)
    muc = mu.conjugate()
    k = len(prefix) if prefix is not None else 0
    ncols = max(mu.part(1) + boxes, k)
    out = []
    cols = []

    def walk(i, prev, used):
        if used > boxes:
            return
        if i > ncols:
            if used == boxes:
                out.append(Partition(_cols_to_parts(cols)))
            return
        # remaining capacity prune: at most one box per remaining column
        if used + (ncols - i + 1) < boxes:
            return
        base = muc.part(i)
        choices = (prefix[i - 1],) if i <= k else (0, 1)
        for t in choices:
            col = base + t
            if col <= prev and (t == 0 or col >= 1):
                cols.append(col)
                walk(i + 1, col, used + t)
                cols.pop()

    walk(1, 10 ** 18, 0)
    return out


def _cols_to_parts(cols: Sequence[int]) -> list:
    # invert the conjugate: part i = number of columns of height >= i
    parts = []
    height = cols[0] if cols else 0
    for r in range(1, height + 1):
        parts.append(sum(1 for c in cols if c >= r))
    return parts


def strips_under(lam: Partition) -> list:
    """All mu contained in lam with lam/mu a horizontal strip (any size)."""
    lc = lam.conjugate()
    ncols = lam.part(1)
    out = []
    cols = []

    def walk(i, prev):
        if i > ncols:
            out.append(Partition(_cols_to_parts(cols)))
            return
        h = lc.part(i)
        for t in (0, 1):
            col = h - t
            if col >= 0 and col <= prev:
                cols.append(col)
                walk(i + 1, col)
                cols.pop()

    walk(1, 10 ** 18)
    return out
