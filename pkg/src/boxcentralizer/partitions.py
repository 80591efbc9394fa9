"""Integer partitions stored as weakly decreasing tuples."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations_with_replacement


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Ordering is plain tuple ordering on the decreasing storage, which is the
    order used for basis listings: (1, 1) < (2, 1) < (2, 2) < (3, 1) < ...
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"partition parts must be positive integers, got {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, j: int) -> int:
        return multiplicity(self, j)

    def transpose(self) -> Partition:
        return transpose(self)

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> Partition:
        return sort_to_partition(data)


@dataclass(frozen=True)
class PartitionConstraint:
    """Length exactly ``k``, every part at most ``n``."""

    k: int
    n: int

    def __post_init__(self) -> None:
        for name in ("k", "n"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    def admits(self, lam: Partition) -> bool:
        return len(lam) == self.k and (not lam or lam[0] <= self.n)

    def check(self, lam: Partition) -> Partition:
        if not isinstance(lam, Partition):
            lam = sort_to_partition(lam)
        if not self.admits(lam):
            raise ValueError(
                f"{tuple(lam)} violates constraint: need length {self.k} and parts <= {self.n}"
            )
        return lam


def sort_to_partition(t: Iterable[int]) -> Partition:
    """Sort the entries of ``t`` into canonical (decreasing) storage."""
    entries = list(t)
    if not entries:
        raise ValueError("cannot build a partition from an empty sequence")
    return Partition(sorted(entries, reverse=True))


def transpose(lam: Partition) -> Partition:
    """Conjugate partition, obtained by reflecting the Ferrers diagram."""
    if not lam:
        raise ValueError("transpose of the empty partition is not defined here")
    return Partition(sum(1 for p in lam if p > i) for i in range(lam[0]))


def multiplicity(lam: Iterable[int], j: int) -> int:
    return sum(1 for p in lam if p == j)


def multiplicities(lam: Iterable[int]) -> dict[int, int]:
    """Map each distinct part to the number of times it occurs."""
    return dict(Counter(lam))


def enumerate_constrained(c: PartitionConstraint) -> list[Partition]:
    """All partitions of length ``c.k`` with parts in ``1..c.n``, in ascending tuple order."""
    out = [
        Partition(reversed(combo))
        for combo in combinations_with_replacement(range(1, c.n + 1), c.k)
    ]
    out.sort()
    return out


def _partitions_of(k: int, largest: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions_of(k - first, first):
            yield (first,) + rest


def enumerate_partitions_of(k: int) -> list[Partition]:
    """All partitions of ``k`` in reverse lexicographic order, e.g. (3), (2, 1), (1, 1, 1)."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return [Partition(p) for p in _partitions_of(k, k)]


def parse_partition(text: str) -> Partition:
    """Parse comma separated positive integers, in any order."""
    try:
        parts = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise ValueError(f"invalid partition syntax: {text!r}") from None
    return sort_to_partition(parts)
