"""Set-partition diagrams on {1..k} ∪ {1'..k'} and their ◊-classes.

Two diagrams are ◊-equivalent when one becomes the other after relabelling
the top vertices and, independently, the bottom vertices.  Such relabellings
only preserve how many top and bottom vertices each block has, so the
multiset of (top size, bottom size) over blocks is a complete invariant.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from itertools import chain
from typing import NamedTuple

from .centralizer import PairShape, canonical_pair_shape
from .partitions import Partition, PartitionConstraint, enumerate_partitions_of, sort_to_partition

SET_PARTITION_LIMIT = 4


class Block(NamedTuple):
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}


def _vertex_position(k: int, row: str, index: int) -> int:
    # 1 < 2 < ... < k < 1' < ... < k'
    return index if row == "top" else k + index


def _block_key(k: int, block: Block) -> int:
    if block.top:
        return block.top[0]
    return k + block.bottom[0]


@dataclass(frozen=True)
class SetPartitionDiagram:
    """A set partition of the 2k vertices; blocks are ordered by their least vertex."""

    k: int
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        k = self.k
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"k must be a positive integer, got {k!r}")
        blocks = []
        for b in self.blocks:
            top, bottom = (b.top, b.bottom) if isinstance(b, Block) else b
            blocks.append(Block(tuple(sorted(top)), tuple(sorted(bottom))))
        seen_top = [v for b in blocks for v in b.top]
        seen_bottom = [v for b in blocks for v in b.bottom]
        if any(not b.top and not b.bottom for b in blocks):
            raise ValueError("blocks must be nonempty")
        if sorted(seen_top) != list(range(1, k + 1)) or sorted(seen_bottom) != list(range(1, k + 1)):
            raise ValueError(f"blocks must partition {{1..{k}}} and {{1'..{k}'}} exactly once each")
        blocks.sort(key=lambda b: _block_key(k, b))
        object.__setattr__(self, "blocks", tuple(blocks))

    def to_json(self) -> dict:
        return {"k": self.k, "blocks": [b.to_json() for b in self.blocks]}

    @classmethod
    def from_json(cls, data: Mapping | str) -> SetPartitionDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        blocks = [Block(tuple(b.get("top", ())), tuple(b.get("bottom", ()))) for b in data["blocks"]]
        return cls(int(data["k"]), tuple(blocks))

    def __str__(self) -> str:
        parts = []
        for b in self.blocks:
            labels = [str(v) for v in b.top] + [f"{v}'" for v in b.bottom]
            parts.append("{" + ", ".join(labels) + "}")
        return "{" + ", ".join(parts) + "}"


_TOKEN = re.compile(r"(\d+)('?)")


def parse_diagram(text: str, k: int | None = None) -> SetPartitionDiagram:
    """Parse the usual notation, e.g. ``{{1, 2, 3, 5'}, {4, 5}, {1', 2'}, {3', 4'}}``."""
    inner = text.strip()
    if inner.startswith("{") and inner.endswith("}"):
        inner = inner[1:-1]
    blocks = []
    for chunk in re.findall(r"\{([^{}]*)\}", inner):
        top, bottom = [], []
        for num, prime in _TOKEN.findall(chunk):
            (bottom if prime else top).append(int(num))
        blocks.append(Block(tuple(top), tuple(bottom)))
    if k is None:
        k = max(chain.from_iterable(b.top + b.bottom for b in blocks))
    return SetPartitionDiagram(k, tuple(blocks))


@dataclass(frozen=True, order=True)
class BlockShapeMultiset:
    """Multiset of (top size, bottom size) over the blocks of a diagram, stored descending."""

    shape: tuple[tuple[int, int], ...]
    k: int

    def __post_init__(self) -> None:
        shape = tuple(sorted(((int(u), int(l)) for u, l in self.shape), reverse=True))
        object.__setattr__(self, "shape", shape)
        if any(u < 0 or l < 0 or (u, l) == (0, 0) for u, l in shape):
            raise ValueError(f"block profiles must be nonnegative and not (0, 0): {shape}")
        if sum(u for u, _ in shape) != self.k or sum(l for _, l in shape) != self.k:
            raise ValueError(f"block profile sums of {shape} do not both equal k={self.k}")

    def to_json(self) -> list[list[int]]:
        return [[u, l] for u, l in self.shape]

    def row_partitions(self) -> tuple[Partition, Partition]:
        """Block sizes in the top row and in the bottom row, as partitions of k."""
        return (
            sort_to_partition(u for u, _ in self.shape if u),
            sort_to_partition(l for _, l in self.shape if l),
        )

    def representative(self) -> SetPartitionDiagram:
        """A diagram in this class, filling each row left to right block by block."""
        return _diagram_from_counts(self.k, self.shape)


def lozenge_canonical(s: SetPartitionDiagram) -> BlockShapeMultiset:
    return BlockShapeMultiset(tuple((len(b.top), len(b.bottom)) for b in s.blocks), s.k)


def m_matrix(s: SetPartitionDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Component labels of the top and bottom rows.

    Components are numbered 1, 2, ... in order of their first vertex along
    1 < ... < k < 1' < ... < k'.
    """
    k = s.k
    owner: dict[int, int] = {}
    for i, b in enumerate(s.blocks):
        for v in b.top:
            owner[_vertex_position(k, "top", v)] = i
        for v in b.bottom:
            owner[_vertex_position(k, "bottom", v)] = i
    label: dict[int, int] = {}
    for pos in range(1, 2 * k + 1):
        label.setdefault(owner[pos], len(label) + 1)
    top = tuple(label[owner[pos]] for pos in range(1, k + 1))
    bottom = tuple(label[owner[pos]] for pos in range(k + 1, 2 * k + 1))
    return top, bottom


def lambda_mu_of(s: SetPartitionDiagram) -> tuple[Partition, Partition]:
    top, bottom = m_matrix(s)
    return sort_to_partition(top), sort_to_partition(bottom)


def phi(s: SetPartitionDiagram, n: int) -> PairShape:
    """Orbit class of (λ(S), μ(S)) in End_{S_n}(V^{⊠k}); defined for 2k <= n."""
    if 2 * s.k > n:
        raise ValueError(f"phi needs 2k <= n, got k={s.k}, n={n}")
    lam, mu = lambda_mu_of(s)
    return canonical_pair_shape(lam, mu, PartitionConstraint(s.k, n))


def _diagram_from_counts(k: int, counts: Iterable[tuple[int, int]]) -> SetPartitionDiagram:
    blocks = []
    upper = lower = 0
    for u, l in counts:
        if (u, l) == (0, 0):
            continue
        blocks.append(Block(tuple(range(upper + 1, upper + u + 1)), tuple(range(lower + 1, lower + l + 1))))
        upper += u
        lower += l
    return SetPartitionDiagram(k, tuple(blocks))


def diagram_from_pair(nu: Partition, gamma: Partition, c: PartitionConstraint) -> SetPartitionDiagram:
    """A diagram S with phi(S) equal to the class of (ν, γ).

    For each value i = 1..n, with upper_i and lower_i its multiplicities in ν
    and γ, the next upper_i top vertices and next lower_i bottom vertices form
    one block.  Ranges are consecutive and disjoint.
    """
    nu, gamma = c.check(nu), c.check(gamma)
    top, bottom = Counter(nu), Counter(gamma)
    return _diagram_from_counts(c.k, ((top[i], bottom[i]) for i in range(1, c.n + 1)))


def _pair_types(k: int) -> list[tuple[int, int]]:
    return sorted(((u, l) for u in range(k + 1) for l in range(k + 1) if (u, l) != (0, 0)), reverse=True)


def iter_block_shapes(k: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Multisets of (u, l) pairs with both coordinate sums equal to k, as descending tuples."""
    types = _pair_types(k)

    def rec(i: int, up: int, low: int, acc: list[tuple[int, int]]):
        if up == 0 and low == 0:
            yield tuple(acc)
            return
        if i == len(types):
            return
        u, l = types[i]
        m = 0
        while m * u <= up and m * l <= low:
            yield from rec(i + 1, up - m * u, low - m * l, acc + [(u, l)] * m)
            m += 1

    yield from rec(0, k, k, [])


def enumerate_diagram_classes(k: int) -> list[BlockShapeMultiset]:
    """All ◊-classes of set partitions of {1..k} ∪ {1'..k'}, sorted.

    Classes are generated directly as block-profile multisets, so the cost
    is proportional to the number of classes rather than Bell(2k).
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return sorted(BlockShapeMultiset(s, k) for s in iter_block_shapes(k))


def class_census(k: int) -> dict[tuple[Partition, Partition], int]:
    """Number of ◊-classes for each pair (top block sizes, bottom block sizes).

    Keys run over all pairs of partitions of k, in reverse lexicographic order.
    """
    counts = Counter(cls.row_partitions() for cls in enumerate_diagram_classes(k))
    parts = enumerate_partitions_of(k)
    return {(lam, mu): counts.get((lam, mu), 0) for lam in parts for mu in parts}


def enumerate_set_partitions(k: int, limit: int = SET_PARTITION_LIMIT) -> list[SetPartitionDiagram]:
    """Every set partition of the 2k vertices (Bell(2k) of them).

    Meant for brute-force checks only; ``k`` above ``limit`` is refused in
    favour of :func:`enumerate_diagram_classes`.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if k > limit:
        raise ValueError(
            f"k={k} exceeds the set-partition limit {limit} (Bell({2 * k}) diagrams); "
            "use enumerate_diagram_classes for class-level enumeration"
        )
    size = 2 * k
    out = []
    # restricted growth strings over vertices in the order 1..k, 1'..k'
    rgs = [0] * size

    def rec(pos: int, used: int) -> None:
        if pos == size:
            blocks: list[tuple[list[int], list[int]]] = [([], []) for _ in range(used)]
            for p, b in enumerate(rgs):
                if p < k:
                    blocks[b][0].append(p + 1)
                else:
                    blocks[b][1].append(p - k + 1)
            out.append(SetPartitionDiagram(k, tuple(Block(tuple(t), tuple(d)) for t, d in blocks)))
            return
        for b in range(used + 1):
            rgs[pos] = b
            rec(pos + 1, max(used, b + 1))

    rec(0, 0)
    return out
