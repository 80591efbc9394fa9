"""The symmetric power space V^{⊠k} and exact sparse endomorphisms of it.

Basis vectors v_λ are indexed by partitions of length k with parts in 1..n.
An endomorphism B is stored as a sparse map ``(row, col) -> coefficient``
where ``(row=μ, col=λ)`` holds the coefficient of v_μ in B(v_λ).  With
vectors as columns, composition is the ordinary matrix product.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from types import MappingProxyType

from .partitions import Partition, PartitionConstraint, enumerate_constrained, sort_to_partition

Key = tuple[Partition, Partition]


def box_dimension(c: PartitionConstraint) -> int:
    return comb(c.n + c.k - 1, c.n - 1)


@dataclass(frozen=True)
class BoxBasis:
    """Ordered basis of V^{⊠k} together with its inverse index."""

    constraint: PartitionConstraint
    vectors: tuple[Partition, ...]
    index: Mapping[Partition, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.vectors)

    def __getitem__(self, i: int) -> Partition:
        return self.vectors[i]


@lru_cache(maxsize=64)
def box_basis(c: PartitionConstraint) -> BoxBasis:
    vectors = tuple(enumerate_constrained(c))
    return BoxBasis(c, vectors, MappingProxyType({v: i for i, v in enumerate(vectors)}))


@dataclass(frozen=True)
class ValuePermutation:
    """A permutation σ of {1..n}; ``images[i - 1] == σ(i)``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images!r}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: ValuePermutation) -> ValuePermutation:
        """Composition, ``(self * other)(i) == self(other(i))``."""
        if other.n != self.n:
            raise ValueError("permutations act on different sets")
        return ValuePermutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> ValuePermutation:
        inv = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return ValuePermutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> ValuePermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> ValuePermutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = images[j - 1], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> ValuePermutation:
        images = list(range(1, n + 1))
        rng.shuffle(images)
        return cls(tuple(images))


def adjacent_transpositions(n: int) -> list[ValuePermutation]:
    """The generators (i, i+1) of S_n, for 1 <= i < n."""
    return [ValuePermutation.transposition(n, i, i + 1) for i in range(1, n)]


def value_act(sigma: ValuePermutation, lam: Partition) -> Partition:
    """σ·λ = sort(σ(λ_1), ..., σ(λ_k))."""
    if lam and lam[0] > sigma.n:
        raise ValueError(f"part {lam[0]} of {tuple(lam)} exceeds n={sigma.n}")
    return sort_to_partition(sigma(p) for p in lam)


def place_act(pi: tuple[int, ...], lam: Partition) -> Partition:
    """Place permutation of the k tensor factors.

    Permuting the factors of a ⊠-product leaves its multiset of indices, and
    hence the basis vector, unchanged.
    """
    if sorted(pi) != list(range(1, len(lam) + 1)):
        raise ValueError(f"{pi!r} is not a permutation of 1..{len(lam)}")
    permuted = [lam[pi[i] - 1] for i in range(len(lam))]
    return sort_to_partition(permuted)


class SparseEndo:
    """Immutable sparse integer matrix on V^{⊠k}; zero coefficients are never stored."""

    __slots__ = ("constraint", "_entries", "_hash")

    def __init__(self, constraint: PartitionConstraint, entries: Mapping[Key, int] | Iterable[tuple[Key, int]] = ()):
        self.constraint = constraint
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean: dict[Key, int] = {}
        for (row, col), coeff in items:
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(f"coefficients must be integers, got {coeff!r}")
            if coeff == 0:
                continue
            key = (constraint.check(row), constraint.check(col))
            clean[key] = clean.get(key, 0) + coeff
            if clean[key] == 0:
                del clean[key]
        self._entries = clean
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, constraint: PartitionConstraint, entries: dict[Key, int]) -> SparseEndo:
        # caller guarantees valid keys and no zeros
        obj = cls.__new__(cls)
        obj.constraint = constraint
        obj._entries = entries
        obj._hash = None
        return obj

    @property
    def entries(self) -> Mapping[Key, int]:
        return MappingProxyType(self._entries)

    def __getitem__(self, key: Key) -> int:
        return self._entries.get(key, 0)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def support(self) -> frozenset[Key]:
        return frozenset(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseEndo):
            return NotImplemented
        return self.constraint == other.constraint and self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.constraint, frozenset(self._entries.items())))
        return self._hash

    def __repr__(self) -> str:
        c = self.constraint
        return f"SparseEndo(k={c.k}, n={c.n}, nnz={len(self._entries)})"

    def _same_space(self, other: SparseEndo) -> None:
        if self.constraint != other.constraint:
            raise ValueError(f"constraint mismatch: {self.constraint} vs {other.constraint}")

    def __add__(self, other: SparseEndo) -> SparseEndo:
        self._same_space(other)
        out = dict(self._entries)
        for key, coeff in other._entries.items():
            total = out.get(key, 0) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return SparseEndo._trusted(self.constraint, out)

    def __neg__(self) -> SparseEndo:
        return SparseEndo._trusted(self.constraint, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: SparseEndo) -> SparseEndo:
        return self + (-other)

    def __mul__(self, scalar: int) -> SparseEndo:
        if scalar == 0:
            return SparseEndo(self.constraint)
        return SparseEndo._trusted(self.constraint, {k: scalar * v for k, v in self._entries.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: SparseEndo) -> SparseEndo:
        return compose(self, other)

    def apply(self, vector: Mapping[Partition, int]) -> dict[Partition, int]:
        """Image of a vector given as ``{basis index: coefficient}``."""
        out: dict[Partition, int] = {}
        for (row, col), coeff in self._entries.items():
            x = vector.get(col, 0)
            if x:
                out[row] = out.get(row, 0) + coeff * x
        return {k: v for k, v in out.items() if v}

    def sorted_entries(self) -> list[tuple[Partition, Partition, int]]:
        return sorted((row, col, coeff) for (row, col), coeff in self._entries.items())

    def to_json(self) -> dict:
        return {
            "k": self.constraint.k,
            "n": self.constraint.n,
            "entries": [
                {"row": list(row), "col": list(col), "coeff": str(coeff)}
                for row, col, coeff in self.sorted_entries()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SparseEndo:
        c = PartitionConstraint(int(data["k"]), int(data["n"]))
        return cls(
            c,
            (
                ((sort_to_partition(e["row"]), sort_to_partition(e["col"])), int(e["coeff"]))
                for e in data["entries"]
            ),
        )

    def to_dense(self) -> list[list[int]]:
        """Dense matrix in basis order; rows index outputs, columns inputs."""
        basis = box_basis(self.constraint)
        d = len(basis)
        dense = [[0] * d for _ in range(d)]
        for (row, col), coeff in self._entries.items():
            dense[basis.index[row]][basis.index[col]] = coeff
        return dense


def zero_endo(c: PartitionConstraint) -> SparseEndo:
    return SparseEndo._trusted(c, {})


def identity_endo(c: PartitionConstraint) -> SparseEndo:
    return SparseEndo._trusted(c, {(v, v): 1 for v in box_basis(c)})


def matrix_unit(lam: Partition, mu: Partition, c: PartitionConstraint) -> SparseEndo:
    """E^λ_μ, sending v_λ to v_μ and every other basis vector to zero."""
    lam, mu = c.check(lam), c.check(mu)
    return SparseEndo._trusted(c, {(mu, lam): 1})


def compose(b: SparseEndo, c: SparseEndo) -> SparseEndo:
    """The endomorphism ``b ∘ c`` (apply ``c`` first)."""
    b._same_space(c)
    by_row: dict[Partition, list[tuple[Partition, int]]] = {}
    for (mid, col), coeff in c._entries.items():
        by_row.setdefault(mid, []).append((col, coeff))
    out: dict[Key, int] = {}
    for (row, mid), left in b._entries.items():
        for col, right in by_row.get(mid, ()):
            key = (row, col)
            out[key] = out.get(key, 0) + left * right
    return SparseEndo._trusted(b.constraint, {k: v for k, v in out.items() if v})


def apply_value_permutation_to_endo(sigma: ValuePermutation, b: SparseEndo) -> SparseEndo:
    """Conjugate ``b`` by σ: entry (σ·row, σ·col) of the result is entry (row, col) of ``b``."""
    if sigma.n != b.constraint.n:
        raise ValueError(f"permutation acts on 1..{sigma.n} but endomorphism has n={b.constraint.n}")
    return SparseEndo._trusted(
        b.constraint,
        {(value_act(sigma, row), value_act(sigma, col)): v for (row, col), v in b._entries.items()},
    )


def random_endo(c: PartitionConstraint, rng: random.Random, density: float = 0.2, bound: int = 3) -> SparseEndo:
    """Random sparse endomorphism with coefficients in ``-bound..bound``."""
    basis = box_basis(c).vectors
    entries = {}
    for row in basis:
        for col in basis:
            if rng.random() < density:
                entries[(row, col)] = rng.randint(-bound, bound)
    return SparseEndo(c, entries)
