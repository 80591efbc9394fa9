"""Orbit basis of the centralizer End_{S_n}(V^{⊠k}).

S_n acts on pairs of basis indices by relabelling values simultaneously in
both coordinates.  The orbit of a pair (λ, μ) is determined by its
``PairShape``: for every value v occurring in λ or μ, record
(multiplicity of v in λ, multiplicity of v in μ), and forget which v it was.
An endomorphism commutes with S_n exactly when its coefficients are constant
on these orbits, so the orbit sums T^λ_μ form a basis.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .boxspace import (
    Key,
    SparseEndo,
    ValuePermutation,
    adjacent_transpositions,
    box_basis,
    value_act,
)
from .partitions import Partition, PartitionConstraint, sort_to_partition


class OrbitConstancyError(RuntimeError):
    """An endomorphism expected to be S_n-invariant had unequal coefficients on one orbit."""


@dataclass(frozen=True, order=True)
class PairShape:
    """Canonical invariant of an S_n-orbit of partition pairs.

    ``shape`` is a multiset of (a, b) pairs stored in descending order; each
    pair counts one value's occurrences in the source and target partition.
    """

    shape: tuple[tuple[int, int], ...]
    k: int
    n: int

    def __post_init__(self) -> None:
        shape = tuple(sorted(((int(a), int(b)) for a, b in self.shape), reverse=True))
        object.__setattr__(self, "shape", shape)
        if any(a < 0 or b < 0 or (a, b) == (0, 0) for a, b in shape):
            raise ValueError(f"pairs must be nonnegative and not (0, 0): {shape}")
        if sum(a for a, _ in shape) != self.k or sum(b for _, b in shape) != self.k:
            raise ValueError(f"pair sums of {shape} do not both equal k={self.k}")
        if len(shape) > self.n:
            raise ValueError(f"{shape} uses {len(shape)} distinct values but n={self.n}")

    @property
    def constraint(self) -> PartitionConstraint:
        return PartitionConstraint(self.k, self.n)

    def to_json(self) -> list[list[int]]:
        return [[a, b] for a, b in self.shape]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]], n: int) -> PairShape:
        pairs = [tuple(p) for p in data]
        return cls(tuple(pairs), sum(a for a, _ in pairs), n)

    def is_diagonal(self) -> bool:
        return all(a == b for a, b in self.shape)


def canonical_pair_shape(lam: Partition, mu: Partition, c: PartitionConstraint) -> PairShape:
    lam, mu = c.check(lam), c.check(mu)
    return _shape_unchecked(lam, mu, c)


def _shape_unchecked(lam: Partition, mu: Partition, c: PartitionConstraint) -> PairShape:
    top, bottom = Counter(lam), Counter(mu)
    pairs = tuple((top[v], bottom[v]) for v in top.keys() | bottom.keys())
    return PairShape(pairs, c.k, c.n)


def orbit_pairs(shape: PairShape) -> Iterator[tuple[Partition, Partition]]:
    """Every pair (λ, μ) whose canonical shape is ``shape``, each exactly once.

    Distinct pair types receive disjoint sets of values; within one type the
    values are chosen as a combination, so no pair is produced twice.
    """
    types = sorted(Counter(shape.shape).items(), reverse=True)

    def assign(i: int, free: tuple[int, ...], top: list[int], bottom: list[int]):
        if i == len(types):
            yield sort_to_partition(top), sort_to_partition(bottom)
            return
        (a, b), count = types[i]
        for chosen in combinations(free, count):
            rest = tuple(v for v in free if v not in chosen)
            yield from assign(
                i + 1,
                rest,
                top + [v for v in chosen for _ in range(a)],
                bottom + [v for v in chosen for _ in range(b)],
            )

    yield from assign(0, tuple(range(1, shape.n + 1)), [], [])


def build_T_from_shape(shape: PairShape) -> SparseEndo:
    # T maps v_λ to v_μ, stored at (row=μ, col=λ)
    return SparseEndo._trusted(shape.constraint, {(mu, lam): 1 for lam, mu in orbit_pairs(shape)})


def build_T(lam: Partition, mu: Partition, c: PartitionConstraint) -> SparseEndo:
    """T^λ_μ: the sum of matrix units E^ν_γ over all (ν, γ) in the orbit of (λ, μ)."""
    return build_T_from_shape(canonical_pair_shape(lam, mu, c))


@dataclass(frozen=True)
class CentralizerCheck:
    ok: bool
    generator: ValuePermutation | None = None
    entry: Key | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_centralized(b: SparseEndo) -> CentralizerCheck:
    """Test whether ``b`` commutes with the value action of S_n.

    Only the adjacent transpositions are tried; they generate S_n.  Each σ
    permutes index pairs bijectively, so σ b σ⁻¹ = b iff every stored entry
    is carried to an equal entry.  On failure the witness is the generator
    and the (row, col) entry whose image disagrees.
    """
    entries = b.entries
    for sigma in adjacent_transpositions(b.constraint.n):
        for (row, col), coeff in entries.items():
            if b[(value_act(sigma, row), value_act(sigma, col))] != coeff:
                return CentralizerCheck(False, sigma, (row, col))
    return CentralizerCheck(True)


@dataclass(frozen=True)
class OrbitBasisElement:
    pair_class: PairShape
    representative: tuple[Partition, Partition]

    @property
    def lam(self) -> Partition:
        return self.representative[0]

    @property
    def mu(self) -> Partition:
        return self.representative[1]

    def T(self) -> SparseEndo:
        return build_T_from_shape(self.pair_class)

    def to_json(self) -> dict:
        return {
            "class": self.pair_class.to_json(),
            "representative": {"lambda": list(self.lam), "mu": list(self.mu)},
        }


def _first_representatives(c: PartitionConstraint, sources: list[Partition]) -> dict[PairShape, tuple[Partition, Partition]]:
    targets = box_basis(c).vectors
    reps: dict[PairShape, tuple[Partition, Partition]] = {}
    for lam in sources:
        for mu in targets:
            shape = _shape_unchecked(lam, mu, c)
            if shape not in reps:
                reps[shape] = (lam, mu)
    return reps


def _reps_chunk(args: tuple[PartitionConstraint, list[Partition]]):
    return _first_representatives(*args)


@lru_cache(maxsize=32)
def _orbit_basis_cached(c: PartitionConstraint) -> tuple[OrbitBasisElement, ...]:
    return _assemble(_first_representatives(c, list(box_basis(c).vectors)))


def _assemble(reps: Mapping[PairShape, tuple[Partition, Partition]]) -> tuple[OrbitBasisElement, ...]:
    return tuple(OrbitBasisElement(shape, reps[shape]) for shape in sorted(reps))


def orbit_basis(c: PartitionConstraint, threads: int = 1) -> list[OrbitBasisElement]:
    """One element per S_n-orbit on pairs of basis indices.

    Built by canonicalising every pair (λ, μ); the representative of each
    class is its least pair in (λ, μ) basis order.  Elements are sorted by
    their PairShape.  With ``threads > 1`` the scan over λ is split across
    worker processes and merged by taking the least representative.
    """
    if threads <= 1:
        return list(_orbit_basis_cached(c))
    sources = list(box_basis(c).vectors)
    size = -(-len(sources) // threads)
    chunks = [(c, sources[i:i + size]) for i in range(0, len(sources), size)]
    merged: dict[PairShape, tuple[Partition, Partition]] = {}
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_reps_chunk, chunks):
            for shape, rep in part.items():
                if shape not in merged or rep < merged[shape]:
                    merged[shape] = rep
    return list(_assemble(merged))


def centralizer_dimension_by_orbits(c: PartitionConstraint, threads: int = 1) -> int:
    return len(orbit_basis(c, threads))


def expand_in_orbit_basis(b: SparseEndo) -> dict[PairShape, int]:
    """Coefficients of ``b`` in the orbit basis.

    Every orbit touched by ``b`` is checked in full: all of its pairs must
    carry the same coefficient, otherwise ``b`` is not in the centralizer and
    OrbitConstancyError is raised.
    """
    c = b.constraint
    coeffs: dict[PairShape, int] = {}
    for (mu, lam), coeff in b.entries.items():
        shape = _shape_unchecked(lam, mu, c)
        if shape in coeffs:
            continue
        for other_lam, other_mu in orbit_pairs(shape):
            if b[(other_mu, other_lam)] != coeff:
                raise OrbitConstancyError(
                    f"class {shape.to_json()}: coefficient {coeff} at {tuple(lam)}->{tuple(mu)} "
                    f"but {b[(other_mu, other_lam)]} at {tuple(other_lam)}->{tuple(other_mu)}"
                )
        coeffs[shape] = coeff
    return dict(sorted(coeffs.items()))


def _as_shape(x: OrbitBasisElement | PairShape, c: PartitionConstraint) -> PairShape:
    shape = x.pair_class if isinstance(x, OrbitBasisElement) else x
    if shape.constraint != c:
        raise ValueError(f"class {shape.to_json()} belongs to k={shape.k}, n={shape.n}, not {c}")
    return shape


def structure_constants(
    left: OrbitBasisElement | PairShape,
    right: OrbitBasisElement | PairShape,
    c: PartitionConstraint,
) -> dict[PairShape, int]:
    """Expand T_left ∘ T_right in the orbit basis (``right`` is applied first)."""
    product = build_T_from_shape(_as_shape(left, c)) @ build_T_from_shape(_as_shape(right, c))
    return expand_in_orbit_basis(product)


def diagonal_classes(c: PartitionConstraint) -> list[PairShape]:
    """Classes whose T elements sum to the identity endomorphism."""
    return [e.pair_class for e in orbit_basis(c) if e.pair_class.is_diagonal()]
