"""Dimension of End_{S_n}(V^{⊠k}) by three routes.

* orbit counting on pairs of basis indices (valid for every n),
* counting ◊-classes of set-partition diagrams (for 2k <= n),
* a closed sum over pairs of partitions of k and partial matchings
  between their distinct parts (for 2k <= n).

The closed sum credits each matching edge with min(m_a(λ), m_b(μ)).  That
reproduces 2, 9, 29, 94, 275, 768, 2055 but undercounts the ◊-classes from
k = 3 on (29 against 31): a part value occurring several times in λ can be
joined to parts of different sizes in μ simultaneously, which a matching
on distinct values cannot express.  :func:`dimension_crosscheck` reports
such a disagreement instead of hiding it.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .centralizer import centralizer_dimension_by_orbits
from .diagrams import enumerate_diagram_classes
from .partitions import Partition, PartitionConstraint, enumerate_partitions_of, multiplicities


@dataclass(frozen=True)
class PartialMatching:
    left: frozenset[int]
    right: frozenset[int]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        lefts = [a for a, _ in self.edges]
        rights = [b for _, b in self.edges]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError(f"edges {self.edges} share an endpoint")
        if not set(lefts) <= self.left or not set(rights) <= self.right:
            raise ValueError(f"edges {self.edges} leave the vertex sets")


def distinct_parts(lam: Iterable[int]) -> frozenset[int]:
    return frozenset(lam)


def enumerate_matchings(left: Iterable[int], right: Iterable[int]) -> list[PartialMatching]:
    """All partial matchings between ``left`` and ``right``, the empty one first.

    Left values are visited in increasing order; each is either skipped or
    matched to a still-free right value.
    """
    lefts, rights = sorted(set(left)), sorted(set(right))
    lset, rset = frozenset(lefts), frozenset(rights)

    def rec(i: int, free: tuple[int, ...], acc: tuple[tuple[int, int], ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if i == len(lefts):
            yield acc
            return
        yield from rec(i + 1, free, acc)
        for j, b in enumerate(free):
            yield from rec(i + 1, free[:j] + free[j + 1:], acc + ((lefts[i], b),))

    return [PartialMatching(lset, rset, edges) for edges in rec(0, tuple(rights), ())]


def formula_term(lam: Partition, mu: Partition) -> int:
    """Contribution of one (λ, μ) pair to the closed dimension sum."""
    ml, mm = multiplicities(lam), multiplicities(mu)
    total = 0
    for matching in enumerate_matchings(ml, mm):
        term = 1
        for a, b in matching.edges:
            term *= min(ml[a], mm[b])
        total += term
    return total


def dimension_formula(k: int) -> int:
    """Closed sum over λ, μ ⊢ k and partial matchings of distinct parts."""
    parts = enumerate_partitions_of(k)
    return sum(formula_term(lam, mu) for lam in parts for mu in parts)


def formula_census(k: int) -> dict[tuple[Partition, Partition], int]:
    parts = enumerate_partitions_of(k)
    return {(lam, mu): formula_term(lam, mu) for lam in parts for mu in parts}


@dataclass(frozen=True)
class CrosscheckReport:
    k: int
    n: int
    orbit: int | None
    diagram: int | None
    formula: int | None

    @property
    def stable(self) -> bool:
        return 2 * self.k <= self.n

    @property
    def agree(self) -> bool:
        values = {v for v in (self.orbit, self.diagram, self.formula) if v is not None}
        return len(values) <= 1

    def to_json(self) -> dict:
        return {
            "schema": "v1",
            "k": self.k,
            "n": self.n,
            "orbit": self.orbit,
            "diagram": self.diagram,
            "formula": self.formula,
            "agree": self.agree,
        }


METHODS = ("orbit", "diagram", "formula")


def dimension_crosscheck(k: int, n: int, methods: Iterable[str] = METHODS, threads: int = 1) -> CrosscheckReport:
    """Compute the requested dimensions; diagram and formula only when 2k <= n."""
    methods = set(methods)
    unknown = methods - set(METHODS)
    if unknown:
        raise ValueError(f"unknown method(s): {sorted(unknown)}")
    c = PartitionConstraint(k, n)
    stable = 2 * k <= n
    orbit = centralizer_dimension_by_orbits(c, threads) if "orbit" in methods else None
    diagram = len(enumerate_diagram_classes(k)) if stable and "diagram" in methods else None
    formula = dimension_formula(k) if stable and "formula" in methods else None
    return CrosscheckReport(k, n, orbit, diagram, formula)
