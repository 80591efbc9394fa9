"""Brute-force reference computations, written without the package's canonical forms."""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations
from math import factorial

import numpy as np
from sympy.utilities.iterables import multiset_partitions


def multisets(k: int, n: int) -> list[tuple[int, ...]]:
    return [tuple(sorted(c, reverse=True)) for c in combinations_with_replacement(range(1, n + 1), k)]


def relabel(perm: tuple[int, ...], lam: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted((perm[x - 1] for x in lam), reverse=True))


def pair_orbits(k: int, n: int) -> list[frozenset]:
    """Orbits of S_n on pairs of multisets, by applying every permutation."""
    basis = multisets(k, n)
    perms = list(permutations(range(1, n + 1)))
    seen: set = set()
    orbits = []
    for lam in basis:
        for mu in basis:
            if (lam, mu) in seen:
                continue
            orbit = frozenset((relabel(p, lam), relabel(p, mu)) for p in perms)
            seen |= orbit
            orbits.append(orbit)
    return orbits


def burnside_pair_orbit_count(k: int, n: int) -> int:
    """Orbit count on pairs = average over S_n of (fixed multisets)^2."""
    basis = multisets(k, n)
    total = 0
    for p in permutations(range(1, n + 1)):
        fixed = sum(1 for lam in basis if relabel(p, lam) == lam)
        total += fixed * fixed
    assert total % factorial(n) == 0
    return total // factorial(n)


def commutant_dimension(k: int, n: int) -> int:
    """Dimension of {B : P_s B = B P_s for adjacent transpositions s}, by matrix rank."""
    basis = multisets(k, n)
    index = {v: i for i, v in enumerate(basis)}
    d = len(basis)
    rows = []
    for i in range(1, n):
        perm = list(range(1, n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        p = np.zeros((d, d))
        for v in basis:
            p[index[relabel(tuple(perm), v)], index[v]] = 1
        # vec(P B - B P) = (I ⊗ P - P^T ⊗ I) vec(B)
        rows.append(np.kron(np.eye(d), p) - np.kron(p.T, np.eye(d)))
    if not rows:
        return d * d
    system = np.vstack(rows)
    gram = system.T @ system
    return d * d - int(np.linalg.matrix_rank(gram))


def set_partitions(k: int) -> list[frozenset]:
    """All set partitions of top vertices ('t', i) and bottom vertices ('b', i)."""
    vertices = [("t", i) for i in range(1, k + 1)] + [("b", i) for i in range(1, k + 1)]
    return [frozenset(frozenset(block) for block in p) for p in multiset_partitions(vertices)]


def lozenge_orbits(k: int) -> list[frozenset]:
    """Orbits of S_k x S_k relabelling top and bottom vertices independently."""
    perms = list(permutations(range(1, k + 1)))
    seen: set = set()
    orbits = []
    for sp in set_partitions(k):
        if sp in seen:
            continue
        orbit = frozenset(
            frozenset(frozenset((row, (a if row == "t" else b)[i - 1]) for row, i in block) for block in sp)
            for a in perms
            for b in perms
        )
        seen |= orbit
        orbits.append(orbit)
    return orbits


def dense_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    d = len(a)
    return [[sum(a[i][t] * b[t][j] for t in range(d)) for j in range(d)] for i in range(d)]
