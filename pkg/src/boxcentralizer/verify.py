"""Runtime invariant checks at a chosen (k, n)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .boxspace import SparseEndo, box_basis, box_dimension
from .centralizer import (
    OrbitConstancyError,
    build_T_from_shape,
    is_centralized,
    orbit_basis,
    structure_constants,
)
from .diagrams import (
    SET_PARTITION_LIMIT,
    diagram_from_pair,
    enumerate_diagram_classes,
    enumerate_set_partitions,
    lozenge_canonical,
    phi,
)
from .partitions import PartitionConstraint


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, **self.detail}


def check_soundness(c: PartitionConstraint) -> CheckResult:
    failures = []
    for e in orbit_basis(c):
        result = is_centralized(e.T())
        if not result:
            failures.append(e.pair_class.to_json())
    return CheckResult("centralizer_soundness", not failures, {"classes": len(orbit_basis(c)), "failures": failures})


def check_completeness(c: PartitionConstraint, rng: random.Random, trials: int = 50) -> CheckResult:
    """Unequal coefficients inside one orbit must be rejected."""
    candidates = [e for e in orbit_basis(c) if len(e.T()) >= 2]
    accepted = 0
    done = 0
    for _ in range(trials if candidates else 0):
        support = sorted(rng.choice(candidates).T().entries)
        second = rng.choice(support)
        a =rng.choice([x for x in range(-5, 6) if x])
        b = rng.choice([x for x in range(-5, 6) if x and x != a])
        coeffs = {key: a for key in support}
        coeffs[second] = b
        done += 1
        if is_centralized(SparseEndo(c, coeffs)):
            accepted += 1
    return CheckResult("centralizer_completeness", accepted == 0, {"trials": done, "wrongly_accepted": accepted})


def check_support_partition(c: PartitionConstraint) -> CheckResult:
    seen: set = set()
    overlaps = 0
    for e in orbit_basis(c):
        support = e.T().support()
        overlaps += len(seen & support)
        seen |= support
    d = box_dimension(c)
    ok = overlaps == 0 and len(seen) == d * d and len(box_basis(c)) == d
    return CheckResult("support_partition", ok, {"covered": len(seen), "expected": d * d, "overlaps": overlaps})


def check_phi_bijection(c: PartitionConstraint, limit: int = SET_PARTITION_LIMIT) -> CheckResult:
    if 2 * c.k > c.n:
        return CheckResult("phi_bijection", True, {"applicable": False})
    targets = {e.pair_class for e in orbit_basis(c)}
    image: dict = {}
    consistent = True
    if c.k <= limit:
        source = "set_partitions"
        for s in enumerate_set_partitions(c.k, limit):
            cls = lozenge_canonical(s)
            shape = phi(s, c.n)
            if image.setdefault(cls, shape) != shape:
                consistent = False
    else:
        source = "class_representatives"
        for cls in enumerate_diagram_classes(c.k):
            image[cls] = phi(cls.representative(), c.n)
    injective = len(set(image.values())) == len(image)
    surjective = set(image.values()) == targets
    witnesses = all(phi(diagram_from_pair(*e.representative, c), c.n) == e.pair_class for e in orbit_basis(c))
    ok = consistent and injective and surjective and witnesses
    return CheckResult(
        "phi_bijection",
        ok,
        {
            "applicable": True,
            "source": source,
            "classes": len(image),
            "constant_on_classes": consistent,
            "injective": injective,
            "surjective": surjective,
            "inverse_construction": witnesses,
        },
    )


def check_closure(c: PartitionConstraint, rng: random.Random, samples: int = 20) -> CheckResult:
    basis = orbit_basis(c)
    errors = 0
    negative = 0
    for _ in range(samples):
        left, right = rng.choice(basis), rng.choice(basis)
        try:
            coeffs = structure_constants(left, right, c)
        except OrbitConstancyError:
            errors += 1
            continue
        negative += sum(1 for v in coeffs.values() if v < 0)
        expanded = SparseEndo(c)
        for shape, coeff in coeffs.items():
            expanded = expanded + coeff * build_T_from_shape(shape)
        if expanded != left.T() @ right.T():
            errors += 1
    return CheckResult("structure_closure", errors == 0 and negative == 0, {"samples": samples, "errors": errors, "negative": negative})


def run_invariant_suite(k: int, n: int, seed: int = 0, limit: int = SET_PARTITION_LIMIT) -> dict:
    c = PartitionConstraint(k, n)
    rng = random.Random(seed)
    checks = [
        check_soundness(c),
        check_completeness(c, rng),
        check_support_partition(c),
        check_phi_bijection(c, limit),
        check_closure(c, rng),
    ]
    return {
        "schema": "v1",
        "k": k,
        "n": n,
        "seed": seed,
        "checks": [chk.to_json() for chk in checks],
        "ok": all(chk.ok for chk in checks),
    }
