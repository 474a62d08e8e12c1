"""Certified avoiding-set constructions and the seeded randomized search.

An avoiding set for a pattern S is a subset containing no translate g + S.
Everything returned here is a Certificate whose verified flag comes from an
actual verification pass over the stabilizer transversal, never from the
construction's own bookkeeping.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .bounds import ceil_root_power, thm2_lower
from .errors import DomainMismatchError, EmptySetError, SearchExhaustedError
from .groups import (
    GroupSubset,
    preimage_subset,
    project_subset,
    quotient_view,
    stabilizer,
)

__all__ = [
    "Certificate",
    "SearchConfig",
    "verify_avoids",
    "construct_thm1",
    "search_avoider",
    "construct_thm2",
]


@dataclass(frozen=True)
class Certificate:
    """Outcome of verifying a candidate avoiding set against a pattern.

    witness is the smallest transversal element g whose translate g + S lies
    inside the candidate, or None when no translate does; verified is true
    exactly when witness is None.
    """

    avoiding_set: GroupSubset
    pattern: GroupSubset
    verified: bool
    witness: Optional[int]

    def __post_init__(self):
        if self.verified != (self.witness is None):
            raise ValueError("certificate verified flag contradicts its witness")

    @property
    def size(self) -> int:
        return self.avoiding_set.size


@dataclass(frozen=True)
class SearchConfig:
    """Budgets for the randomized avoider search; seed makes runs reproducible."""

    seed: int = 0
    max_random_restarts: int = 64
    max_repair_steps: int = 2000
    exact_fallback_limit: int = 64

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")
        for name in ("max_random_restarts", "max_repair_steps", "exact_fallback_limit"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


def verify_avoids(candidate: GroupSubset, pattern: GroupSubset) -> Certificate:
    """Check that no translate of pattern lies inside candidate.

    Translates are enumerated over a transversal of the pattern's stabilizer
    only: translating by a stabilizer element reproduces the same set, so the
    transversal covers every distinct translate.
    """
    if candidate.group != pattern.group:
        raise DomainMismatchError("candidate and pattern live in different groups")
    if pattern.bits == 0:
        raise EmptySetError("cannot verify against an empty pattern")
    grp = pattern.group
    view = quotient_view(grp, stabilizer(pattern))
    cand = candidate.bits
    for g in view.representatives:
        if pattern.translate(g).bits & ~cand == 0:
            return Certificate(candidate, pattern, verified=False, witness=g)
    return Certificate(candidate, pattern, verified=True, witness=None)


def construct_thm1(pattern: GroupSubset) -> Certificate:
    """Avoiding set of size g - g/h: drop the max flat index of every H-coset.

    Every translate of the pattern is a union of stabilizer cosets, and every
    coset here misses one element, so no translate fits.
    """
    if pattern.bits == 0:
        raise EmptySetError("construction needs a nonempty pattern")
    grp = pattern.group
    view = quotient_view(grp, stabilizer(pattern))
    bits = (1 << grp.size) - 1
    for cls in range(view.size):
        bits ^= 1 << max(view.class_members(cls))
    cert = verify_avoids(GroupSubset(grp, bits), pattern)
    if not cert.verified:
        raise AssertionError("punctured-coset set failed verification; this is a bug")
    return cert


def search_avoider(pattern: GroupSubset, target_size: int, config: SearchConfig) -> Certificate:
    """Find a verified avoiding set of exactly target_size elements.

    Requires the pattern's stabilizer to be trivial (callers hand in quotient
    data, where that always holds).  Strategy: uniform random subsets, then
    local repair of the last sample, then exhaustive depth-first search when
    the group is small enough; raises SearchExhaustedError otherwise.  The
    whole schedule is a pure function of config.seed.
    """
    if pattern.bits == 0:
        raise EmptySetError("search needs a nonempty pattern")
    grp = pattern.group
    g = grp.size
    if stabilizer(pattern).order != 1:
        raise ValueError("search_avoider requires a trivial stabilizer; pass quotient data")
    if not 0 <= target_size <= g:
        raise ValueError(f"target size must lie in [0, {g}], got {target_size}")

    masks = [pattern.translate(t).bits for t in range(g)]
    full = (1 << g) - 1

    def violation(bits: int) -> int:
        """Smallest translate index whose translate is inside bits, else -1."""
        for t in range(g):
            if masks[t] & ~bits == 0:
                return t
        return -1

    found = -1
    if target_size == 0:
        found = 0
    else:
        rng = random.Random(config.seed)
        sample = 0
        for _ in range(config.max_random_restarts):
            sample = 0
            for e in rng.sample(range(g), target_size):
                sample |= 1 << e
            if violation(sample) < 0:
                found = sample
                break
        if found < 0:
            bits = sample
            for _ in range(config.max_repair_steps):
                t = violation(bits)
                if t < 0:
                    found = bits
                    break
                outside = GroupSubset(grp, full ^ bits).indices()
                if not outside:
                    break  # target_size == |G|: no room to repair
                inside = GroupSubset(grp, masks[t]).indices()
                bits ^= 1 << rng.choice(inside)
                bits |= 1 << rng.choice(outside)
        if found < 0 and g <= config.exact_fallback_limit:
            found = _exhaustive_avoider(g, masks, pattern.size, target_size)
        if found < 0:
            raise SearchExhaustedError(
                f"no avoiding set of size {target_size} found within budgets"
            )

    cert = verify_avoids(GroupSubset(grp, found), pattern)
    if not cert.verified:
        raise AssertionError("search produced an unverified set; this is a bug")
    return cert


def _exhaustive_avoider(g: int, masks: list[int], set_size: int, target: int) -> int:
    """Lexicographically first avoiding subset of the given size, or -1.

    Depth-first over elements in ascending order, counting per-translate hits;
    a branch dies as soon as some translate has every element chosen.
    """
    elem_sets = [[] for _ in range(g)]
    for j, m in enumerate(masks):
        b = m
        while b:
            low = b & -b
            elem_sets[low.bit_length() - 1].append(j)
            b ^= low
    counts = [0] * len(masks)
    chosen: list[int] = []

    def dfs(start: int, need: int) -> int:
        if need == 0:
            out = 0
            for e in chosen:
                out |= 1 << e
            return out
        for e in range(start, g - need + 1):
            filled = False
            for j in elem_sets[e]:
                counts[j] += 1
                if counts[j] == set_size:
                    filled = True
            if not filled:
                chosen.append(e)
                result = dfs(e + 1, need - 1)
                if result >= 0:
                    return result
                chosen.pop()
            for j in elem_sets[e]:
                counts[j] -= 1
        return -1

    return dfs(0, target)


def construct_thm2(pattern: GroupSubset, config: SearchConfig) -> Certificate:
    """Avoiding set of size thm2_lower - 1 built from a quotient avoider.

    With H the pattern's stabilizer, search the quotient G/H for a set of
    classes avoiding the projected pattern, take its full preimage, and adjoin
    every other coset minus its maximum flat index.  A translate of the
    pattern is a union of H-cosets; its class set is a quotient translate, so
    it meets a punctured coset and cannot fit.
    """
    if pattern.bits == 0:
        raise EmptySetError("construction needs a nonempty pattern")
    grp = pattern.group
    sub = stabilizer(pattern)
    view = quotient_view(grp, sub)
    projected = project_subset(pattern, view)
    target = ceil_root_power(view.size, projected.size - 1, projected.size) - 1

    inner = search_avoider(projected, target, config)
    bits = preimage_subset(inner.avoiding_set, view).bits
    chosen_classes = inner.avoiding_set.bits
    for cls in range(view.size):
        if not (chosen_classes >> cls) & 1:
            members = view.class_members(cls)
            top = max(members)
            for a in members:
                if a != top:
                    bits |= 1 << a
    candidate = GroupSubset(grp, bits)

    expected = thm2_lower(grp.size, sub.order, pattern.size) - 1
    if candidate.size != expected:
        raise AssertionError(
            f"construction size {candidate.size} != thm2_lower - 1 = {expected}; this is a bug"
        )
    cert = verify_avoids(candidate, pattern)
    if not cert.verified:
        raise AssertionError("quotient construction failed verification; this is a bug")
    return cert
