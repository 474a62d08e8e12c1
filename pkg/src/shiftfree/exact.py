"""Exact N values via minimum hitting set over the translate family.

A subset B avoids every translate of S iff its complement meets every
translate, so the largest avoiding set is |G| minus the minimum hitting set
of the family {g + S : g in T} with T a stabilizer transversal (translates
repeat inside a stabilizer coset, so the transversal family is the whole
family).  N is then |G| - tau + 1.

The solver is a sequential branch and bound: greedy incumbent first, then
depth-first branching on an uncovered set with the fewest remaining candidate
elements, elements in ascending flat order, with the admissible bound
ceil(uncovered / max_sets_per_element).  Every element of G lies in exactly
|S|/|H| family sets, which makes that bound exact to compute.

naive_exact is the independent oracle: it enumerates all 2^|G| subsets and
checks all |G| translates with plain set arithmetic, no transversal, no
bitsets, no duality.  It exists to disagree with exact_N if either is wrong.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import BudgetExceededError, EmptySetError
from .groups import GroupLike, GroupSubset, quotient_view, stabilizer

__all__ = [
    "TranslateFamily",
    "translate_family",
    "min_hitting_set",
    "ExactResult",
    "exact_N",
    "naive_exact",
]

DEFAULT_MAX_ORDER = 40
DEFAULT_BUDGET_MS = 10_000
NAIVE_MAX_ORDER = 16


@dataclass(frozen=True)
class TranslateFamily:
    """The distinct translates of one pattern, indexed by transversal order."""

    universe_size: int
    sets: tuple[GroupSubset, ...]
    set_size: int

    @property
    def group(self) -> GroupLike:
        return self.sets[0].group

    @property
    def sets_per_element(self) -> int:
        """How many family sets contain any fixed element: |S|/|H|, exactly."""
        return self.set_size * len(self.sets) // self.universe_size


def translate_family(pattern: GroupSubset) -> TranslateFamily:
    """Family of all distinct translates, one per stabilizer-transversal element."""
    if pattern.bits == 0:
        raise EmptySetError("translate family needs a nonempty pattern")
    grp = pattern.group
    view = quotient_view(grp, stabilizer(pattern))
    sets = tuple(pattern.translate(t) for t in view.representatives)
    return TranslateFamily(universe_size=grp.size, sets=sets, set_size=pattern.size)


def min_hitting_set(family: TranslateFamily, *, deadline: float | None = None) -> tuple[int, GroupSubset]:
    """Minimum-size subset of the universe meeting every family set."""
    size, bits, _ = _solve_hitting_set(family, deadline)
    return size, GroupSubset(family.group, bits)


def _solve_hitting_set(family: TranslateFamily, deadline: float | None) -> tuple[int, int, int]:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceededError("hitting-set search exceeded its wall-clock budget")
    u = family.universe_size
    set_bits = [s.bits for s in family.sets]
    n_sets = len(set_bits)
    all_covered = (1 << n_sets) - 1

    elem_sets = [0] * u
    for j, sb in enumerate(set_bits):
        b = sb
        while b:
            low = b & -b
            elem_sets[low.bit_length() - 1] |= 1 << j
            b ^= low
    # Admissible pruning cap: no element hits more sets than this.  On a
    # translate family the regularity invariant makes it exactly |S|/|H|.
    per_elem = max(1, max(es.bit_count() for es in elem_sets))

    # Greedy incumbent: repeatedly take the element covering the most
    # still-uncovered sets, smallest flat index on ties.
    best_bits = 0
    best_size = 0
    uncovered = all_covered
    while uncovered:
        pick, gain = -1, -1
        for e in range(u):
            c = (elem_sets[e] & uncovered).bit_count()
            if c > gain:
                pick, gain = e, c
        best_bits |= 1 << pick
        best_size += 1
        uncovered &= ~elem_sets[pick]

    nodes = 0
    full_universe = (1 << u) - 1

    def dfs(chosen_bits: int, count: int, covered: int, banned: int) -> None:
        nonlocal best_bits, best_size, nodes
        nodes += 1
        if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
            raise BudgetExceededError("hitting-set search exceeded its wall-clock budget")
        if covered == all_covered:
            if count < best_size:
                best_size, best_bits = count, chosen_bits
            return
        uncov_count = (all_covered ^ covered).bit_count()
        if count + -(-uncov_count // per_elem) >= best_size:
            return
        # Branch on the uncovered set with the fewest surviving candidates.
        avail = full_universe & ~banned
        branch_j, branch_cands, branch_count = -1, 0, u + 1
        rem = all_covered ^ covered
        while rem:
            low = rem & -rem
            j = low.bit_length() - 1
            cands = set_bits[j] & avail
            c = cands.bit_count()
            if c < branch_count:
                branch_j, branch_cands, branch_count = j, cands, c
                if c == 0:
                    break
            rem ^= low
        if branch_count == 0:
            return
        b = branch_cands
        local_ban = banned
        while b:
            low = b & -b
            e = low.bit_length() - 1
            dfs(chosen_bits | low, count + 1, covered | elem_sets[e], local_ban)
            local_ban |= low
            b ^= low

    dfs(0, 0, 0, 0)
    return best_size, best_bits, nodes


@dataclass(frozen=True)
class ExactResult:
    """Exact N with both certificates: a maximum avoider and its dual hitting set."""

    n_value: int
    max_avoider: GroupSubset
    min_hitting_set: GroupSubset
    optimal: bool
    nodes: int


def exact_N(
    pattern: GroupSubset,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    budget_ms: int | None = DEFAULT_BUDGET_MS,
) -> ExactResult:
    """Exact threshold N for the pattern, or BudgetExceededError; never partial."""
    if pattern.bits == 0:
        raise EmptySetError("exact solve needs a nonempty pattern")
    g = pattern.group.size
    if g > max_order:
        raise BudgetExceededError(f"group order {g} exceeds the exact-solver cap {max_order}")
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
    family = translate_family(pattern)
    tau, witness_bits, nodes = _solve_hitting_set(family, deadline)
    witness = GroupSubset(pattern.group, witness_bits)
    return ExactResult(
        n_value=g - tau + 1,
        max_avoider=witness.complement(),
        min_hitting_set=witness,
        optimal=True,
        nodes=nodes,
    )


def naive_exact(pattern: GroupSubset) -> int:
    """Brute-force N: try all subsets against all |G| translates, sets only."""
    if pattern.bits == 0:
        raise EmptySetError("exact solve needs a nonempty pattern")
    grp = pattern.group
    g = grp.size
    if g > NAIVE_MAX_ORDER:
        raise BudgetExceededError(f"naive oracle capped at order {NAIVE_MAX_ORDER}, got {g}")
    members = pattern.indices()
    translates = [frozenset(grp.add(t, x) for x in members) for t in range(g)]
    # Any set smaller than the pattern avoids vacuously.
    best = len(members) - 1
    for mask in range(1 << g):
        if mask.bit_count() <= best:
            continue
        subset = {i for i in range(g) if (mask >> i) & 1}
        if not any(tr <= subset for tr in translates):
            best = len(subset)
    return best + 1
