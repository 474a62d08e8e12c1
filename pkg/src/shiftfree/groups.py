"""Finite abelian groups, bitset subsets, stabilizers, transversals, quotients.

A group is a direct product of cyclic factors Z_m1 x ... x Z_mk.  Elements are
flat indices in [0, m1*...*mk) under the little-endian mixed-radix encoding:
coordinate i has stride m1*...*m_{i-1}, so flat = c0 + m1*(c1 + m2*(c2 + ...)).
The flat index is the canonical identity of an element; coordinate tuples are a
view.  Subsets are arbitrary-precision ints used as bitsets, bit i = element i,
which keeps translate/compare/intersect at machine speed for the sizes the
exact solver can reach.

Quotients are never re-decomposed into cyclic invariant factors.  A Quotient
is the list of coset-class indices in transversal order together with the
projection map, and its group law is representative-sum-then-project.  Both
Group and Quotient expose the same size/add/neg interface, so every operation
downstream (stabilizer, transversal, search, verification) runs unchanged on
quotient data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    DomainMismatchError,
    EmptySetError,
    InvalidGroupError,
    NotCosetUnionError,
)

__all__ = [
    "Group",
    "Quotient",
    "GroupLike",
    "GroupSubset",
    "Subgroup",
    "make_group",
    "stabilizer",
    "transversal",
    "quotient_view",
    "project_subset",
    "preimage_subset",
    "subgroup_generated",
]


class Group:
    """Direct product of cyclic groups, elements addressed by flat index."""

    __slots__ = ("orders", "size", "strides")

    def __init__(self, orders: Sequence[int]):
        orders = tuple(int(m) for m in orders)
        if not orders:
            raise InvalidGroupError("group needs at least one cyclic factor")
        if any(m < 1 for m in orders):
            raise InvalidGroupError(f"cyclic factor orders must be >= 1, got {orders}")
        strides = []
        size = 1
        for m in orders:
            strides.append(size)
            size *= m
        self.orders = orders
        self.size = size
        self.strides = tuple(strides)

    # -- element arithmetic over flat indices --------------------------------

    zero = 0

    def check_element(self, a: int) -> int:
        if not 0 <= a < self.size:
            raise DomainMismatchError(f"flat index {a} outside group of order {self.size}")
        return a

    def add(self, a: int, b: int) -> int:
        self.check_element(a)
        self.check_element(b)
        if len(self.orders) == 1:
            return (a + b) % self.size
        out = 0
        for m, stride in zip(self.orders, self.strides):
            out += (((a // stride) + (b // stride)) % m) * stride
        return out

    def neg(self, a: int) -> int:
        self.check_element(a)
        if len(self.orders) == 1:
            return (-a) % self.size
        out = 0
        for m, stride in zip(self.orders, self.strides):
            out += ((m - (a // stride) % m) % m) * stride
        return out

    def coords(self, a: int) -> tuple[int, ...]:
        self.check_element(a)
        cs = []
        for m in self.orders:
            a, c = divmod(a, m)
            cs.append(c)
        return tuple(cs)

    def flat_index(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.orders):
            raise DomainMismatchError(
                f"coordinate tuple {tuple(coords)} does not match factors {self.orders}"
            )
        out = 0
        for c, m, stride in zip(coords, self.orders, self.strides):
            if not 0 <= c < m:
                raise DomainMismatchError(f"coordinate {c} outside Z_{m}")
            out += c * stride
        return out

    def elements(self) -> range:
        return range(self.size)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self.orders == other.orders

    def __hash__(self) -> int:
        return hash(("Group", self.orders))

    def __repr__(self) -> str:
        return f"Group(orders={list(self.orders)})"


def make_group(orders: Sequence[int]) -> Group:
    """Build the direct product of the given cyclic orders."""
    return Group(orders)


class Quotient:
    """Coset classes of base/modulus with the representative-sum group law.

    Class indices follow transversal order: class i is the coset whose minimum
    flat index is representatives[i], and representatives are sorted ascending.
    add/neg lift class representatives to the base group, operate there, and
    project back, so no cyclic-factor presentation of the quotient is needed.
    """

    __slots__ = ("base", "modulus", "projection", "representatives", "size")

    def __init__(self, base: GroupLike, modulus: "Subgroup"):
        if modulus.group != base:
            raise DomainMismatchError("modulus subgroup does not live in the base group")
        projection = [-1] * base.size
        reps = []
        hbits = modulus.bits
        for a in range(base.size):
            if projection[a] >= 0:
                continue
            cls = len(reps)
            reps.append(a)
            h = hbits
            while h:
                low = h & -h
                projection[base.add(a, low.bit_length() - 1)] = cls
                h ^= low
        self.base = base
        self.modulus = modulus
        self.projection = tuple(projection)
        self.representatives = tuple(reps)
        self.size = len(reps)

    zero = 0

    def check_element(self, a: int) -> int:
        if not 0 <= a < self.size:
            raise DomainMismatchError(f"class index {a} outside quotient of order {self.size}")
        return a

    def add(self, a: int, b: int) -> int:
        reps = self.representatives
        return self.projection[self.base.add(reps[self.check_element(a)], reps[self.check_element(b)])]

    def neg(self, a: int) -> int:
        return self.projection[self.base.neg(self.representatives[self.check_element(a)])]

    def project(self, a: int) -> int:
        """Class index of a base-group element."""
        self.base.check_element(a)
        return self.projection[a]

    def class_members(self, cls: int) -> list[int]:
        """Flat indices of the base-group coset with class index cls."""
        self.check_element(cls)
        return [a for a in range(self.base.size) if self.projection[a] == cls]

    def elements(self) -> range:
        return range(self.size)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Quotient)
            and self.base == other.base
            and self.modulus.bits == other.modulus.bits
        )

    def __hash__(self) -> int:
        return hash(("Quotient", self.base, self.modulus.bits))

    def __repr__(self) -> str:
        return f"Quotient(base={self.base!r}, classes={self.size})"


GroupLike = Union[Group, Quotient]


@dataclass(frozen=True)
class GroupSubset:
    """Subset of a group's elements stored as a bitset over flat indices."""

    group: GroupLike
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.group.size):
            raise DomainMismatchError("bitset has bits outside the group's index range")

    @classmethod
    def from_indices(cls, group: GroupLike, indices: Iterable[int]) -> "GroupSubset":
        bits = 0
        for a in indices:
            group.check_element(a)
            bits |= 1 << a
        return cls(group, bits)

    @classmethod
    def empty(cls, group: GroupLike) -> "GroupSubset":
        return cls(group, 0)

    @classmethod
    def full(cls, group: GroupLike) -> "GroupSubset":
        return cls(group, (1 << group.size) - 1)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, a: int) -> bool:
        return 0 <= a < self.group.size and (self.bits >> a) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def indices(self) -> list[int]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def translate(self, g: int) -> "GroupSubset":
        """The set g + S."""
        grp = self.group
        grp.check_element(g)
        add = grp.add
        out = 0
        b = self.bits
        while b:
            low = b & -b
            out |= 1 << add(g, low.bit_length() - 1)
            b ^= low
        return GroupSubset(grp, out)

    def complement(self) -> "GroupSubset":
        return GroupSubset(self.group, self.bits ^ ((1 << self.group.size) - 1))

    def union(self, other: "GroupSubset") -> "GroupSubset":
        if other.group != self.group:
            raise DomainMismatchError("subsets live in different groups")
        return GroupSubset(self.group, self.bits | other.bits)

    def is_subset_of(self, other: "GroupSubset") -> bool:
        if other.group != self.group:
            raise DomainMismatchError("subsets live in different groups")
        return self.bits & ~other.bits == 0

    def __repr__(self) -> str:
        return f"GroupSubset({self.group!r}, {{{', '.join(map(str, self.indices()))}}})"


@dataclass(frozen=True, repr=False)
class Subgroup(GroupSubset):
    """A GroupSubset that is a subgroup: contains 0, closed under add and neg.

    Constructors in this module only ever build closed sets; validate() runs
    the exhaustive closure check and is what tests call.
    """

    def __post_init__(self):
        super().__post_init__()
        if self.bits & 1 == 0:
            raise InvalidGroupError("subgroup must contain the zero element")
        if self.group.size % self.size != 0:
            raise InvalidGroupError("subgroup order must divide the group order")

    @property
    def order(self) -> int:
        return self.size

    def validate(self) -> "Subgroup":
        """Exhaustive closure check; raises InvalidGroupError on failure."""
        grp = self.group
        members = self.indices()
        for a in members:
            if grp.neg(a) not in self:
                raise InvalidGroupError(f"subgroup not closed under negation at {a}")
            for b in members:
                if grp.add(a, b) not in self:
                    raise InvalidGroupError(f"subgroup not closed under addition at {a}+{b}")
        return self

    def __repr__(self) -> str:
        return f"Subgroup({self.group!r}, {{{', '.join(map(str, self.indices()))}}})"


@lru_cache(maxsize=512)
def stabilizer(subset: GroupSubset) -> Subgroup:
    """The subgroup H = {h : h + S = S} of translations fixing S.

    Computed as the intersection of the difference sets S - x over x in S:
    h + S = S holds iff h + x lands in S for every x (the two sides have equal
    size, so containment suffices).  The loop exits once the mask is the
    trivial subgroup since it can only shrink.
    """
    if subset.bits == 0:
        raise EmptySetError("stabilizer of the empty set is not defined here")
    grp = subset.group
    neg = grp.neg
    mask = (1 << grp.size) - 1
    b = subset.bits
    while b:
        low = b & -b
        x = low.bit_length() - 1
        mask &= subset.translate(neg(x)).bits
        if mask == 1:
            break
        b ^= low
    return Subgroup(grp, mask)


@lru_cache(maxsize=512)
def quotient_view(group: GroupLike, modulus: Subgroup) -> Quotient:
    """Coset classes of group/modulus with projection and transversal maps."""
    return Quotient(group, modulus)


def transversal(group: GroupLike, modulus: Subgroup) -> tuple[int, ...]:
    """One representative per modulus-coset: the minimum flat index, ascending."""
    return quotient_view(group, modulus).representatives


def project_subset(subset: GroupSubset, view: Quotient) -> GroupSubset:
    """Image of a union of modulus-cosets as a subset of the quotient classes."""
    if subset.group != view.base:
        raise DomainMismatchError("subset does not live in the quotient's base group")
    classes = 0
    b = subset.bits
    while b:
        low = b & -b
        classes |= 1 << view.projection[low.bit_length() - 1]
        b ^= low
    if preimage_subset(GroupSubset(view, classes), view).bits != subset.bits:
        raise NotCosetUnionError("subset is not a union of cosets of the modulus")
    return GroupSubset(view, classes)


def preimage_subset(class_subset: GroupSubset, view: Quotient) -> GroupSubset:
    """Union of the base-group cosets whose class indices are in class_subset."""
    if class_subset.group != view:
        raise DomainMismatchError("class subset does not live in the given quotient")
    bits = 0
    cbits = class_subset.bits
    for a, cls in enumerate(view.projection):
        if (cbits >> cls) & 1:
            bits |= 1 << a
    return GroupSubset(view.base, bits)


def subgroup_generated(group: GroupLike, generators: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the generators, by closure iteration."""
    bits = 1  # the zero element
    frontier = [0]
    gens = []
    for g in generators:
        group.check_element(g)
        gens.append(g)
    add = group.add
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = add(a, g)
            if not (bits >> b) & 1:
                bits |= 1 << b
                frontier.append(b)
    return Subgroup(group, bits)
