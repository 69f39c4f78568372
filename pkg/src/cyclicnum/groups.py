"""Finite permutation groups from generators.

A FiniteGroup is the closure of a generating set of equal-degree
permutations.  Elements are kept in a canonical order (sorted by image
table) so group equality, subgroup identity, and conjugate-subgroup
deduplication are plain set comparisons.

Structural queries that touch many products (subgroup lattices,
normalizers, conjugate counting) run on a cached index multiplication
table once a group is small enough to afford one; everything else works
directly on the permutations.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import CapacityError
from .perm import Permutation, compose, identity, perm_order

DEFAULT_CLOSURE_CAP = 20000
DEFAULT_SUBGROUP_BOUND = 64

# Above this order, ops fall back to direct permutation arithmetic rather
# than paying |G|^2 compositions for an index table nobody asked for.
_TABLE_LIMIT = 512


class _IndexTable:
    """Multiplication/inverse tables over the canonical element order."""

    __slots__ = ("elems", "index", "mul", "inv", "e")

    def __init__(self, elements: Sequence[Permutation]):
        self.elems = list(elements)
        self.index = {g: i for i, g in enumerate(self.elems)}
        index = self.index
        n = len(self.elems)
        self.mul = [[index[compose(a, b)] for b in self.elems] for a in self.elems]
        self.e = index[identity(self.elems[0].degree)]
        e = self.e
        self.inv = [0] * n
        for i in range(n):
            row = self.mul[i]
            for j in range(n):
                if row[j] == e:
                    self.inv[i] = j
                    break

    def close(self, seed: Iterable[int]) -> frozenset[int]:
        """Subgroup of indices generated by the seed indices."""
        gens = list(seed)
        mul = self.mul
        els = {self.e, *gens}
        frontier = list(els)
        while frontier:
            fresh = []
            for a in frontier:
                row = mul[a]
                for g in gens:
                    c = row[g]
                    if c not in els:
                        els.add(c)
                        fresh.append(c)
            frontier = fresh
        return frozenset(els)

    def conjugate(self, idxs: Iterable[int], b: int) -> frozenset[int]:
        mul = self.mul
        ib = self.inv[b]
        return frozenset(mul[mul[ib][f]][b] for f in idxs)


class FiniteGroup:
    """A closed set of equal-degree permutations plus its generating set.

    Construct with closure(); the constructor itself trusts its inputs.
    Immutable once built (the index table cache is derived data only).
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Iterable[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._elem_set = frozenset(self.elements)
        self._table_cache: _IndexTable | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self._elem_set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteGroup)
            and self.degree == other.degree
            and self._elem_set == other._elem_set
        )

    def __hash__(self) -> int:
        return hash((self.degree, self._elem_set))

    def __repr__(self) -> str:
        return f"<FiniteGroup of order {len(self.elements)} on {self.degree} points>"

    def _table(self) -> _IndexTable:
        if self._table_cache is None:
            self._table_cache = _IndexTable(self.elements)
        return self._table_cache

    def _table_if_cheap(self) -> _IndexTable | None:
        if self._table_cache is None and len(self.elements) > _TABLE_LIMIT:
            return None
        return self._table()


class Subgroup:
    """A subset of a parent group's elements that is itself a group.

    The public constructor verifies closure; engine functions that produce
    sets already known to be groups use the trusted path internally.
    """

    def __init__(self, parent: FiniteGroup, elements: Iterable[Permutation]):
        elems = tuple(sorted(set(elements)))
        if not elems:
            raise ValueError("a subgroup cannot be empty")
        eset = frozenset(elems)
        if not eset <= parent._elem_set:
            raise ValueError("subgroup elements must belong to the parent group")
        for a in elems:
            for b in elems:
                if a * b not in eset:
                    raise ValueError("element set is not closed under composition")
        # Closed nonempty subset of a finite group: identity and inverses follow.
        self.parent = parent
        self.elements = elems
        self._elem_set = eset

    @classmethod
    def _trusted(cls, parent: FiniteGroup, elements: Iterable[Permutation]) -> "Subgroup":
        sub = object.__new__(cls)
        sub.parent = parent
        sub.elements = tuple(sorted(elements))
        sub._elem_set = frozenset(sub.elements)
        return sub

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self._elem_set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent == other.parent
            and self._elem_set == other._elem_set
        )

    def __hash__(self) -> int:
        return hash((self.parent.degree, self._elem_set))

    def __repr__(self) -> str:
        return f"<Subgroup of order {len(self.elements)} in group of order {len(self.parent)}>"


def _require_member(G: FiniteGroup, g: Permutation, name: str = "element") -> None:
    if g not in G._elem_set:
        raise ValueError(f"{name} is not a member of the group")


def _require_subgroup_of(G: FiniteGroup, F: Subgroup) -> None:
    if F.parent is not G and F.parent != G:
        raise ValueError("subgroup belongs to a different group")


def closure(generators: Iterable[Permutation], *, max_size: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """Smallest group containing the generators, by breadth-first products.

    Raises CapacityError once more than max_size elements appear, so
    runaway inputs fail cleanly instead of exhausting memory.
    """
    gens = tuple(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree mismatch: {g.degree} vs {degree}")
    els = {identity(degree), *gens}
    if len(els) > max_size:
        raise CapacityError(f"group closure exceeded the cap of {max_size} elements")
    frontier = list(els)
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c not in els:
                    els.add(c)
                    if len(els) > max_size:
                        raise CapacityError(
                            f"group closure exceeded the cap of {max_size} elements"
                        )
                    fresh.append(c)
        frontier = fresh
    return FiniteGroup(degree, gens, els)


def element_order(G: FiniteGroup, g: Permutation) -> int:
    _require_member(G, g)
    return perm_order(g)


def generated_subgroup(G: FiniteGroup, f: Permutation) -> Subgroup:
    """The cyclic subgroup of all powers of f."""
    _require_member(G, f)
    e = identity(G.degree)
    powers = [e]
    x = f
    while x != e:
        powers.append(x)
        x = x * f
    return Subgroup._trusted(G, powers)


def is_cyclic(G: FiniteGroup) -> Permutation | None:
    """A generator of G if G is cyclic (the canonically smallest one), else None."""
    n = len(G)
    for g in G.elements:
        if perm_order(g) == n:
            return g
    return None


def is_abelian(G: FiniteGroup) -> bool:
    # Pairwise commuting generators force the whole group to commute.
    gens = G.generators
    return all(a * b == b * a for a in gens for b in gens)


def left_cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[Permutation, ...]]:
    """The blocks x*H in order of first appearance; they partition G."""
    _require_subgroup_of(G, H)
    blocks = []
    covered: set[Permutation] = set()
    for x in G.elements:
        if x in covered:
            continue
        block = tuple(sorted(x * h for h in H.elements))
        covered.update(block)
        blocks.append(block)
    return blocks


def center(G: FiniteGroup) -> Subgroup:
    """Elements commuting with everything in G.

    Commuting with every generator is equivalent and much cheaper than a
    full pairwise scan.
    """
    gens = G.generators
    members = [a for a in G.elements if all(a * g == g * a for g in gens)]
    return Subgroup._trusted(G, members)


def subset_product(X: Subgroup | Iterable[Permutation], Y: Subgroup | Iterable[Permutation]) -> frozenset[Permutation]:
    """All products x*y with x in X and y in Y."""
    xs = tuple(X.elements if isinstance(X, Subgroup) else X)
    ys = tuple(Y.elements if isinstance(Y, Subgroup) else Y)
    return frozenset(x * y for x in xs for y in ys)


def conjugate_element(G: FiniteGroup, f: Permutation, b: Permutation) -> Permutation:
    _require_member(G, f, "f")
    _require_member(G, b, "b")
    return b.inverse() * f * b


def conjugacy_class(G: FiniteGroup, g: Permutation) -> frozenset[Permutation]:
    _require_member(G, g)
    return frozenset(b.inverse() * g * b for b in G.elements)


def conjugate_subgroup(G: FiniteGroup, F: Subgroup, b: Permutation) -> Subgroup:
    _require_subgroup_of(G, F)
    _require_member(G, b, "b")
    ib = b.inverse()
    return Subgroup._trusted(G, (ib * f * b for f in F.elements))


def normalizer(G: FiniteGroup, F: Subgroup) -> Subgroup:
    """Elements a with F*a = a*F; always a subgroup containing F."""
    _require_subgroup_of(G, F)
    table = G._table_if_cheap()
    if table is not None:
        mul = table.mul
        fidx = [table.index[f] for f in F.elements]
        keep = [
            table.elems[a]
            for a in range(len(table.elems))
            if {mul[f][a] for f in fidx} == {mul[a][f] for f in fidx}
        ]
        return Subgroup._trusted(G, keep)
    keep = [
        a
        for a in G.elements
        if {f * a for f in F.elements} == {a * f for f in F.elements}
    ]
    return Subgroup._trusted(G, keep)


def count_conjugate_subgroups(G: FiniteGroup, F: Subgroup) -> int:
    """Number of distinct b^-1*F*b over b in G (including F), by enumeration."""
    _require_subgroup_of(G, F)
    table = G._table_if_cheap()
    if table is not None:
        fidx = [table.index[f] for f in F.elements]
        return len({table.conjugate(fidx, b) for b in range(len(table.elems))})
    seen = set()
    for b in G.elements:
        ib = b.inverse()
        seen.add(frozenset(ib * f * b for f in F.elements))
    return len(seen)


def noncentral_union_size(G: FiniteGroup, F: Subgroup) -> int:
    """Count of non-central elements of G in the union of all conjugates of F."""
    _require_subgroup_of(G, F)
    central = center(G)._elem_set
    table = G._table_if_cheap()
    if table is not None:
        fidx = [table.index[f] for f in F.elements]
        union: set[int] = set()
        for b in range(len(table.elems)):
            union.update(table.conjugate(fidx, b))
        return len(union) - sum(1 for i in union if table.elems[i] in central)
    union_perms: set[Permutation] = set()
    for b in G.elements:
        ib = b.inverse()
        union_perms.update(ib * f * b for f in F.elements)
    return len(union_perms - central)


def minimal_power_in_subgroup(G: FiniteGroup, h: Permutation, F: Subgroup) -> int:
    """Least q >= 1 with h**q in F; exists because h**ord(h) is the identity."""
    _require_member(G, h, "h")
    _require_subgroup_of(G, F)
    q = 1
    x = h
    while x not in F._elem_set:
        x = x * h
        q += 1
    return q


def conjugate_only_to_powers(G: FiniteGroup, f: Permutation) -> bool:
    """True iff every conjugate of f is a power of f."""
    _require_member(G, f)
    powers = generated_subgroup(G, f)._elem_set
    return all(b.inverse() * f * b in powers for b in G.elements)


def all_subgroups(G: FiniteGroup, *, max_order: int = DEFAULT_SUBGROUP_BOUND) -> list[Subgroup]:
    """Every subgroup of G, for groups of order up to max_order.

    Seeds with the cyclic subgroups and saturates under pairwise join;
    every subgroup is a join of cyclic ones, so the sweep is exhaustive.
    Results are sorted by (order, element list).
    """
    if len(G) > max_order:
        raise CapacityError(
            f"subgroup enumeration is limited to groups of order {max_order}"
        )
    table = G._table()
    mul = table.mul
    e = table.e
    seeds: set[frozenset[int]] = set()
    for i in range(len(table.elems)):
        powers = {e}
        x = i
        while x != e:
            powers.add(x)
            x = mul[x][i]
        seeds.add(frozenset(powers))
    known = set(seeds)
    work = list(seeds)
    while work:
        a = work.pop()
        for b in list(known):
            if a <= b or b <= a:
                continue
            joined = table.close(a | b)
            if joined not in known:
                known.add(joined)
                work.append(joined)
    subs = [
        Subgroup._trusted(G, (table.elems[i] for i in idxs)) for idxs in known
    ]
    subs.sort(key=lambda H: (len(H), H.elements))
    return subs


def maximal_subgroups(G: FiniteGroup, *, max_order: int = DEFAULT_SUBGROUP_BOUND) -> list[Subgroup]:
    """Proper subgroups with more than one element, maximal by inclusion.

    Note the "more than one element" clause: a group of prime order has no
    maximal subgroups under this definition, since its only proper
    subgroup is trivial.
    """
    proper = [H for H in all_subgroups(G, max_order=max_order) if 1 < len(H) < len(G)]
    return [
        H
        for H in proper
        if not any(H._elem_set < K._elem_set for K in proper)
    ]
