"""Exhaustive enumeration of group multiplication tables.

This is the independent cross-check for the rest of the package: it never
touches permutations or number theory while searching.  Tables are n x n
grids over {0..n-1} with 0 as the identity; the search fixes row 0 and
column 0, keeps rows and columns Latin with bitmasks, and rejects an
entry as soon as it completes any non-associative triple.  Completed
tables are deduplicated up to relabeling by a canonical form (the
lexicographically least identity-fixing relabeling).

Orders up to 8 finish quickly; the cap exists because the relabeling
space grows factorially.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import permutations

from .errors import CapacityError
from .groups import FiniteGroup
from .numtheory import is_cyclic_number
from .perm import Permutation

DEFAULT_ORDER_CAP = 8
HARD_ORDER_CAP = 10

Table = tuple[tuple[int, ...], ...]


def _rows(t: "CayleyTable | Table") -> Table:
    if isinstance(t, CayleyTable):
        return t.table
    return tuple(tuple(row) for row in t)


def validate_table(table: Table) -> None:
    """Raise ValueError unless the table is a group table with identity 0."""
    n = len(table)
    if n == 0:
        raise ValueError("a table needs at least the identity element")
    full = frozenset(range(n))
    for i, row in enumerate(table):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        if frozenset(row) != full:
            raise ValueError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if frozenset(row[j] for row in table) != full:
            raise ValueError(f"column {j} is not a permutation of 0..{n - 1}")
    if any(table[0][j] != j for j in range(n)) or any(table[i][0] != i for i in range(n)):
        raise ValueError("element 0 must act as a two-sided identity")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            row_a = table[a]
            for c in range(n):
                if table[ab][c] != row_a[table[b][c]]:
                    raise ValueError(f"associativity fails on the triple ({a}, {b}, {c})")
    for a in range(n):
        b = table[a].index(0)
        if table[b][a] != 0:
            raise ValueError(f"element {a} has no two-sided inverse")


@dataclass(frozen=True)
class CayleyTable:
    """A verified multiplication table; construction re-checks all axioms."""

    table: Table

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))
        validate_table(self.table)

    @property
    def n(self) -> int:
        return len(self.table)

    def __repr__(self) -> str:
        return f"<CayleyTable of order {len(self.table)}>"


def _consistent(n: int, t: list[int], pre: list[list[tuple[int, int]]], i: int, j: int, v: int) -> bool:
    """With t[i][j] tentatively v, is every fully determined triple associative?

    A triple (a, b, c) touches four cells: (a, b), (b, c), (a*b, c) and
    (a, b*c).  Each family below catches the case where (i, j) plays one
    of those roles; pre[x] lists the filled cells whose product is x, so
    the last two families are direct lookups instead of scans.  Triples
    with a 0 in them hold by the identity axiom, hence the loops from 1.
    """
    base_i = i * n
    base_j = j * n
    base_v = v * n
    for c in range(1, n):
        q = t[base_j + c]
        if q >= 0:
            lhs = t[base_v + c]
            if lhs >= 0:
                rhs = t[base_i + q]
                if rhs >= 0 and lhs != rhs:
                    return False
    for base_a in range(n, n * n, n):
        p = t[base_a + i]
        if p >= 0:
            rhs = t[base_a + v]
            if rhs >= 0:
                lhs = t[p * n + j]
                if lhs >= 0 and lhs != rhs:
                    return False
    for a, b in pre[i]:
        q = t[b * n + j]
        if q >= 0:
            rhs = t[a * n + q]
            if rhs >= 0 and rhs != v:
                return False
    for b, c in pre[j]:
        p = t[base_i + b]
        if p >= 0:
            lhs = t[p * n + c]
            if lhs >= 0 and lhs != v:
                return False
    return True


def _all_labeled_tables(n: int) -> list[Table]:
    """Every group table on {0..n-1} with identity 0, by backtracking."""
    t = [-1] * (n * n)
    for j in range(n):
        t[j] = j
    for i in range(n):
        t[i * n] = i
    # pre[x] lists filled interior cells (a, b) with a*b = x.  Row-0/col-0
    # cells never enter: any triple touching the identity holds trivially.
    pre: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    rowmask = [(1 << n) - 1] + [1 << i for i in range(1, n)]
    colmask = [(1 << n) - 1] + [1 << j for j in range(1, n)]
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    out: list[Table] = []
    limit = (1 << n) - 1

    def fill(depth: int) -> None:
        if depth == len(cells):
            out.append(tuple(tuple(t[i * n : (i + 1) * n]) for i in range(n)))
            return
        i, j = cells[depth]
        avail = ~(rowmask[i] | colmask[j]) & limit
        pos = i * n + j
        while avail:
            bit = avail & -avail
            avail ^= bit
            v = bit.bit_length() - 1
            t[pos] = v
            if _consistent(n, t, pre, i, j, v):
                pre[v].append((i, j))
                rowmask[i] |= bit
                colmask[j] |= bit
                fill(depth + 1)
                rowmask[i] ^= bit
                colmask[j] ^= bit
                pre[v].pop()
            t[pos] = -1

    fill(0)
    return out


def canonical_form(t: "CayleyTable | Table") -> Table:
    """Least relabeling of the table among all that keep the identity at 0.

    Two tables describe the same group up to renaming iff their canonical
    forms are equal.  Comparison is row-wise lexicographic with early
    abort, so most relabelings are discarded after a handful of entries.
    """
    table = _rows(t)
    n = len(table)
    if n <= 2:
        return table
    best: list[tuple[int, ...]] | None = None
    sigma = [0] * n
    for rho_rest in permutations(range(1, n)):
        rho = (0,) + rho_rest  # new label -> old label
        for new, old in enumerate(rho):
            sigma[old] = new
        cand: list[tuple[int, ...]] = [tuple(range(n))]
        verdict = 0  # against best: -1 smaller, 0 equal so far, 1 larger
        for x in range(1, n):
            old_row = table[rho[x]]
            row = tuple(sigma[old_row[o]] for o in rho)
            cand.append(row)
            if best is not None and verdict == 0:
                ref = best[x]
                if row > ref:
                    verdict = 1
                    break
                if row < ref:
                    verdict = -1
        if best is None or verdict == -1:
            best = cand
    assert best is not None
    return tuple(best)


def table_is_cyclic(t: "CayleyTable | Table") -> bool:
    """True iff some single element's powers sweep out the whole table."""
    table = _rows(t)
    n = len(table)
    if n == 1:
        return True
    for g in range(1, n):
        order = 1
        x = g
        while x != 0:
            x = table[x][g]
            order += 1
        if order == n:
            return True
    return False


def element_orders(t: "CayleyTable | Table") -> tuple[int, ...]:
    """Sorted multiset of element orders, read directly off the table."""
    table = _rows(t)
    n = len(table)
    orders = []
    for g in range(n):
        order = 1
        x = g
        while x != 0:
            x = table[x][g]
            order += 1
        orders.append(order)
    return tuple(sorted(orders))


def regular_representation(t: "CayleyTable | Table") -> FiniteGroup:
    """The table's rows acting on {0..n-1}: row g sends x to g*x.

    Row composition mirrors the table product, so the resulting
    permutation group is the same group realized concretely.
    """
    table = _rows(t)
    validate_table(table)
    n = len(table)
    rows = [Permutation(row) for row in table]
    gens = tuple(rows[1:]) if n > 1 else (rows[0],)
    return FiniteGroup(n, gens, rows)


def enumerate_groups(n: int, *, cap: int = DEFAULT_ORDER_CAP) -> list[CayleyTable]:
    """All groups of order n up to relabeling, as canonical-form tables.

    Refuses n beyond the cap (default 8, hard limit 10); raising the cap
    past the default emits a warning because order 9 and 10 searches take
    noticeably longer.
    """
    if n < 1:
        raise ValueError("the order must be at least 1")
    effective = min(cap, HARD_ORDER_CAP)
    if n > effective:
        raise CapacityError(
            f"enumeration of order {n} exceeds the cap of {effective}"
        )
    if n > DEFAULT_ORDER_CAP:
        warnings.warn(
            f"enumerating groups of order {n} may take a while", RuntimeWarning, stacklevel=2
        )
    seen: set[Table] = set()
    for labeled in _all_labeled_tables(n):
        seen.add(canonical_form(labeled))
    return [CayleyTable(rep) for rep in sorted(seen)]


@dataclass(frozen=True)
class TheoremRow:
    """One order's worth of evidence comparing enumeration with the test."""

    n: int
    group_count: int
    cyclic_count: int
    all_cyclic: bool
    predicted: bool

    @property
    def agree(self) -> bool:
        return self.all_cyclic == self.predicted


def verify_theorem_small(n_max: int, *, cap: int = DEFAULT_ORDER_CAP) -> list[TheoremRow]:
    """For each n <= n_max, confirm enumeration agrees with the number test.

    "Every group of order n is cyclic" is decided two independent ways:
    by inspecting every table of order n, and by the gcd test on n.
    """
    out = []
    for n in range(1, n_max + 1):
        classes = enumerate_groups(n, cap=cap)
        cyclic = sum(1 for c in classes if table_is_cyclic(c))
        out.append(
            TheoremRow(
                n=n,
                group_count=len(classes),
                cyclic_count=cyclic,
                all_cyclic=cyclic == len(classes),
                predicted=is_cyclic_number(n),
            )
        )
    return out
