"""Enumerate every group of a small order and poke at its structure.

The Cayley-table search knows nothing about the arithmetic criterion —
it just fills in multiplication tables and dedupes them up to
relabeling — so agreement between the two is a genuine cross-check.
"""

import cyclicnum as cn


def main() -> None:
    print("isomorphism classes by order:")
    for n in range(1, 7):
        tables = cn.enumerate_groups(n)
        cyclic = sum(1 for t in tables if cn.table_is_cyclic(t))
        tag = "all cyclic" if cyclic == len(tables) else f"{cyclic} cyclic"
        marker = "cyclic number" if cn.is_cyclic_number(n) else "not a cyclic number"
        print(f"  order {n}: {len(tables)} class(es), {tag}  [{marker}]")
    print()

    print("inside the non-cyclic order-6 class:")
    table = next(
        t for t in cn.enumerate_groups(6) if not cn.table_is_cyclic(t)
    )
    print(f"  element orders from the table: {cn.element_orders(table)}")
    G = cn.regular_representation(table)
    print(f"  as permutations of degree {G.degree}, order {len(G)}")
    Z = cn.center(G)
    print(f"  center size: {len(Z)}")
    maximals = cn.maximal_subgroups(G)
    print(f"  maximal subgroup sizes: {sorted(len(H) for H in maximals)}")
    reps = []
    seen_orbits = set()
    for H in maximals:
        count = cn.count_conjugate_subgroups(G, H)
        fhat = cn.noncentral_union_size(G, H)
        print(f"    size {len(H)}: {count} conjugate(s), "
              f"{fhat} non-central element(s) across them")
        orbit = frozenset(frozenset(cn.conjugate_subgroup(G, H, b)) for b in G)
        if orbit not in seen_orbits:
            seen_orbits.add(orbit)
            reps.append(H)
    total = len(Z) + sum(cn.noncentral_union_size(G, H) for H in reps)
    print(f"  center + union sizes over non-conjugate maximals: {total} "
          f"= group order {len(G)}")


if __name__ == "__main__":
    main()
