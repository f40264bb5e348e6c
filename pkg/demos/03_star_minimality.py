#!/usr/bin/env python3
"""Exhaustive extremal verification on small connected graphs.

For 0 < p < 2 the star is the unique p-energy minimizer among connected
graphs of its order.  This demo checks that claim literally, over every
isomorphism class up to n = 7, and then shows how the landscape flips
once p passes 2: the star stops being minimal and the path takes over at
the even exponents.
"""

from penergy import (
    connected_graph_list, eigenvalues, p_energy, parse_graph6, path, star,
    verify_extremal, verify_extremal_grid,
)

print("=== corpus sizes (connected graphs up to isomorphism) ===")
for n in range(1, 8):
    print(f"n={n}: {len(connected_graph_list(n))}")

print()
print("=== star minimality for p in (0, 2), exhaustive n=3..7 ===")
for n in range(3, 8):
    reports = verify_extremal_grid(n, [0.25, 0.5, 1.0, 1.5, 1.9], "star")
    clean = all(not r.violations and r.unique_minimizer for r in reports)
    print(f"n={n}: {reports[0].graph_count} graphs, five exponents -> "
          f"{'unique star minimizer, zero violations' if clean else 'PROBLEM'}")

print()
print("=== the regime change at p = 2 ===")
rep = verify_extremal(4, 3.0, "star")
print(f"n=4, p=3 against the star: {len(rep.violations)} violation(s)")
for g6, energy in rep.violations:
    g = parse_graph6(g6)
    print(f"    {g6!r} (m={g.m}) has E_3 = {energy:.7f} "
          f"< E_3(S4) = {rep.target_energy:.7f}")
print("the offender is the path: beyond p = 2 heavy single eigenvalues are")
print("penalized and the path's flat spectrum wins.")

print()
print("=== path minimality at the even exponents, n=3..7 ===")
for n in range(3, 8):
    reports = verify_extremal_grid(n, [4.0, 6.0], "path")
    for r in reports:
        status = "zero violations" if not r.violations else "VIOLATED"
        unique = "unique" if r.unique_minimizer else "non-unique"
        print(f"n={n}, p={int(r.p)}: min E_p = {r.min_energy:.6f} at the path "
              f"({unique}); {status}")

print()
print("=== between the even exponents the question is open ===")
for p in (2.5, 3.0, 3.7):
    rep = verify_extremal(6, p, "path")
    print(f"n=6, p={p}: exploratory={rep.exploratory}, "
          f"violations={len(rep.violations)}, unique={rep.unique_minimizer}")
print("no counterexample here; these runs are exploration, not proof.")
