#!/usr/bin/env python3
"""Energies as half-line integrals.

Three Coulson-type constructions, each checked against the eigenvalue
route: the classical energy integral, its 0 < p < 2 generalization, and
the Coulson-Jacobs difference integral that subtracts two graphs' energies
through the log-ratio of their characteristic polynomials on the
imaginary axis.
"""

import numpy as np

from penergy import (
    cj_difference, complete, coulson_energy, cycle, du1_energy, eigenvalues,
    log_ratio_integrand, p_energy, path, star,
)

print("=== classical Coulson integral vs direct E_1 ===")
for g, label in [(complete(4), "K4"), (star(7), "S7"), (cycle(5), "C5")]:
    res = coulson_energy(g)
    direct = p_energy(eigenvalues(g), 1.0)
    print(f"{label}: integral {res.value:.10f}  direct {direct:.10f}  "
          f"|diff| {abs(res.value - direct):.2e}  ({res.evaluations} evals)")

print()
print("=== the 0 < p < 2 integral, including p pushed toward 2 ===")
g = path(6)
for p in (0.25, 0.75, 1.5, 1.9, 1.99):
    res = du1_energy(g, p, tol=1e-8)
    direct = p_energy(eigenvalues(g), p)
    print(f"P6, p={p:<5}: integral {res.value:.9f}  direct {direct:.9f}  "
          f"|diff| {abs(res.value - direct):.2e}  converged={res.converged}")
print("(the p -> 2 cases have extremely slow tails; the engine's analytic")
print(" tail remainder is what keeps them cheap and accurate)")

print()
print("=== Coulson-Jacobs difference integral ===")
pairs = [(complete(3), star(3), "K3 - S3"), (path(4), star(4), "P4 - S4"),
         (cycle(6), star(6), "C6 - S6")]
for g1, g2, label in pairs:
    for p in (0.5, 1.0, 1.5):
        res = cj_difference(g1, g2, p)
        direct = p_energy(eigenvalues(g1), p) - p_energy(eigenvalues(g2), p)
        print(f"{label}, p={p}: integral {res.value:+.9f}  "
              f"direct {direct:+.9f}  |diff| {abs(res.value - direct):.2e}")

print()
print("=== what the difference integrand looks like ===")
zs = np.geomspace(1e-3, 1e3, 13)
vals = log_ratio_integrand(complete(3), star(3), 1.0, zs)
print(f"{'z':>12} {'z^(p-1) log|f/g|':>20}")
for z, v in zip(zs, vals):
    print(f"{z:12.4g} {v:20.10f}")
print("nonnegative everywhere: that pointwise fact is exactly why the star")
print("minimizes every p-energy with 0 < p < 2 (see demo 03).")
