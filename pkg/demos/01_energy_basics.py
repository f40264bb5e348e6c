#!/usr/bin/env python3
"""Graphs, spectra, and p-energies: the basic objects.

The p-energy of a graph is the sum of the p-th powers of the absolute
eigenvalues of its adjacency matrix; p = 1 is the classical graph energy
and p = 2 always equals twice the edge count.
"""

import numpy as np

from penergy import (
    complete, cycle, eigenvalues, emit_graph6, p_energy, parse_graph6,
    path, schatten_norm, spectral_radius, star,
)

print("=== named families and their spectra ===")
for g, label in [(star(6), "S6"), (path(6), "P6"), (cycle(6), "C6"), (complete(6), "K6")]:
    s = eigenvalues(g)
    print(f"{label}: n={g.n} m={g.m}  graph6={emit_graph6(g)!r}")
    print(f"    spectrum {np.round(s.eigenvalues, 4)}")
    print(f"    rho = {spectral_radius(s):.4f}")

print()
print("=== p-energy across exponents ===")
print(f"{'p':>5} {'S6':>10} {'P6':>10} {'C6':>10} {'K6':>10}")
for p in (0.5, 1.0, 1.5, 2.0, 3.0, 4.0):
    row = [p_energy(eigenvalues(g), p) for g in (star(6), path(6), cycle(6), complete(6))]
    print(f"{p:5.2f} " + " ".join(f"{v:10.4f}" for v in row))
print()
print("note the p = 2 row: every graph with m edges has E_2 = 2m, so the")
print("interesting extremal structure lives away from p = 2.")

print()
print("=== stars have closed-form energies ===")
for n in (4, 7, 10):
    s = eigenvalues(star(n))
    print(f"S{n}: E_1 = {p_energy(s, 1):.6f} = 2*sqrt(n-1) = {2 * np.sqrt(n - 1):.6f}")

print()
print("=== Schatten norms ===")
g = path(5)
s = eigenvalues(g)
for p in (1, 2, 4):
    print(f"||P5||_{p} = {schatten_norm(s, p):.6f}")
print(f"||P5||_2^2 = {schatten_norm(s, 2) ** 2:.6f} = 2m = {2 * g.m}")

print()
print("=== graph6 round trip ===")
line = emit_graph6(cycle(5))
print(f"C5 encodes to {line!r}; decoding gives back m={parse_graph6(line).m} edges")
