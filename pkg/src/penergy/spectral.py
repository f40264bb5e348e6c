"""Adjacency spectra, exact characteristic polynomials, and energy functionals.

Eigenvalues come from LAPACK (numpy.linalg.eigvalsh).  The multiplicity of
the eigenvalue 0 is pinned exactly via integer Gaussian elimination, and
the corresponding float entries are snapped to 0.0: the p-energy uses the
convention 0^p = 0, and for p < 1 an O(1e-16) eigenvalue that should be
zero would otherwise contribute O(1e-4) to the sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph


@dataclass(frozen=True)
class Spectrum:
    """Adjacency eigenvalues sorted descending; exact zeros are literal 0.0."""

    eigenvalues: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def zero_multiplicity(self) -> int:
        return sum(1 for x in self.eigenvalues if x == 0.0)

    def as_array(self) -> np.ndarray:
        return np.array(self.eigenvalues)


def integer_rank(g: Graph) -> int:
    """Rank of the adjacency matrix over the rationals (exact elimination)."""
    n = g.n
    rows = [[Fraction(int(x)) for x in row] for row in g.adjacency_matrix(dtype=int)]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for r in range(rank + 1, n):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == n:
            break
    return rank


def eigenvalues(g: Graph) -> Spectrum:
    """All n adjacency eigenvalues, sorted descending, zeros snapped exactly."""
    if g.n == 1:
        return Spectrum((0.0,))
    evs = np.linalg.eigvalsh(g.adjacency_matrix())
    nzero = g.n - integer_rank(g)
    if nzero:
        snap = np.argsort(np.abs(evs))[:nzero]
        evs[snap] = 0.0
    evs = np.sort(evs)[::-1]
    return Spectrum(tuple(float(x) for x in evs))


def p_energy(s: Spectrum, p: float) -> float:
    """Sum of |lambda_i|^p over the spectrum, with 0^p = 0.  Requires p > 0."""
    if p <= 0:
        raise ValueError(f"p-energy requires p > 0, got {p}")
    return float(sum(abs(x) ** p for x in s.eigenvalues if x != 0.0))


def schatten_norm(s: Spectrum, p: float) -> float:
    """Schatten p-norm (sum of sigma_i^p)^(1/p); sigma_i = |lambda_i| here."""
    if p < 1:
        raise ValueError(f"Schatten norm requires p >= 1, got {p}")
    return p_energy(s, p) ** (1.0 / p)


def spectral_radius(s: Spectrum) -> float:
    return max(abs(x) for x in s.eigenvalues)


# ---------------------------------------------------------------------------
# Exact characteristic polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharPoly:
    """Monic integer characteristic polynomial, coefficients by descending power.

    coefficients[k] multiplies z^(degree-k); coefficients[0] == 1.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def zero_multiplicity(self) -> int:
        """Multiplicity of the root 0: trailing zero coefficients."""
        c = 0
        for coeff in reversed(self.coefficients):
            if coeff != 0:
                break
            c += 1
        return c

    def lowest_nonzero_coefficient(self) -> int:
        """Coefficient of z^zero_multiplicity (the product of nonzero roots, up to sign)."""
        return self.coefficients[self.degree - self.zero_multiplicity]


def char_poly_exact(g: Graph) -> CharPoly:
    """det(zI - A) by the Faddeev-LeVerrier recurrence in exact rationals.

    Every intermediate division is exact; each final coefficient is asserted
    integral, which catches implementation slips immediately.
    """
    n = g.n
    a = [[Fraction(int(x)) for x in row] for row in g.adjacency_matrix(dtype=int)]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    aux = [row[:] for row in ident]
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        an = _matmul(a, aux)
        ck = -sum(an[i][i] for i in range(n)) / k
        coeffs.append(ck)
        aux = [[an[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)]
    ints = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError(f"non-integer characteristic coefficient {c}")
        ints.append(int(c))
    return CharPoly(tuple(ints))


def _matmul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def named_charpoly(family: str, n: int) -> CharPoly:
    """Closed-form characteristic polynomials for stars and paths.

    star(n):  z^n - (n-1) z^(n-2)            (n >= 2)
    path(n):  sum_k (-1)^k C(n-k, k) z^(n-2k)  (Chebyshev, second kind, at z/2)
    """
    if n < 1:
        raise ValueError("order must be positive")
    if family == "star":
        if n == 1:
            return CharPoly((1, 0))
        coeffs = [0] * (n + 1)
        coeffs[0] = 1
        coeffs[2] = -(n - 1)
        return CharPoly(tuple(coeffs))
    if family == "path":
        coeffs = [0] * (n + 1)
        for k in range(n // 2 + 1):
            coeffs[2 * k] = (-1) ** k * math.comb(n - k, k)
        return CharPoly(tuple(coeffs))
    raise ValueError(f"no closed-form polynomial for family {family!r}")


# ---------------------------------------------------------------------------
# Polynomial evaluation
# ---------------------------------------------------------------------------

def eval_at_complex(obj: CharPoly | Spectrum, z: complex) -> complex:
    """Evaluate the characteristic polynomial at z.

    CharPoly input runs Horner on the exact coefficients; Spectrum input
    uses the root product prod(z - lambda_k).  The two agree to rounding.
    """
    if isinstance(obj, CharPoly):
        acc = 0j
        for c in obj.coefficients:
            acc = acc * z + c
        return acc
    if isinstance(obj, Spectrum):
        acc = complex(1.0)
        for lam in obj.eigenvalues:
            acc *= z - lam
        return acc
    raise TypeError(f"expected CharPoly or Spectrum, got {type(obj).__name__}")


def log_abs_poly_ix_sq(s: Spectrum, x):
    """log |f(ix)|^2 = sum_k log(x^2 + lambda_k^2), stable up to x ~ 1e300.

    Summing logs of the factors avoids the overflow that the product form
    hits almost immediately; for |x| > 1e100 each factor is rewritten as
    2 log|x| + log1p((lambda/x)^2).
    """
    x = np.asarray(x, dtype=float)
    lam2 = np.square(s.as_array())
    big = np.abs(x) > 1e100
    with np.errstate(divide="ignore"):
        xx = np.where(big, 1.0, x)
        small = np.log(np.square(xx)[..., None] + lam2).sum(axis=-1)
        xb = np.where(big, x, 1.0)[..., None]
        large = (2.0 * np.log(np.abs(xb[..., 0])) * len(lam2)
                 + np.log1p(lam2 / xb / xb).sum(axis=-1))
    out = np.where(big, large, small)
    return out if out.ndim else float(out)


def closed_walk_count(g: Graph, k: int) -> int:
    """trace(A^k): closed walks of length k, exact integer arithmetic."""
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    a = g.adjacency_matrix(dtype=object)
    power = np.linalg.matrix_power(a, k)
    return int(np.trace(power))
