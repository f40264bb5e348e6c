"""Inequality checks with equality-case classification.

Each check returns a small report value object.  Equality ("tight") is
decided numerically at EQUALITY_TOL and then corroborated structurally:
the extremal families here (stars, complete graphs) are exactly
characterized by degree data, and for small orders the canonical form is
compared as well, so a tight margin is never classified on float evidence
alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import (
    CANONICAL_ORDER_LIMIT,
    Graph,
    canonical_form,
    complete,
    is_bipartite,
    is_complete_graph,
    is_connected,
    is_star_graph,
    star,
)
from .spectral import (
    Spectrum,
    char_poly_exact,
    closed_walk_count,
    eigenvalues,
    log_abs_poly_ix_sq,
    p_energy,
    spectral_radius,
)
from .coulson import PsiProduct, psi_eval, psi_product

EQUALITY_TOL = 1e-9


@dataclass
class BoundReport:
    name: str
    lhs: float
    rhs: float
    holds: bool
    margin: float
    equality: str  # strict / tight / violated
    equality_class: str | None = None  # star / complete / other, when tight

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "margin": self.margin,
            "equality": self.equality,
            "equality_class": self.equality_class,
        }


@dataclass
class GridMarginReport:
    """Minimal margin of a pointwise claim over a sample grid.

    Grid checking cannot certify all x; the grid extent and size are part
    of the report so the coverage is explicit.  origin_margin is the
    symbolic x = 0 comparison: None means the claim is strictly dominant
    there (lower zero-root multiplicity, margin +infinity).
    """

    name: str
    min_margin: float
    argmin_x: float
    points: int
    grid_min: float
    grid_max: float
    origin_margin: float | None
    holds: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "min_margin": self.min_margin,
            "argmin_x": self.argmin_x,
            "points": self.points,
            "grid_min": self.grid_min,
            "grid_max": self.grid_max,
            "origin_margin": self.origin_margin,
            "holds": self.holds,
        }


def _require_connected(g: Graph, what: str):
    if not is_connected(g):
        raise ValueError(f"{what} assumes a connected graph")


def _classify_extremal(g: Graph) -> str:
    """star / complete / other, exact.  S_2 = K_2 classifies as star."""
    if g.n <= CANONICAL_ORDER_LIMIT:
        form = canonical_form(g)
        if form == canonical_form(star(g.n)):
            return "star"
        if form == canonical_form(complete(g.n)):
            return "complete"
        return "other"
    if is_star_graph(g):
        return "star"
    if is_complete_graph(g):
        return "complete"
    return "other"


def _report(name: str, lhs: float, rhs: float, *, lower: bool,
            classify: Graph | None = None) -> BoundReport:
    margin = (lhs - rhs) if lower else (rhs - lhs)
    if margin < -EQUALITY_TOL:
        equality = "violated"
    elif abs(margin) <= EQUALITY_TOL:
        equality = "tight"
    else:
        equality = "strict"
    cls = None
    if equality == "tight" and classify is not None:
        cls = _classify_extremal(classify)
    return BoundReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        holds=margin >= -EQUALITY_TOL,
        margin=margin,
        equality=equality,
        equality_class=cls,
    )


def hong_check(g: Graph) -> BoundReport:
    """Spectral radius bound rho <= sqrt(2m - n + 1) for connected graphs.

    Equality happens exactly for stars and complete graphs (Hong), so a
    tight report carries the structural class.
    """
    _require_connected(g, "the spectral radius bound")
    rho = spectral_radius(eigenvalues(g))
    rhs = math.sqrt(2 * g.m - g.n + 1)
    return _report("hong_spectral_radius", rho, rhs, lower=False, classify=g)


def p_upper_check(g: Graph, p: float) -> tuple[BoundReport, BoundReport]:
    """Two upper bounds on E_p for p > 2.

    The connected-graph bound 2m (2m - n + 1)^((p-2)/2) is tight exactly
    for stars; the general-graph bound 2m (-1/2 + sqrt(2m + 1/4))^(p-2)
    never beats it on connected graphs (equivalent to m <= n(n-1)/2),
    which is asserted here.  A single edge attains the general bound, so
    "tight" can occur there too.
    """
    if p <= 2:
        raise ValueError(f"these upper bounds require p > 2, got {p}")
    _require_connected(g, "the p-energy upper bounds")
    ep = p_energy(eigenvalues(g), p)
    m, n = g.m, g.n
    rhs_conn = 2 * m * (2 * m - n + 1) ** ((p - 2) / 2)
    rhs_gen = 2 * m * (-0.5 + math.sqrt(2 * m + 0.25)) ** (p - 2)
    assert rhs_conn <= rhs_gen * (1 + 1e-12) + 1e-12, (
        f"connected bound {rhs_conn} exceeds general bound {rhs_gen}"
    )
    return (
        _report("p_upper_connected", ep, rhs_conn, lower=False, classify=g),
        _report("p_upper_general", ep, rhs_gen, lower=False, classify=g),
    )


def e4_check(g: Graph) -> BoundReport:
    """E_4 <= 2m (2m - n + 1), tight exactly at stars.

    E_4 is computed twice: as the exact closed-walk count trace(A^4) and
    as the float moment sum; the two must agree to 1e-6.
    """
    _require_connected(g, "the fourth-moment bound")
    exact = closed_walk_count(g, 4)
    approx = p_energy(eigenvalues(g), 4)
    if abs(exact - approx) > 1e-6:
        raise AssertionError(
            f"exact trace(A^4)={exact} and moment sum {approx} disagree"
        )
    rhs = float(2 * g.m * (2 * g.m - g.n + 1))
    return _report("e4_upper", float(exact), rhs, lower=False, classify=g)


def bipartite_lower_check(g: Graph, p: float) -> BoundReport:
    """E_p >= 2 m^(p/2) for bipartite graphs, 1 <= p <= 2."""
    if not 1 <= p <= 2:
        raise ValueError(f"the bipartite lower bound requires 1 <= p <= 2, got {p}")
    if is_bipartite(g) is None:
        raise ValueError("the bipartite lower bound assumes a bipartite graph")
    ep = p_energy(eigenvalues(g), p)
    rhs = 2.0 * g.m ** (p / 2)
    return _report("bipartite_lower", ep, rhs, lower=True, classify=g)


def key_claim_check(g: Graph, grid) -> GridMarginReport:
    """Minimal margin of log|f(ix)|^2 >= log|x^(n-2) (x^2 + n - 1)|^2 over a grid.

    Both sides vanish to order >= 2(n-2) at x = 0, where logs cannot be
    compared in floats; there the zero-root multiplicities are compared
    instead, and when they coincide the reduced constant terms are
    compared exactly from the integer characteristic polynomial.  For
    stars the two polynomials are identical and the margin is ~0
    everywhere.
    """
    _require_connected(g, "the star-comparison claim")
    xs = np.asarray(sorted(grid), dtype=float)
    if np.any(xs <= 0):
        raise ValueError("grid points must be positive (x = 0 is handled symbolically)")
    s = eigenvalues(g)
    n = g.n
    margins = (log_abs_poly_ix_sq(s, xs)
               - (2 * n - 4) * np.log(xs)
               - 2.0 * np.log(xs * xs + (n - 1)))
    idx = int(np.argmin(margins))
    min_margin = float(margins[idx])
    argmin_x = float(xs[idx])

    if n == 1:
        origin = 0.0  # both sides reduce to x
    else:
        c = s.zero_multiplicity
        if c < n - 2:
            origin = None
        else:
            # c == n - 2 (a connected graph with an edge has >= 2 nonzero
            # eigenvalues); compare the products of nonzero roots exactly
            low = abs(char_poly_exact(g).lowest_nonzero_coefficient())
            origin = 2.0 * (math.log(low) - math.log(n - 1))
    candidates = [min_margin] + ([origin] if origin is not None else [])
    overall = min(candidates)
    if origin is not None and origin < min_margin:
        argmin_x = 0.0
    return GridMarginReport(
        name="star_comparison_claim",
        min_margin=overall,
        argmin_x=argmin_x,
        points=len(xs),
        grid_min=float(xs[0]),
        grid_max=float(xs[-1]),
        origin_margin=origin,
        holds=overall >= -EQUALITY_TOL and (origin is None or origin >= -EQUALITY_TOL),
    )


def inequality16_probe(g1: Graph, g2: Graph, r: int, grid) -> GridMarginReport:
    """Minimal margin of |psi_f(ix)| - |psi_g(ix)| over a grid.

    This is the pointwise comparison that would extend the star argument
    to p > 2; it genuinely fails near x = 0 whenever g1 has a higher
    zero-eigenvalue multiplicity than g2 (e.g. C4 vs P4), and this probe
    reproduces that negative margin.
    """
    if g1.n != g2.n:
        raise ValueError(f"orders differ: {g1.n} vs {g2.n}")
    pf = psi_product(g1, r)
    pg = psi_product(g2, r)
    xs = np.asarray(sorted(grid), dtype=float)
    margins = np.array([
        abs(psi_eval(pf, 1j * x)) - abs(psi_eval(pg, 1j * x)) for x in xs
    ])
    idx = int(np.argmin(margins))
    return GridMarginReport(
        name="psi_modulus_probe",
        min_margin=float(margins[idx]),
        argmin_x=float(xs[idx]),
        points=len(xs),
        grid_min=float(xs[0]),
        grid_max=float(xs[-1]),
        origin_margin=None,
        holds=bool(margins[idx] >= -EQUALITY_TOL),
    )
