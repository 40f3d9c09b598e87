"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's LP and Smith-form code
paths: homology ranks come from rational row reduction, and minimal cycle
masses come from exhaustive enumeration over small integer coefficient
boxes.  Tests compare the fast implementations against these.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from stasys import (
    Chain,
    WeightedCellComplex,
    circle,
    class_coordinates,
    cubical_sphere,
    flat_torus,
    homology,
    point,
    product_complex,
    rp2,
    simplicial_from_top,
    sphere,
    torus_triangulated,
)


# ---------------------------------------------------------------------------
# Extra small complexes
# ---------------------------------------------------------------------------

def wedge_two_circles() -> WeightedCellComplex:
    """Two triangles glued at vertex 0: betti_1 = 2."""
    return simplicial_from_top(
        [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]
    )


def theta_graph() -> WeightedCellComplex:
    """Two endpoints joined by three two-edge arcs: betti_1 = 2."""
    return simplicial_from_top(
        [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]
    )


def disjoint_two_circles() -> WeightedCellComplex:
    """Two disjoint triangles: betti_0 = 2, betti_1 = 2."""
    return simplicial_from_top(
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    )


def weighted_circle() -> WeightedCellComplex:
    """Triangle circle with edge weights 1, 1/2, 2 (length 7/2)."""
    return simplicial_from_top(
        [(0, 1), (1, 2), (0, 2)],
        weights={(0, 1): Fraction(1), (1, 2): Fraction(1, 2), (0, 2): Fraction(2)},
    )


def two_spheres_wedge() -> WeightedCellComplex:
    """Boundaries of two tetrahedra glued at vertex 0: betti_2 = 2."""
    tops = [t for t in itertools.combinations(range(4), 3)]
    tops += [tuple(sorted(0 if v == 4 else v + 3 for v in t))
             for t in itertools.combinations(range(1, 5), 3)]
    return simplicial_from_top(tops)


@pytest.fixture(scope="session")
def standard_connected():
    """Named connected complexes used across tests."""
    return {
        "point": point(),
        "circle3": circle(3),
        "circle4": circle(4),
        "circle5": circle(5),
        "sphere2": sphere(2),
        "cubical_sphere2": cubical_sphere(2),
        "rp2": rp2(),
        "torus9": torus_triangulated(),
        "flat_torus3": flat_torus(3),
        "s1_x_s2": product_complex(circle(3, kind="cubical"), cubical_sphere(2)),
    }


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------

def rational_rank(mat: list[list[int]]) -> int:
    """Row-reduction rank, written without the library's linalg module."""
    rows = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def betti_oracle(K: WeightedCellComplex, q: int) -> int:
    """betti_q = dim ker(boundary_q) - rank(boundary_{q+1})."""
    nq = K.n_cells(q)
    rank_down = rational_rank(K.boundary_matrix(q)) if 1 <= q <= K.top_dim else 0
    rank_up = rational_rank(K.boundary_matrix(q + 1)) if q + 1 <= K.top_dim else 0
    return nq - rank_down - rank_up


def enumerate_integral_cycles(K: WeightedCellComplex, q: int, box: int = 3):
    """Yield every nonzero integral q-cycle with coefficients in [-box, box]."""
    n = K.n_cells(q)
    for coeffs in itertools.product(range(-box, box + 1), repeat=n):
        if all(c == 0 for c in coeffs):
            continue
        ch = Chain(q, tuple(Fraction(c) for c in coeffs))
        if K.is_cycle(ch):
            yield ch


def brute_force_systole(K: WeightedCellComplex, q: int, box: int = 3) -> Fraction | None:
    """Minimum mass over enumerated integral cycles with nonzero class."""
    best = None
    for ch in enumerate_integral_cycles(K, q, box):
        coords = class_coordinates(K, ch)
        if all(c == 0 for c in coords):
            continue
        m = K.mass(ch)
        if best is None or m < best:
            best = m
    return best


def brute_force_class_norms(K: WeightedCellComplex, q: int, box: int = 3):
    """Map from homology coordinates to the least enumerated cycle mass."""
    table: dict[tuple[Fraction, ...], Fraction] = {}
    for ch in enumerate_integral_cycles(K, q, box):
        coords = tuple(class_coordinates(K, ch))
        m = K.mass(ch)
        if coords not in table or m < table[coords]:
            table[coords] = m
    return table
