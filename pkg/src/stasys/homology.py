"""Integral and rational homology of a weighted cell complex.

Smith normal form over arbitrary-precision integers gives Betti numbers,
torsion coefficients and explicit integral generator chains per degree,
plus a rational coordinate map that evaluates the homology class of any
cycle in the generator basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .complexes import Chain, WeightedCellComplex
from .linalg import smith_normal_form  # re-exported

__all__ = ["HomologySummary", "HomologyClass", "homology", "smith_normal_form", "class_coordinates"]


@dataclass(frozen=True)
class HomologyClass:
    """A homology class given by coordinates in the generator basis."""

    degree: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class HomologySummary:
    """Per-degree homology data of one complex (weight-independent)."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    generators: tuple[tuple[Chain, ...], ...]
    torsion_generators: tuple[tuple[Chain, ...], ...]
    coordinate_maps: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @property
    def top_dim(self) -> int:
        return len(self.betti) - 1

    def class_coordinates(self, K: WeightedCellComplex, z: Chain) -> tuple[Fraction, ...]:
        """Rational homology coordinates of a cycle; zero iff z bounds."""
        if not K.is_cycle(z):
            raise ValueError("chain is not a cycle")
        cmap = self.coordinate_maps[z.degree]
        return tuple(
            sum((r * c for r, c in zip(row, z.coeffs) if r and c), Fraction(0))
            for row in cmap
        )

    def representative(self, cls: HomologyClass) -> Chain:
        """An explicit cycle with the given coordinates."""
        gens = self.generators[cls.degree]
        if len(cls.coords) != len(gens):
            raise ValueError("coordinate vector has wrong length")
        ncells = len(gens[0].coeffs) if gens else 0
        coeffs = [Fraction(0)] * ncells
        for c, g in zip(cls.coords, gens):
            for i, gi in enumerate(g.coeffs):
                coeffs[i] += c * gi
        return Chain(cls.degree, tuple(coeffs))

    def lattice_basis(self, q: int) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(row) for row in linalg.identity(self.betti[q]))


_cache: dict[tuple, HomologySummary] = {}


def homology(K: WeightedCellComplex) -> HomologySummary:
    """Homology summary of K; results are cached on the boundary structure."""
    key = (K.cell_ids, K.boundary_cols)
    hit = _cache.get(key)
    if hit is not None:
        return hit

    betti = []
    torsion = []
    generators = []
    torsion_generators = []
    coordinate_maps = []
    for q in range(K.top_dim + 1):
        nq = K.n_cells(q)
        kernel = _kernel_lattice_basis(K, q, nq)
        z = len(kernel)  # kernel is a list of columns
        nxt = K.boundary_matrix(q + 1) if q < K.top_dim else [[] for _ in range(nq)]
        a = _coords_in_kernel(kernel, nxt, nq)
        u, d, _v = smith_normal_form(a) if (z and a and a[0]) else (
            [[int(i == j) for j in range(z)] for i in range(z)],
            [[0] * (len(a[0]) if a else 0) for _ in range(z)],
            [],
        )
        diag = [d[i][i] for i in range(min(z, len(d[0]) if d else 0))]
        nonzero = [abs(x) for x in diag if x != 0]
        r = len(nonzero)
        betti.append(z - r)
        torsion.append(tuple(x for x in nonzero if x > 1))
        free_cols = [_column(u, i) for i in range(r, z)]
        tors_cols = [_column(u, i) for i, x in enumerate(diag) if x not in (0, 1, -1)]
        generators.append(tuple(_lattice_chain(kernel, col, q, nq) for col in free_cols))
        torsion_generators.append(tuple(_lattice_chain(kernel, col, q, nq) for col in tors_cols))
        coordinate_maps.append(_coordinate_map(kernel, u, r, z, nq))

    summary = HomologySummary(
        betti=tuple(betti),
        torsion=tuple(torsion),
        generators=tuple(generators),
        torsion_generators=tuple(torsion_generators),
        coordinate_maps=tuple(coordinate_maps),
    )
    _cache[key] = summary
    return summary


def class_coordinates(K: WeightedCellComplex, z: Chain) -> tuple[Fraction, ...]:
    return homology(K).class_coordinates(K, z)


def _kernel_lattice_basis(K: WeightedCellComplex, q: int, nq: int) -> list[list[int]]:
    """Columns generating the integral cycle lattice in degree q."""
    if q == 0 or K.n_cells(q - 1) == 0:
        return [[int(i == j) for i in range(nq)] for j in range(nq)]
    if nq == 0:
        return []
    m = K.boundary_matrix(q)
    _u, d, v = smith_normal_form(m)
    rank = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i] != 0)
    # M = U D V, so ker M is spanned by the V^{-1} images of the zero columns
    v_inv = linalg.inverse([[Fraction(x) for x in row] for row in v])
    cols = []
    for j in range(rank, nq):
        col = [v_inv[i][j] for i in range(nq)]
        assert all(x.denominator == 1 for x in col)
        cols.append([int(x) for x in col])
    return cols


def _coords_in_kernel(kernel: list[list[int]], bmat: list[list[int]], nq: int) -> list[list[int]]:
    """Express boundary columns in the kernel basis (always integral)."""
    z = len(kernel)
    ncols = len(bmat[0]) if bmat and bmat[0] is not None else 0
    if z == 0 or ncols == 0:
        return [[0] * ncols for _ in range(z)]
    kmat = [[Fraction(kernel[j][i]) for j in range(z)] for i in range(nq)]
    out = [[0] * ncols for _ in range(z)]
    for c in range(ncols):
        b = [Fraction(bmat[i][c]) for i in range(nq)]
        sol = linalg.solve(kmat, b)
        assert sol is not None, "boundary is not a cycle"
        for j in range(z):
            assert sol[j].denominator == 1
            out[j][c] = int(sol[j])
    return out


def _column(mat: list[list[int]], j: int) -> list[int]:
    return [row[j] for row in mat]


def _lattice_chain(kernel: list[list[int]], col: list[int], q: int, nq: int) -> Chain:
    coeffs = [0] * nq
    for j, cj in enumerate(col):
        if cj:
            for i in range(nq):
                coeffs[i] += cj * kernel[j][i]
    return Chain(q, tuple(Fraction(c) for c in coeffs))


def _coordinate_map(kernel, u, r, z, nq):
    """Rows of the linear map sending a cycle to its free-part coordinates."""
    b = z - r
    if b == 0 or nq == 0:
        return tuple(tuple() for _ in range(b)) if b else tuple()
    kmat = [[Fraction(kernel[j][i]) for j in range(z)] for i in range(nq)]
    kleft = linalg.left_inverse(kmat)  # z x nq, valid on the cycle space
    u_inv = linalg.inverse([[Fraction(x) for x in row] for row in u])
    rows = []
    for i in range(r, z):
        row = [
            sum((u_inv[i][j] * kleft[j][c] for j in range(z)), Fraction(0))
            for c in range(nq)
        ]
        rows.append(tuple(row))
    return tuple(rows)
