"""Rational cohomology ring of a simplicial complex.

Cochains are evaluated on the stored (globally sorted) vertex orders, the
cup product is the front-face/back-face formula, and ring invariants are
computed by an exact degree-wise span filtration: cup-length, the least
positive dimension with nonzero reduced cohomology, and whether the ring
attains the dimensional cap floor(n / lpd) with a top-degree product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .complexes import WeightedCellComplex
from .homology import homology


@dataclass(frozen=True)
class Cochain:
    degree: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)


@dataclass(frozen=True)
class CohomologyBasis:
    """Dual basis cocycles per degree, paired against homology generators."""

    basis: tuple[tuple[Cochain, ...], ...]

    def dimension(self, q: int) -> int:
        return len(self.basis[q]) if 0 <= q < len(self.basis) else 0


@dataclass(frozen=True)
class RingProfile:
    dimension: int
    lpd: int | None
    cup_length: int
    max_cup_length_flag: bool
    witness_degrees: tuple[int, ...] | None


def _require_simplicial(K: WeightedCellComplex) -> None:
    if K.kind != "simplicial" or K.vertex_lists is None:
        raise ValueError("operation requires a simplicial complex")


def coboundary(K: WeightedCellComplex, alpha: Cochain) -> Cochain:
    """Transpose boundary: (d alpha)(cell) = alpha(boundary of cell)."""
    q = alpha.degree
    n_up = K.n_cells(q + 1)
    out = [Fraction(0)] * n_up
    if n_up:
        for j in range(n_up):
            total = Fraction(0)
            for face, inc in K.boundary_cols[q + 1][j]:
                total += inc * alpha.values[face]
            out[j] = total
    return Cochain(q + 1, tuple(out))


def is_cocycle(K: WeightedCellComplex, alpha: Cochain) -> bool:
    if alpha.degree >= K.top_dim:
        return True
    return coboundary(K, alpha).is_zero()


def cup_product(K: WeightedCellComplex, alpha: Cochain, beta: Cochain) -> Cochain:
    """Front-face/back-face product on sorted simplices."""
    _require_simplicial(K)
    p, q = alpha.degree, beta.degree
    deg = p + q
    n = K.n_cells(deg)
    out = [Fraction(0)] * n
    for j in range(n):
        vs = K.vertex_lists[deg][j]
        front = K.cell_by_vertices(vs[: p + 1])
        back = K.cell_by_vertices(vs[p:])
        out[j] = alpha.values[front] * beta.values[back]
    return Cochain(deg, tuple(out))


def pairing(K: WeightedCellComplex, alpha: Cochain, chain) -> Fraction:
    if alpha.degree != chain.degree:
        raise ValueError("degree mismatch in pairing")
    return sum(
        (a * c for a, c in zip(alpha.values, chain.coeffs) if a and c), Fraction(0)
    )


def cohomology_coordinates(K: WeightedCellComplex, alpha: Cochain) -> tuple[Fraction, ...]:
    """Coordinates of a cocycle in the basis dual to the homology generators."""
    gens = homology(K).generators[alpha.degree]
    return tuple(pairing(K, alpha, g) for g in gens)


def cohomology_basis(K: WeightedCellComplex) -> CohomologyBasis:
    """Per degree, cocycles alpha_i with <alpha_i, gen_j> = delta_ij."""
    _require_simplicial(K)
    summary = homology(K)
    per_degree = []
    for q in range(K.top_dim + 1):
        b = summary.betti[q]
        nq = K.n_cells(q)
        if b == 0 or nq == 0:
            per_degree.append(tuple())
            continue
        if q < K.top_dim:
            delta = linalg.transpose(
                [[Fraction(x) for x in row] for row in K.boundary_matrix(q + 1)]
            )
            cocycles = linalg.nullspace(delta, ncols=nq)
        else:
            cocycles = [[Fraction(int(i == j)) for i in range(nq)] for j in range(nq)]
        gens = summary.generators[q]
        pair = [
            [sum((zv * gc for zv, gc in zip(z, g.coeffs)), Fraction(0)) for g in gens]
            for z in cocycles
        ]  # rows: cocycles, cols: generators
        pair_t = linalg.transpose(pair)
        duals = []
        for i in range(b):
            e = [Fraction(int(k == i)) for k in range(b)]
            w = linalg.solve(pair_t, e)
            if w is None:
                raise RuntimeError("pairing with homology generators is degenerate")
            vals = [
                sum((w[j] * cocycles[j][cidx] for j in range(len(cocycles))), Fraction(0))
                for cidx in range(nq)
            ]
            duals.append(Cochain(q, tuple(vals)))
        per_degree.append(tuple(duals))
    return CohomologyBasis(basis=tuple(per_degree))


@dataclass(frozen=True)
class _RingElement:
    cochain: Cochain
    factor_degrees: tuple[int, ...]


def _product_filtration(K: WeightedCellComplex) -> list[list[_RingElement]]:
    """Levels of the span filtration generated by positive-degree classes.

    Level k holds a basis (in cohomology coordinates) of the span of all
    k-fold cup products; level 0 is a placeholder.
    """
    basis = cohomology_basis(K)
    level1 = [
        _RingElement(alpha, (q,))
        for q in range(1, K.top_dim + 1)
        for alpha in basis.basis[q]
    ]
    levels: list[list[_RingElement]] = [[], level1]
    while levels[-1]:
        nxt: list[_RingElement] = []
        span: dict[int, list[list[Fraction]]] = {}
        for el in levels[-1]:
            for gen in level1:
                deg = el.cochain.degree + gen.cochain.degree
                if deg > K.top_dim:
                    continue
                prod = cup_product(K, el.cochain, gen.cochain)
                coords = list(cohomology_coordinates(K, prod))
                if all(c == 0 for c in coords):
                    continue
                rows = span.setdefault(deg, [])
                if linalg.rank(rows + [coords]) > len(rows):
                    rows.append(coords)
                    nxt.append(_RingElement(prod, el.factor_degrees + gen.factor_degrees))
        if not nxt:
            break
        levels.append(nxt)
    return levels


def cup_length(K: WeightedCellComplex) -> int:
    """Longest nonzero cup product of positive-degree rational classes."""
    levels = _product_filtration(K)
    return max(k for k, lvl in enumerate(levels) if lvl or k == 0)


def lpd(K: WeightedCellComplex) -> int | None:
    """Least positive degree with nonzero rational homology, or None."""
    betti = homology(K).betti
    for q in range(1, len(betti)):
        if betti[q] > 0:
            return q
    return None


def has_maximal_real_cup_length(K: WeightedCellComplex) -> tuple[bool, tuple[int, ...] | None]:
    """True iff a floor(n/lpd)-fold product is nonzero in top-degree cohomology."""
    l = lpd(K)
    if l is None:
        return False, None
    n = K.top_dim
    r = n // l
    levels = _product_filtration(K)
    if r >= len(levels):
        return False, None
    if r == 0:
        return False, None
    for el in levels[r]:
        if el.cochain.degree == n:
            return True, el.factor_degrees
    return False, None


def ring_profile(K: WeightedCellComplex) -> RingProfile:
    flag, witness = has_maximal_real_cup_length(K)
    return RingProfile(
        dimension=K.top_dim,
        lpd=lpd(K),
        cup_length=cup_length(K),
        max_cup_length_flag=flag,
        witness_degrees=witness,
    )
