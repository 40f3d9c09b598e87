"""Stable norms and stable systoles by exact rational linear programming.

The stable norm of a rational homology class is the minimum mass over the
cellular cycles representing it; the L1 objective is linearized by the
usual sign split.  Stable systoles minimize the stable norm over nonzero
integral classes: exactly for one-dimensional homology, and by a certified
lattice box search otherwise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import Chain, WeightedCellComplex, product_complex
from .homology import HomologyClass, HomologySummary, homology
from .lp import solve_lp

Rational = Fraction | int


@dataclass(frozen=True)
class StableNormResult:
    value: Fraction
    optimal_cycle: Chain
    certificate: str  # "optimal-LP" | "trivial-zero-class"


@dataclass(frozen=True)
class SystoleResult:
    value: Fraction | None
    witness_class: tuple[int, ...] | None
    search_status: str  # "trivial" | "exact" | "certified" | "bounded-search(R)"

    @property
    def is_trivial(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class VerificationReport:
    name: str
    lhs: Fraction | None
    rhs: Fraction | None
    relation: str
    status: str  # "pass" | "fail" | "inapplicable"
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def stable_norm(K: WeightedCellComplex, cls: HomologyClass) -> StableNormResult:
    """Minimum mass over rational cycles in the class (exact LP optimum)."""
    summary = homology(K)
    q = cls.degree
    if not 0 <= q <= K.top_dim:
        raise ValueError(f"degree {q} out of range")
    if len(cls.coords) != summary.betti[q]:
        raise ValueError("coordinate vector has wrong length")
    if cls.is_zero():
        return StableNormResult(Fraction(0), K.zero_chain(q), "trivial-zero-class")
    z = summary.representative(cls)
    cycle = minimum_mass_cycle(K, q, z.coeffs)
    return StableNormResult(K.mass(cycle), cycle, "optimal-LP")


def minimum_mass_cycle(
    K: WeightedCellComplex,
    q: int,
    z: tuple[Fraction, ...],
    extra_rows: list[tuple[list[Fraction], Fraction]] | None = None,
    homologous: bool = True,
) -> Chain:
    """Mass-minimal chain x with x = z + (boundary) plus optional linear rows.

    With ``homologous=False`` the boundary variables are dropped and x
    ranges over solutions of the extra rows with ``∂x = 0`` instead; ``z``
    is then ignored except for its length.
    """
    nq = K.n_cells(q)
    ny = K.n_cells(q + 1) if (homologous and q < K.top_dim) else 0
    nvars = 2 * nq + 2 * ny
    bmat = K.boundary_matrix(q + 1) if ny else None
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    if homologous:
        for i in range(nq):
            row = [Fraction(0)] * nvars
            row[i] = Fraction(1)
            row[nq + i] = Fraction(-1)
            if ny:
                for j in range(ny):
                    v = bmat[i][j]
                    if v:
                        row[2 * nq + j] = Fraction(-v)
                        row[2 * nq + ny + j] = Fraction(v)
            rows.append(row)
            rhs.append(Fraction(z[i]))
    else:
        if 1 <= q <= K.top_dim:
            for brow in K.boundary_matrix(q):
                row = [Fraction(0)] * nvars
                nonzero = False
                for i, v in enumerate(brow):
                    if v:
                        row[i] = Fraction(v)
                        row[nq + i] = Fraction(-v)
                        nonzero = True
                if nonzero:
                    rows.append(row)
                    rhs.append(Fraction(0))
    for coeffs, target in extra_rows or []:
        row = [Fraction(0)] * nvars
        for i, v in enumerate(coeffs):
            row[i] = Fraction(v)
            row[nq + i] = Fraction(-v)
        rows.append(row)
        rhs.append(Fraction(target))
    weights = K.weights[q]
    cost = [Fraction(w) for w in weights] * 2 + [Fraction(0)] * (2 * ny)
    _value, x = solve_lp(rows, rhs, cost)
    coeffs = tuple(x[i] - x[nq + i] for i in range(nq))
    return Chain(q, coeffs)


def stable_systole(K: WeightedCellComplex, q: int, search_radius: int = 5) -> SystoleResult:
    """Least stable norm among integral classes with nonzero rational image."""
    summary = homology(K)
    if q < 0 or q > K.top_dim or summary.betti[q] == 0:
        return SystoleResult(None, None, "trivial")
    b = summary.betti[q]
    if b == 1:
        res = stable_norm(K, HomologyClass(q, (Fraction(1),)))
        return SystoleResult(res.value, (1,), "exact")

    slab = [_slab_constant(K, summary, q, i) for i in range(b)]
    floor = min(slab)
    best: Fraction | None = None
    witness: tuple[int, ...] | None = None
    seen_radius = 0
    for r in range(1, search_radius + 1):
        for v in _primitive_vectors(b, r, seen_radius):
            res = stable_norm(K, HomologyClass(q, tuple(Fraction(x) for x in v)))
            if best is None or res.value < best:
                best = res.value
                witness = v
        seen_radius = r
        if best is not None and best <= r * floor:
            return SystoleResult(best, witness, "certified")
    return SystoleResult(best, witness, f"bounded-search({search_radius})")


def _slab_constant(K, summary: HomologySummary, q: int, i: int) -> Fraction:
    """Least mass of a cycle whose i-th rational coordinate is exactly 1."""
    cmap = summary.coordinate_maps[q]
    cycle = minimum_mass_cycle(
        K, q, (Fraction(0),) * K.n_cells(q),
        extra_rows=[(list(cmap[i]), Fraction(1))],
        homologous=False,
    )
    return K.mass(cycle)


def _primitive_vectors(dim: int, radius: int, skip_radius: int):
    """Primitive integer vectors with max-norm in (skip_radius, radius]."""
    rng = range(-radius, radius + 1)
    for v in itertools.product(rng, repeat=dim):
        m = max(abs(x) for x in v) if v else 0
        if m == 0 or m <= skip_radius:
            continue
        first = next(x for x in v if x != 0)
        if first < 0:
            continue  # norms are symmetric under negation
        if math.gcd(*[abs(x) for x in v]) != 1:
            continue
        yield v


# ---------------------------------------------------------------------------
# Verification reports for the scaling, product, projection and map bounds
# ---------------------------------------------------------------------------

def verify_rescaling(K: WeightedCellComplex, q: int, t: Rational) -> VerificationReport:
    """Scaling the metric by t^2 must scale the degree-q systole by t^q."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("scale factor must be positive")
    base = stable_systole(K, q)
    if base.is_trivial:
        raise ValueError(f"stable systole is trivial in degree {q}")
    scaled = stable_systole(K.rescale(t), q)
    expected = t ** q * base.value
    status = "pass" if scaled.value == expected else "fail"
    return VerificationReport(
        name="rescaling-law",
        lhs=scaled.value,
        rhs=expected,
        relation="==",
        status=status,
        details={"t": t, "q": q, "base": base.value},
    )


def verify_product_inequality(
    K: WeightedCellComplex, L: WeightedCellComplex, p: int, q: int
) -> VerificationReport:
    """Systole of a product is at most the product of factor systoles."""
    sk = stable_systole(K, p)
    sl = stable_systole(L, q)
    if sk.is_trivial or sl.is_trivial:
        raise ValueError("both factor systoles must be non-trivial")
    prod = product_complex(K, L)
    sp = stable_systole(prod, p + q)
    if sp.is_trivial:
        raise ValueError(f"product systole is trivial in degree {p + q}")
    status = "pass" if sp.value <= sk.value * sl.value else "fail"
    return VerificationReport(
        name="product-inequality",
        lhs=sp.value,
        rhs=sk.value * sl.value,
        relation="<=",
        status=status,
        details={"p": p, "q": q},
    )


def verify_projection_equality(
    K: WeightedCellComplex, L: WeightedCellComplex, q: int
) -> VerificationReport:
    """Product with a homologically silent factor keeps the systole equal.

    Applicable when degree-q homology of the product comes entirely from
    (q, 0) tensor terms with L connected; otherwise reported inapplicable.
    """
    bk = homology(K).betti
    bl = homology(L).betti
    def betti(bs, i):
        return bs[i] if 0 <= i < len(bs) else 0
    cross_terms = sum(betti(bk, q - j) * betti(bl, j) for j in range(1, q + 1))
    ok = betti(bl, 0) == 1 and betti(bk, q) > 0 and cross_terms == 0
    if not ok:
        return VerificationReport(
            name="projection-equality",
            lhs=None,
            rhs=None,
            relation="==",
            status="inapplicable",
            details={"reason": "Kunneth hypothesis violated in degree %d" % q},
        )
    prod = product_complex(K, L)
    sp = stable_systole(prod, q)
    sk = stable_systole(K, q)
    status = "pass" if sp.value == sk.value else "fail"
    return VerificationReport(
        name="projection-equality",
        lhs=sp.value,
        rhs=sk.value,
        relation="==",
        status=status,
        details={"q": q},
    )


# ---------------------------------------------------------------------------
# Non-degenerate simplicial maps and the degree-bound sandwich
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialMapInfo:
    source: WeightedCellComplex
    target: WeightedCellComplex
    vertex_map: tuple[tuple[int, int], ...]
    non_degenerate: bool
    degree_bound: int

    @property
    def mapping(self) -> dict[int, int]:
        return dict(self.vertex_map)


def simplicial_map(
    K: WeightedCellComplex, L: WeightedCellComplex, vertex_map: dict[int, int]
) -> SimplicialMapInfo:
    """Validate a vertex map as a non-degenerate simplicial map and bound its degree."""
    if K.vertex_lists is None or L.vertex_lists is None:
        raise ValueError("both complexes must be simplicial")
    if K.top_dim != L.top_dim:
        raise ValueError("source and target must share the top dimension")
    for q, per_deg in enumerate(K.vertex_lists):
        for vs in per_deg:
            images = [vertex_map[v] for v in vs]
            if len(set(images)) != len(images):
                raise ValueError(f"map degenerates simplex {vs}")
            if L.cell_by_vertices(tuple(sorted(images))) is None:
                raise ValueError(f"image of simplex {vs} is not a simplex of the target")
    d = _degree_bound(K, L, vertex_map)
    return SimplicialMapInfo(
        source=K,
        target=L,
        vertex_map=tuple(sorted(vertex_map.items())),
        non_degenerate=True,
        degree_bound=d,
    )


def push_chain(info: SimplicialMapInfo, chain: Chain) -> Chain:
    """Chain-level pushforward; degenerate cells (none here) would map to 0."""
    K, L = info.source, info.target
    vm = info.mapping
    out = [Fraction(0)] * L.n_cells(chain.degree)
    for j, c in enumerate(chain.coeffs):
        if not c:
            continue
        vs = K.vertex_lists[chain.degree][j]
        images = [vm[v] for v in vs]
        target = L.cell_by_vertices(tuple(sorted(images)))
        out[target] += c * _permutation_sign(images)
    return Chain(chain.degree, tuple(out))


def degree_bound(info: SimplicialMapInfo) -> int:
    """Largest absolute local degree over the target's top cells."""
    return info.degree_bound


def _degree_bound(K, L, vertex_map) -> int:
    n = L.top_dim
    hk, hl = homology(K), homology(L)
    if hk.betti[n] != 1 or hl.betti[n] != 1:
        raise ValueError("degree needs one-dimensional top homology on both sides")
    zk = hk.generators[n][0]
    zl = hl.generators[n][0]
    pushed = [Fraction(0)] * L.n_cells(n)
    vm = dict(vertex_map)
    for j, c in enumerate(zk.coeffs):
        if not c:
            continue
        vs = K.vertex_lists[n][j]
        images = [vm[v] for v in vs]
        target = L.cell_by_vertices(tuple(sorted(images)))
        pushed[target] += c * _permutation_sign(images)
    degrees = set()
    for pe, ze in zip(pushed, zl.coeffs):
        if ze == 0:
            if pe != 0:
                raise ValueError("pushforward misses the target fundamental cycle")
            continue
        d = pe / ze
        if d.denominator != 1:
            raise ValueError("non-integral local degree")
        degrees.add(int(d))
    return max(abs(d) for d in degrees) if degrees else 0


def _permutation_sign(seq: list[int]) -> int:
    sign = 1
    n = len(seq)
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def pullback_weights(info: SimplicialMapInfo) -> WeightedCellComplex:
    """Give each source cell the weight of its image cell in the target."""
    K, L = info.source, info.target
    vm = info.mapping
    new_weights = []
    for q, per_deg in enumerate(K.vertex_lists):
        ws = []
        for vs in per_deg:
            images = tuple(sorted(vm[v] for v in vs))
            ws.append(L.weights[q][L.cell_by_vertices(images)])
        new_weights.append(tuple(ws))
    return WeightedCellComplex(
        kind=K.kind,
        cell_ids=K.cell_ids,
        weights=tuple(new_weights),
        boundary_cols=K.boundary_cols,
        vertex_lists=K.vertex_lists,
        factor_degrees=K.factor_degrees,
    )


def verify_degree_sandwich(info: SimplicialMapInfo, q: int) -> VerificationReport:
    """With pulled-back weights, the source systole sits between the target
    systole and its degree-bound multiple."""
    K = pullback_weights(info)
    L = info.target
    hk, hl = homology(K), homology(L)
    if hk.betti[q] == 0 or hl.betti[q] == 0:
        raise ValueError(f"trivial homology in degree {q}")
    pushed = [hl.class_coordinates(L, push_chain(info, g)) for g in hk.generators[q]]
    from .linalg import rank
    mono = rank([list(map(Fraction, row)) for row in pushed]) == hk.betti[q]
    if not mono:
        return VerificationReport(
            name="degree-sandwich",
            lhs=None,
            rhs=None,
            relation="<=",
            status="inapplicable",
            details={"reason": "map is not injective on degree-%d rational homology" % q},
        )
    sl = stable_systole(L, q)
    sk = stable_systole(K, q)
    if sl.is_trivial or sk.is_trivial:
        raise ValueError(f"trivial systole in degree {q}")
    d = info.degree_bound
    ok = sl.value <= sk.value <= d * sl.value
    return VerificationReport(
        name="degree-sandwich",
        lhs=sk.value,
        rhs=d * sl.value,
        relation="sandwich",
        status="pass" if ok else "fail",
        details={"lower": sl.value, "pulled-back": sk.value, "degree-bound": d},
    )
