"""Partition arithmetic and category bounds for dimension profiles."""

import pytest

from stasys import (
    CategoryVerdict,
    DimensionProfile,
    Partition,
    catstsys_bounds,
    enumerate_partitions,
    kunneth_product,
    mod_condition,
    parse_product_expression,
    partition_verdicts,
    product_profile,
    profile_from_complex,
    sphere_profile,
    torus_triangulated,
)


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

def test_partition_validation():
    assert Partition((1, 1, 2)).n == 4
    assert Partition((2, 2)).duplicated_number(2) == 2
    with pytest.raises(ValueError):
        Partition((2, 1))
    with pytest.raises(ValueError):
        Partition((0, 1))


def test_enumerate_partitions_full_set():
    parts = enumerate_partitions(4, {1, 2, 3, 4})
    assert [p.parts for p in parts] == [
        (1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,),
    ]


def test_enumerate_partitions_restricted_degrees():
    parts = enumerate_partitions(5, {2, 3})
    assert [p.parts for p in parts] == [(2, 3)]
    assert enumerate_partitions(3, {2}) == []


def test_mod_condition():
    assert mod_condition(2, 2, 3, 3)          # 0 + 0 < 3
    assert mod_condition(2, 2, 2, 2)          # 0 + 0 < 2
    assert not mod_condition(3, 2, 3, 2)      # 1 + 1 = 2
    assert mod_condition(1, 1, 2, 2)          # 0 + 0 < 2 (literal test only)


# ---------------------------------------------------------------------------
# Profiles
# ---------------------------------------------------------------------------

def test_sphere_profile_fields():
    p = sphere_profile(3)
    assert p.betti == (1, 0, 0, 1)
    assert p.lpd == 3 and p.homology_sphere and p.resolved_max_cup()


def test_profile_validation():
    with pytest.raises(ValueError):
        DimensionProfile(n=2, betti=(1, 0))  # wrong length
    with pytest.raises(ValueError):
        DimensionProfile(n=2, betti=(2, 0, 1))  # disconnected


def test_kunneth_product_betti_convolution():
    p = kunneth_product(sphere_profile(2), sphere_profile(2))
    assert p.betti == (1, 0, 2, 0, 1)
    assert p.n == 4 and len(p.factors) == 2


def test_profile_from_complex_torus():
    p = profile_from_complex(torus_triangulated(), name="T2")
    assert p.betti == (1, 2, 1)
    assert p.max_cup_flag is True and p.lpd == 1


def test_parse_product_expression():
    p = parse_product_expression("S2 x S3")
    assert p.n == 5 and [f.name for f in p.factors] == ["S2", "S3"]
    assert parse_product_expression("s1 * s1").n == 2
    with pytest.raises(ValueError):
        parse_product_expression("K3 x S1")


# ---------------------------------------------------------------------------
# Category bounds
# ---------------------------------------------------------------------------

def test_single_sphere_is_one():
    for m in (1, 2, 5):
        v = catstsys_bounds(sphere_profile(m))
        assert v.exact and v.value == 1


def test_sphere_products_equal_factor_count():
    cases = ["S1 x S2", "S1 x S3", "S2 x S2 x S7", "S1 x S1 x S1", "S3 x S4 x S5"]
    for expr in cases:
        p = parse_product_expression(expr)
        v = catstsys_bounds(p)
        assert v.exact and v.value == len(p.factors), expr


def test_torus_profile_equals_dimension():
    p = profile_from_complex(torus_triangulated(), name="T2")
    v = catstsys_bounds(p)
    assert v.exact and v.value == 2
    assert v.lower_rule == "cup-length lower bound (maximal cup length)"


def test_sum_rule_closes_s2_x_s3():
    v = catstsys_bounds(parse_product_expression("S2 x S3"))
    assert v.exact and v.value == 2
    assert any("factor-sum rule applies" in n for n in v.notes)


def test_sum_rule_closes_s2s2_x_s3():
    v = catstsys_bounds(parse_product_expression("S2 x S2 x S3"))
    assert v.exact and v.value == 3
    assert any("factor-sum rule applies to S2 x S2 x S3" in n for n in v.notes)


def test_sum_rule_reports_inapplicable_for_s1_x_s2():
    v = catstsys_bounds(parse_product_expression("S1 x S2"))
    assert v.exact and v.value == 2  # closed by the sphere-product rule anyway
    assert any("factor-sum rule inapplicable" in n for n in v.notes)


def test_nonorientable_profiles_rejected():
    p = DimensionProfile(n=2, betti=(1, 0, 0), orientable=False)
    with pytest.raises(ValueError):
        catstsys_bounds(p)


def test_bounds_never_cross():
    import itertools
    dims = [1, 2, 3, 4]
    for combo in itertools.combinations_with_replacement(dims, 2):
        v = catstsys_bounds(product_profile([sphere_profile(d) for d in combo]))
        assert v.lower <= v.upper


# ---------------------------------------------------------------------------
# Partition classification
# ---------------------------------------------------------------------------

def test_partition_verdicts_torus():
    p = profile_from_complex(torus_triangulated(), name="T2")
    verdicts = {part.parts: v for part, v in partition_verdicts(p).items()}
    assert verdicts[(1, 1)] == "categorical"
    assert verdicts[(2,)] == "categorical"


def test_partition_verdicts_s1_x_s2():
    p = parse_product_expression("S1 x S2")
    verdicts = {part.parts: v for part, v in partition_verdicts(p).items()}
    assert verdicts[(1, 2)] == "categorical"
    assert verdicts[(1, 1, 1)] == "ruled-out"  # size 3 > category 2
    assert verdicts[(3,)] == "categorical"
