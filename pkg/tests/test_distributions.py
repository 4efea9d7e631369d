import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meshlab.algebra import Poly, zigzag_numbers
from meshlab.distributions import (
    MMP_Q1,
    BruteForceLimitError,
    Family,
    a_poly,
    b_poly,
    brute_force_limit,
    build_cache,
    c_poly,
    cache_record,
    cached_polynomial,
    closed_form_series_check,
    confirmed_c_variant,
    d_poly,
    dist_brute,
    egf_family,
    family_for,
    family_polynomial,
    load_cache,
    oracle_equivalence,
    save_cache,
    sec_power_identity,
    sec_t_power_of_x,
    sec_xt_power,
    symmetry_suite,
)
from meshlab.permutations import DOWN_UP, UP_DOWN, QuadrantSpec
from meshlab.reference import FAMILY_TABLES


# --- family plumbing -------------------------------------------------------


def test_family_index_length_maps():
    assert Family.A.length(3) == 6
    assert Family.B.length(4) == 7
    assert Family.C.index_for_length(10) == 5
    assert Family.D.index_for_length(13) == 7
    with pytest.raises(ValueError):
        Family.A.index_for_length(5)
    assert family_for(6, UP_DOWN) is Family.A
    assert family_for(6, DOWN_UP) is Family.C
    assert family_for(5, UP_DOWN) is Family.B
    assert family_for(5, DOWN_UP) is Family.D


def test_family_class_and_parity():
    assert Family.A.alternating_class is UP_DOWN
    assert Family.D.alternating_class is DOWN_UP
    assert Family.C.even_length and not Family.B.even_length


# --- brute force oracle ----------------------------------------------------


def test_dist_brute_examples():
    assert dist_brute(4, UP_DOWN, MMP_Q1) == Poly([0, 0, 3, 2])
    assert dist_brute(3, DOWN_UP, MMP_Q1) == Poly([0, 1, 1])
    # the all-zero spec is matched by every position
    assert dist_brute(2, UP_DOWN, QuadrantSpec(0, 0, 0, 0)) == Poly([0, 0, 1])
    assert dist_brute(0, UP_DOWN, MMP_Q1) == Poly.one()
    assert dist_brute(1, DOWN_UP, MMP_Q1) == Poly.one()


@pytest.mark.parametrize(
    "spec",
    [
        MMP_Q1,
        QuadrantSpec(0, 1, 0, 0),
        QuadrantSpec(1, 0, None, 0),
        QuadrantSpec(2, 1, 0, 0),
        QuadrantSpec(0, None, 0, 1),
        QuadrantSpec(0, 0, 0, 0),
    ],
)
def test_engines_agree(spec):
    for length in range(1, 8):
        for cls in (UP_DOWN, DOWN_UP):
            py = dist_brute(length, cls, spec, engine="python")
            fast = dist_brute(length, cls, spec, engine="compiled")
            assert py == fast


def test_worker_partitioning_is_exact():
    for cls in (UP_DOWN, DOWN_UP):
        lone = dist_brute(8, cls, MMP_Q1, workers=1)
        many = dist_brute(8, cls, MMP_Q1, workers=5)
        assert lone == many


requirement = st.one_of(st.none(), st.integers(0, 2))


@settings(deadline=None, max_examples=40)
@given(
    st.integers(1, 6),
    st.sampled_from([UP_DOWN, DOWN_UP]),
    st.tuples(requirement, requirement, requirement, requirement),
)
def test_engines_agree_on_random_patterns(length, cls, reqs):
    spec = QuadrantSpec(*reqs)
    assert dist_brute(length, cls, spec, engine="python") == dist_brute(
        length, cls, spec, engine="compiled"
    )


@settings(deadline=None, max_examples=40)
@given(
    st.integers(1, 7),
    st.tuples(requirement, requirement, requirement, requirement),
)
def test_distribution_symmetries_for_arbitrary_patterns(length, reqs):
    # complementation swaps quadrants I<->IV and II<->III and maps the two
    # alternating classes onto each other; reversal swaps I<->II and III<->IV
    # and preserves the class at odd length.  Both must hold at the level of
    # whole distributions for every pattern, empty-quadrant entries included.
    a, b, c, d = reqs
    spec = QuadrantSpec(a, b, c, d)
    comp = QuadrantSpec(d, c, b, a)
    rev = QuadrantSpec(b, a, d, c)
    assert dist_brute(length, UP_DOWN, spec) == dist_brute(length, DOWN_UP, comp)
    if length % 2 == 1:
        assert dist_brute(length, UP_DOWN, spec) == dist_brute(length, UP_DOWN, rev)
        assert dist_brute(length, DOWN_UP, spec) == dist_brute(length, DOWN_UP, rev)
    else:
        assert dist_brute(length, UP_DOWN, spec) == dist_brute(length, DOWN_UP, rev)


def test_brute_guard(monkeypatch):
    monkeypatch.setenv("MESHLAB_MAX_BRUTE", "6")
    assert brute_force_limit() == 6
    with pytest.raises(BruteForceLimitError) as excinfo:
        dist_brute(8, UP_DOWN, MMP_Q1)
    assert excinfo.value.length == 8 and excinfo.value.limit == 6
    # explicit override still works
    assert dist_brute(8, UP_DOWN, MMP_Q1, force=True)(1) == zigzag_numbers(8)[8]
    monkeypatch.setenv("MESHLAB_MAX_BRUTE", "not-a-number")
    with pytest.raises(ValueError):
        brute_force_limit()


def test_unknown_engine():
    with pytest.raises(ValueError):
        dist_brute(3, UP_DOWN, MMP_Q1, engine="quantum")


# --- recursion route vs published tables -----------------------------------


@pytest.mark.parametrize("name,rows", sorted(FAMILY_TABLES.items()))
def test_recursion_reproduces_reference_tables(name, rows):
    family = Family(name)
    for index, coeffs in rows.items():
        assert family_polynomial(family, index) == Poly(coeffs), (name, index)


def test_specialisation_at_one():
    ee = zigzag_numbers(14)
    for n in range(0, 7):
        assert a_poly(n)(1) == ee[2 * n]
        assert c_poly(n)(1) == ee[2 * n]
    for n in range(1, 8):
        assert b_poly(n)(1) == ee[2 * n - 1]
        assert d_poly(n)(1) == ee[2 * n - 1]


def test_distribution_coefficients_are_nonnegative_integers():
    for family in Family:
        for index in range(family.min_index(), 11):
            poly = family_polynomial(family, index)
            assert all(c.denominator == 1 and c >= 0 for c in poly.coeffs)


def test_a_poly_upto_view():
    from meshlab.distributions import a_poly_upto

    assert a_poly_upto(3) == [a_poly(i) for i in range(4)]


def test_poly_index_preconditions():
    with pytest.raises(ValueError):
        a_poly(-1)
    with pytest.raises(ValueError):
        b_poly(0)
    with pytest.raises(ValueError):
        d_poly(0)


# --- EGF route --------------------------------------------------------------


def test_egf_routes_match_recursion():
    order = 10
    for family in Family:
        series = egf_family(family, order)
        for m in range(order + 1):
            coeff = series.coefficient(m)
            if (m % 2 == 0) != family.even_length:
                assert coeff.is_zero()
            elif m > 0:
                assert coeff == family_polynomial(family, family.index_for_length(m))


def test_egf_examples():
    a = egf_family(Family.A, 8)
    assert [a.coefficient(m) for m in (0, 2, 4)] == [
        Poly.one(), Poly([0, 1]), Poly([0, 0, 3, 2])
    ]
    assert a.coefficient(8) == Poly([0, 0, 0, 0, 105, 420, 588, 272])
    assert egf_family(Family.D, 5).coefficient(5) == Poly([0, 0, 3, 8, 5])
    b_at_1 = egf_family(Family.B, 7).at_x(1)
    assert [b_at_1[m] for m in (1, 3, 5, 7)] == [1, 2, 16, 272]


def test_sec_powers():
    # multiplier 1 solves the same equation as the A family series
    assert sec_xt_power(Poly.one(), 8) == egf_family(Family.A, 8)
    s = sec_t_power_of_x(4)
    assert s.coefficient(0) == Poly.one()
    assert s.coefficient(2) == Poly([0, 1])


def test_oracle_equivalence_small():
    records = oracle_equivalence(9)
    assert records and all(r["verdict"] == "pass" for r in records)


# --- symmetry and identity suites ------------------------------------------


def test_symmetry_suite_passes():
    records = symmetry_suite(6)
    assert len(records) == 36
    assert all(r["verdict"] == "pass" for r in records)


def test_named_symmetry_instances():
    assert dist_brute(4, DOWN_UP, QuadrantSpec(0, 1, 0, 0)) == Poly([0, 0, 3, 2])
    assert dist_brute(3, UP_DOWN, QuadrantSpec(0, 1, 0, 0)) == Poly([0, 2])


def test_sec_power_identity():
    records = sec_power_identity(3)
    assert [r["n"] for r in records] == [0, 1, 2, 3]
    assert all(r["verdict"] == "pass" for r in records)
    # n = 1 case by hand: the single up-down word 12 contributes x
    assert sec_t_power_of_x(2).coefficient(2) == Poly([0, 1])


def test_composite_series_forms_and_c_adjudication():
    records = closed_form_series_check(10)
    by_variant = {r["variant"]: r["verdict"] for r in records}
    assert by_variant["sec^(1/x) * int sec^(-1/x)"] == "pass"
    assert by_variant["int sec^(1+1/x)"] == "pass"
    assert by_variant["inner exponent -1/x"] == "pass"
    assert by_variant["inner exponent +1/x"] == "fail"
    assert confirmed_c_variant() == "inner exponent -1/x"


# --- cache file --------------------------------------------------------------


def test_cache_roundtrip(tmp_path):
    records = build_cache(4)
    path = tmp_path / "cache.json"
    save_cache(path, records)
    loaded = load_cache(path)
    assert loaded == records
    for rec in loaded:
        assert rec["family"] in "ABCD"
        assert all(isinstance(c, str) for c in rec["coeffs"])
        family = Family(rec["family"])
        assert rec["length"] == family.length(rec["index"])
        assert cached_polynomial(rec) == family_polynomial(family, rec["index"])


def test_cache_record_validation():
    with pytest.raises(ValueError):
        cache_record(Family.A, 1, a_poly(1), "guesswork")


def test_cache_preserves_big_integers(tmp_path):
    # digits beyond the float53 range must survive the round trip
    big = family_polynomial(Family.D, 12)
    rec = cache_record(Family.D, 12, big, "recursion")
    path = tmp_path / "big.json"
    save_cache(path, [rec])
    raw = json.loads(path.read_text())
    assert raw[0]["coeffs"] == [str(c) for c in big.coeffs]
    assert cached_polynomial(load_cache(path)[0]) == big
    assert max(int(c) for c in raw[0]["coeffs"]) > 2**53
