"""Polarized cones, valuations, boundary verdicts, the dcc scan."""

from fractions import Fraction
from random import Random

import pytest

from singvol import (
    DomainError,
    MalformedInputError,
    PolarizedCone,
    QVector,
    SymForm,
    boundary_class,
    cone_log_discrepancy,
    curve_cone,
    dcc_scan,
    lc_boundary_exists,
    limiting_discrepancy,
    natural_valuation,
    valuation_limit,
    vol_plus_table,
    vol_upper_bound,
    volume,
)
from singvol.catalog import cone_over_curve, elliptic_cone, ruled_surface_cone

F = Fraction


def vec(*entries) -> QVector:
    return QVector(tuple(F(e) for e in entries))


def ruled_without_rigidity() -> PolarizedCone:
    # same numerics as the built-in ruled-surface cone, no rigid annotations
    return PolarizedCone(
        dim_x=3,
        basis=("C0", "F"),
        form=SymForm(((0, 1), (1, 0))),
        nef_gens=(vec(1, 0), vec(0, 1)),
        pseff_gens=(vec(1, 0), vec(0, 1)),
        k_class=vec(-2, 0),
        h_class=vec(1, 1),
    )


def test_ruled_surface_cone_facets() -> None:
    c = ruled_surface_cone()
    assert set(n for n in c.facet_normals) == {(F(0), F(1)), (F(1), F(0))}


def test_membership_and_boundary() -> None:
    c = ruled_surface_cone()
    assert c.contains(vec(1, 1))
    assert c.contains(vec(0, 0))
    assert c.contains(vec(2, 0))
    assert not c.contains(vec(-1, 2))
    assert c.on_boundary(vec(2, 0))
    assert not c.on_boundary(vec(1, 1))


def test_min_h_multiple() -> None:
    c = ruled_surface_cone()
    # smallest t >= 0 with tH - D in the cone
    assert c.min_h_multiple(vec(1, 0)) == F(1)
    assert c.min_h_multiple(vec(-1, -1)) == F(0)
    assert c.min_h_multiple(vec(-3, 1)) == F(1)
    assert c.min_h_multiple(vec(F(1, 2), F(5, 2))) == F(5, 2)


def test_h_power_and_degree() -> None:
    c = ruled_surface_cone()
    assert c.h_power() == F(2)
    g2 = curve_cone(2, 1)
    assert g2.h_power() == F(1)
    assert g2.degree(vec(3)) == F(3)


def test_cone_validation_rejects_bad_data() -> None:
    form = SymForm(((0, 1), (1, 0)))
    # H on the boundary is not an ample polarization
    with pytest.raises(MalformedInputError):
        PolarizedCone(
            dim_x=3,
            basis=("C0", "F"),
            form=form,
            nef_gens=(vec(1, 0), vec(0, 1)),
            pseff_gens=(vec(1, 0), vec(0, 1)),
            k_class=vec(-2, 0),
            h_class=vec(1, 0),
        )
    # generators that do not span
    with pytest.raises(MalformedInputError):
        PolarizedCone(
            dim_x=3,
            basis=("C0", "F"),
            form=form,
            nef_gens=(vec(1, 0),),
            pseff_gens=(vec(1, 0),),
            k_class=vec(-2, 0),
            h_class=vec(1, 0),
        )
    # non-salient cone (contains a line)
    with pytest.raises(MalformedInputError):
        PolarizedCone(
            dim_x=3,
            basis=("C0", "F"),
            form=form,
            nef_gens=(vec(1, 0), vec(-1, 0), vec(0, 1)),
            pseff_gens=(vec(1, 0), vec(-1, 0), vec(0, 1)),
            k_class=vec(-2, 0),
            h_class=vec(0, 1),
        )
    with pytest.raises(MalformedInputError):
        PolarizedCone(
            dim_x=4,  # only surfaces and threefolds
            basis=("C0", "F"),
            form=form,
            nef_gens=(vec(1, 0), vec(0, 1)),
            pseff_gens=(vec(1, 0), vec(0, 1)),
            k_class=vec(-2, 0),
            h_class=vec(1, 1),
        )


def test_rigid_decomposition_scales_along_the_ray() -> None:
    c = ruled_surface_cone()
    assert c.rigid_decomposition(vec(2, 0)) == (("C0", F(2)),)
    assert c.rigid_decomposition(vec(F(3, 2), 0)) == (("C0", F(3, 2)),)
    assert c.rigid_decomposition(vec(1, 1)) is None


def test_boundary_class_values() -> None:
    c = ruled_surface_cone()
    bc = boundary_class(c, F(1, 2))
    assert bc.cls == (F(5, 2), F(1, 2))
    assert bc.effective and not bc.on_pseff_boundary

    bc0 = boundary_class(c, 0)
    assert bc0.cls == (F(2), F(0))
    assert bc0.effective and bc0.on_pseff_boundary
    assert bc0.rigid_rep == (("C0", F(2)),)

    assert not boundary_class(c, -1).effective


def test_cone_log_discrepancy_values() -> None:
    c = ruled_surface_cone()
    assert cone_log_discrepancy(c, F(1, 2)) == F(-1, 2)
    assert cone_log_discrepancy(c, 0) == F(0)
    with pytest.raises(DomainError) as exc:
        cone_log_discrepancy(c, -1)
    assert exc.value.reason == "boundary-not-effective"


def test_cone_log_discrepancy_matches_graph_model() -> None:
    # cone over a genus-g degree-d curve: the first effective slope is
    # a = (2g-2)/d and the discrepancy there equals the graph-side ell
    for g in (2, 3):
        for d in (1, 2, 3):
            a = F(2 * g - 2, d)
            from_cone = cone_log_discrepancy(curve_cone(g, d), a)
            graph_ell = cone_over_curve(g, d).discrepancy_report().ell
            assert from_cone == min(graph_ell.coeffs) == -a


def test_vol_upper_bound_values() -> None:
    c = ruled_surface_cone()
    assert vol_upper_bound(c, F(1, 2)) == F(1, 4)
    for k in range(11):
        a = F(1, 2 ** k)
        assert vol_upper_bound(c, a) == F(2) * a ** 3
    g2 = curve_cone(2, 1)
    assert vol_upper_bound(g2, F(2)) == F(4)


def test_vol_upper_bound_rejects_nonpositive_or_noneffective() -> None:
    c = ruled_surface_cone()
    with pytest.raises(DomainError):
        vol_upper_bound(c, 0)
    with pytest.raises(DomainError):
        vol_upper_bound(curve_cone(2, 1), F(1, 2))  # boundary not effective


def test_valuation_limit_values() -> None:
    c = ruled_surface_cone()
    assert valuation_limit(c, vec(1, 0)) == F(1)
    assert valuation_limit(c, vec(-1, -1)) == F(0)
    assert valuation_limit(c, vec(-3, 1)) == F(1)
    assert valuation_limit(c, vec(0, 0)) == F(0)
    assert valuation_limit(c, vec(F(1, 2), F(5, 2))) == F(5, 2)


def test_natural_valuation_values() -> None:
    c = ruled_surface_cone()
    assert natural_valuation(c, vec(1, 0), 3) == 3
    assert natural_valuation(c, vec(-2, 0), 7) == 0
    assert natural_valuation(c, vec(1, 1), 5) == 5
    assert natural_valuation(c, vec(-3, 1), 2) == 2
    # fractional optimum rounds up: t*(k D) = 5/2 at k = 1
    assert natural_valuation(c, vec(F(1, 2), F(5, 2)), 1) == 3
    assert natural_valuation(c, vec(F(1, 2), F(5, 2)), 2) == 5


def test_natural_valuation_rejects_bad_k() -> None:
    c = ruled_surface_cone()
    with pytest.raises(DomainError):
        natural_valuation(c, vec(1, 0), 0)
    with pytest.raises(DomainError):
        natural_valuation(c, vec(1, 0), -2)


SAMPLE_CLASSES = [
    (1, 0), (0, 1), (1, 1), (-2, 0), (-1, -1),
    (1, -1), (2, 3), (-3, 1), (0, 5), (2, 0),
]


def test_valuation_laws_on_sample_classes() -> None:
    c = ruled_surface_cone()
    for entries in SAMPLE_CLASSES:
        d = vec(*entries)
        limit = valuation_limit(c, d)
        for k in range(1, 60):
            gap = F(natural_valuation(c, d, k), k) - limit
            assert 0 <= gap <= F(1, k)
        v1 = natural_valuation(c, d, 1)
        for m in range(1, 13):
            assert m * v1 >= natural_valuation(c, d, m)
        assert natural_valuation(c, d, 1) + natural_valuation(c, -d, 1) >= 0


def test_limiting_discrepancy_ruled_surface_is_zero() -> None:
    c = ruled_surface_cone()
    for m in (1, 2, 3, 4, 6, 12):
        assert limiting_discrepancy(c, m) == F(0)


def test_limiting_discrepancy_curve_cone_values() -> None:
    # degree 1: j*d - (2g-2) >= 0 forces j >= 2, so every level gives -2
    assert limiting_discrepancy(curve_cone(2, 1), 1) == F(-2)
    # degree 3 staircase
    c = curve_cone(2, 3)
    got = [limiting_discrepancy(c, m) for m in (1, 2, 3, 4, 6)]
    assert got == [F(-1), F(-1), F(-2, 3), F(-3, 4), F(-2, 3)]
    # divisibility monotonicity: A_m <= A_lm
    for m in (1, 2, 3):
        for l in (2, 3, 4):
            assert limiting_discrepancy(c, m) <= limiting_discrepancy(c, l * m)


def test_limiting_discrepancy_rejects_bad_m() -> None:
    with pytest.raises(DomainError):
        limiting_discrepancy(ruled_surface_cone(), 0)


def test_lc_boundary_exists_verdict_trio() -> None:
    no = lc_boundary_exists(ruled_surface_cone())
    assert no.exists is False
    assert no.forced_a == F(0)
    assert len(no.certificate) == 3

    yes = lc_boundary_exists(elliptic_cone(1))
    assert yes.exists is True
    assert yes.forced_a == F(0)

    unknown = lc_boundary_exists(ruled_without_rigidity())
    assert unknown.exists is None
    assert unknown.to_doc()["exists"] == "unknown"


def test_lc_boundary_exists_empty_range() -> None:
    v = lc_boundary_exists(curve_cone(2, 1))
    assert v.exists is False
    assert v.forced_a is None
    assert len(v.certificate) == 3


def test_certificate_mentions_rigidity_step() -> None:
    v = lc_boundary_exists(ruled_surface_cone())
    assert any("rigidity" in step for step in v.certificate)
    assert any("a >= 0" in step for step in v.certificate)
    assert any("a <= 0" in step for step in v.certificate)


def test_vol_plus_table_rows_and_verdicts() -> None:
    c = ruled_surface_cone()
    slopes = [F(1, 2 ** k) for k in range(11)]
    table = vol_plus_table(c, slopes)
    bounds = [row["upper_bound"] for row in table["rows"]]
    assert bounds == [str(F(2, 8 ** k)) for k in range(11)]
    assert all(row["kind"] == "upper-bound" for row in table["rows"])
    assert all(row["status"] == "computed-exact" for row in table["rows"])
    claims = {v["claim"] for v in table["verdicts"]}
    assert "augmented-volume-zero" in claims
    assert "local-volume-zero" in claims
    assert "no-lc-boundary" in claims
    labels = {(v["claim"], v["status"]) for v in table["not_desk_verifiable"]}
    assert ("every-truncated-volume-positive", "cited-not-computed") in labels
    assert ("augmented-volume-equals-local-volume", "open-not-computed") in labels


def test_vol_plus_table_lc_case_claims_all_truncations_vanish() -> None:
    table = vol_plus_table(elliptic_cone(1), [F(1), F(1, 2)])
    claims = {v["claim"] for v in table["verdicts"]}
    assert "all-truncated-volumes-zero" in claims
    assert table["lc_boundary"]["exists"] is True


def test_vol_plus_table_rejects_bad_sequences() -> None:
    c = ruled_surface_cone()
    with pytest.raises(DomainError):
        vol_plus_table(c, [])
    with pytest.raises(DomainError):
        vol_plus_table(c, [1, 1])
    with pytest.raises(DomainError):
        vol_plus_table(c, [F(1, 4), F(1, 2)])


def test_curve_cone_matches_graph_volume() -> None:
    # at the forced slope the cone-side bound equals the graph volume
    for g in (2, 3):
        for d in (1, 2, 3):
            a = F(2 * g - 2, d)
            bound = vol_upper_bound(curve_cone(g, d), a)
            assert bound == volume(cone_over_curve(g, d)).volume
            assert bound == F((2 * g - 2) ** 2, d)


def test_dcc_scan_small_grid_rows() -> None:
    out = dcc_scan(3, 2)
    assert out["grid"] == {"g_max": 3, "a_max": 2}
    assert out["rows"] == [
        {"g": 2, "a": 1, "d": 2, "volume": "2"},
        {"g": 2, "a": 2, "d": 1, "volume": "4"},
        {"g": 3, "a": 1, "d": 4, "volume": "4"},
        {"g": 3, "a": 2, "d": 2, "volume": "8"},
    ]
    assert out["min_volume"] == "2"
    assert out["min_witnesses"] == [{"g": 2, "a": 1, "d": 2}]
    assert out["distinct_volumes_ascending"] == ["2", "4", "8"]
    assert out["no_strictly_decreasing_chain"] is True


def test_dcc_scan_rejects_bad_bounds() -> None:
    with pytest.raises(DomainError):
        dcc_scan(1, 5)
    with pytest.raises(DomainError):
        dcc_scan(5, 0)


def test_dcc_scan_volumes_never_drop_below_two() -> None:
    out = dcc_scan(12, 6)
    assert all(F(row["volume"]) >= 2 for row in out["rows"])


def test_cone_doc_round_values() -> None:
    doc = ruled_surface_cone().to_doc()
    assert doc["dim_X"] == 3
    assert doc["num_basis"] == ["C0", "F"]
    assert doc["K_V"] == ["-2", "0"]
    assert doc["H"] == ["1", "1"]
