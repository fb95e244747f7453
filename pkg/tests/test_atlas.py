"""Orbit atlas behavior: representatives, signatures, classification, nets.

Frozen integer constants in this file were independently recomputed by
exhaustive orbit enumeration before being pinned here.
"""

import pytest

from conicnets.action import act_subspace, generators, k_equivalent
from conicnets.atlas import (
    EMPTY_BASE_LABELS,
    EXPECTED_CUBIC_KIND,
    LABELS,
    classify_net,
    classify_plane,
    example_net,
    expected_point_distribution,
    net_base_points,
    net_double_line_count,
    net_of_plane,
    orbit_atlas,
    plane_of_net,
    planes_meeting_nucleus_count,
    representative,
    representative_parameters,
    representative_pattern,
    representatives,
    sigma18_parameter,
    sigma20_parameters,
    sigma21_parameter,
    signature_table,
    verify_distributions,
    verify_double_lines,
    verify_known_net,
    verify_partition,
)
from conicnets.errors import ConfigurationError, OutOfFamilyError
from conicnets.gf import field
from conicnets.invariants import point_class_counts
from conicnets.projgeom import plane_from_pattern, span
from conicnets.veronese import form_eval

# independently recomputed by breadth-first orbit enumeration at q = 2
ORBIT_SIZES_Q2 = {
    "Sigma1": 7, "Sigma3": 84, "Sigma4": 42, "Sigma7": 7, "Sigma8": 42,
    "Sigma9": 42, "Sigma10": 84, "Sigma11": 168, "Sigma15": 21, "SigmaN": 1,
    "Sigma16": 7, "Sigma17": 42, "Sigma18": 14, "Sigma19": 7, "Sigma20": 21,
    "Sigma21": 42, "Sigma22": 168, "Sigma23": 84,
}


def test_label_inventory():
    assert len(LABELS) == 18
    assert len(set(LABELS)) == 18
    assert set(EMPTY_BASE_LABELS) <= set(LABELS)
    assert len(EMPTY_BASE_LABELS) == 9
    assert set(EXPECTED_CUBIC_KIND) == set(LABELS)


@pytest.mark.parametrize("q", (2, 4, 8, 16))
def test_representatives_validate_at_all_supported_orders(q):
    gf = field(q)
    reps = representatives(gf)
    assert set(reps) == set(LABELS)
    for label, s in reps.items():
        assert s.dim == 2
        assert point_class_counts(s) == expected_point_distribution(label, q)


def test_expected_distribution_rows_sum(gf8):
    q = 8
    for label in LABELS:
        assert sum(expected_point_distribution(label, q)) == q * q + q + 1


def test_empty_base_labels_have_no_rank1_points():
    for q in (2, 4, 8):
        for label in LABELS:
            r1 = expected_point_distribution(label, q)[0]
            assert (r1 == 0) == (label in EMPTY_BASE_LABELS)


@pytest.mark.parametrize("q,c", [(2, 1), (4, 1), (8, 2), (16, 1)])
def test_sigma18_parameter_search(q, c):
    gf = field(q)
    assert sigma18_parameter(gf) == c
    # the defining conditions
    assert gf.trace(gf.inv(c)) == gf.trace(1)
    assert all(gf.mul(gf.sq(t), t) ^ t ^ c for t in gf.elements)


@pytest.mark.parametrize("q,b,c", [(2, 0, 1), (4, 0, 2), (8, 0, 1), (16, 0, 8)])
def test_sigma20_parameter_search(q, b, c):
    gf = field(q)
    assert sigma20_parameters(gf) == (b, c)
    assert b != 1
    assert gf.trace(gf.div(c, 1 ^ gf.sq(b))) == 1


@pytest.mark.parametrize("q,a", [(2, 1), (4, 2), (8, 1), (16, 8)])
def test_sigma21_parameter_search(q, a):
    gf = field(q)
    assert sigma21_parameter(gf) == a
    assert gf.trace(a) == 1


@pytest.mark.parametrize("q", (2, 4, 8, 16))
def test_signature_collisions_are_only_the_known_pair(q):
    gf = field(q)
    table = signature_table(gf)
    multi = [labels for labels in table.values() if len(labels) > 1]
    assert multi == [("Sigma3", "Sigma4")]
    assert sum(len(ls) for ls in table.values()) == 18


def test_orbit_atlas_q2_sizes(gf2):
    sets = orbit_atlas(gf2)
    assert {label: len(keys) for label, keys in sets.items()} == ORBIT_SIZES_Q2
    assert sum(len(k) for k in sets.values()) == 883


def test_orbit_atlas_rejects_large_fields(gf8):
    with pytest.raises(ConfigurationError):
        orbit_atlas(gf8)


def test_planes_meeting_nucleus_count():
    assert planes_meeting_nucleus_count(2) == 883
    assert planes_meeting_nucleus_count(4) == 114661
    assert planes_meeting_nucleus_count(8) == 21870217


@pytest.mark.parametrize("q", (2, 4))
def test_classify_plane_fixes_representatives(q):
    gf = field(q)
    for label in LABELS:
        assert classify_plane(representative(gf, label)) == label


def test_classify_plane_on_moved_representatives(gf4):
    g0, g1 = generators(gf4)[:2]
    for label in LABELS:
        moved = act_subspace(act_subspace(representative(gf4, label), g0), g1)
        assert classify_plane(moved) == label


def test_classify_plane_on_moved_representatives_q8(gf8):
    g0, g1 = generators(gf8)[:2]
    for label in LABELS:
        moved = act_subspace(act_subspace(representative(gf8, label), g1), g0)
        assert classify_plane(moved) == label


def test_classify_plane_input_validation(gf4):
    line = span(gf4, [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)])
    with pytest.raises(ValueError):
        classify_plane(line)
    off = span(gf4, [(1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1)])
    with pytest.raises(OutOfFamilyError):
        classify_plane(off)


def test_representative_pattern_overrides(gf4):
    # Sigma21: any a of trace 1 stays in the orbit
    rows, pars = representative_pattern(gf4, "Sigma21", {"a": 3})
    assert pars == {"a": 3}
    alt = plane_from_pattern(gf4, rows)
    assert k_equivalent(representative(gf4, "Sigma21"), alt)
    # Sigma20: with b = 0 any c of trace 1 stays in the orbit
    rows, _ = representative_pattern(gf4, "Sigma20", {"b": 0, "c": 3})
    alt = plane_from_pattern(gf4, rows)
    assert k_equivalent(representative(gf4, "Sigma20"), alt)


def test_representative_pattern_override_validation(gf4):
    with pytest.raises(ConfigurationError):
        representative_pattern(gf4, "Sigma9", {"a": 1})
    with pytest.raises(ConfigurationError):
        representative_pattern(gf4, "Sigma21", {"a": 9})
    with pytest.raises(ConfigurationError):
        representative_pattern(gf4, "Sigma20", {"b": 0})
    with pytest.raises(ConfigurationError):
        representative_pattern(gf4, "NotALabel")


def test_representative_parameters_table(gf4):
    pars = representative_parameters(gf4)
    assert pars["Sigma18"] == {"c": 1}
    assert pars["Sigma20"] == {"b": 0, "c": 2}
    assert pars["Sigma21"] == {"a": 2}
    assert pars["Sigma23"] == {"a": 2}
    assert pars["Sigma9"] == {}


def test_net_plane_round_trip(gf4):
    for label in ("Sigma1", "Sigma9", "Sigma18", "SigmaN"):
        s = representative(gf4, label)
        forms = net_of_plane(s)
        assert len(forms) == 3
        assert plane_of_net(gf4, forms) == s


def test_plane_of_net_rejects_dependent_forms(gf4):
    with pytest.raises(ValueError):
        plane_of_net(gf4, [(1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)])


def test_net_base_points_are_common_zeros(gf4):
    forms = example_net(gf4)
    assert net_base_points(gf4, forms) == []
    s9 = net_of_plane(representative(gf4, "Sigma9"))
    base = net_base_points(gf4, s9)
    assert len(base) == expected_point_distribution("Sigma9", 4)[0]
    for p in base:
        for f in s9:
            assert form_eval(gf4, f, p) == 0


def test_net_double_line_count_counts_squares(gf4):
    # the net of the nucleus plane consists entirely of double lines
    forms = net_of_plane(representative(gf4, "SigmaN"))
    assert net_double_line_count(gf4, forms) == 4 * 4 + 4 + 1
    assert net_double_line_count(gf4, example_net(gf4)) == 1


@pytest.mark.parametrize("q", (2, 4, 8))
def test_classify_net_known_example(q):
    gf = field(q)
    assert classify_net(gf, example_net(gf)) == "Sigma18"


def test_classify_net_matches_plane_labels(gf2):
    for label in LABELS:
        forms = net_of_plane(representative(gf2, label))
        assert classify_net(gf2, forms) == label


def test_verify_double_lines_q2_exhaustive(gf2):
    report = verify_double_lines(gf2)
    assert report["mode"] == "exhaustive"
    assert report["totals"]["planes"] == 1395
    assert report["totals"]["meeting_nucleus_plane"] == 883
    assert report["totals"]["violations"] == 0


@pytest.mark.slow
def test_verify_partition_q8_representative():
    """Breadth-first orbit sizes at q = 8: disjoint, summing to the meeting
    count.  Runs for many minutes and needs a few GB; deselected by default."""
    report = verify_partition(field(8), workers=4)
    assert report["mode"] == "representative"
    assert all(c["pass"] for c in report["checks"])
    assert sum(row["size"] for row in report["orbits"]) == 21870217


@pytest.mark.parametrize("q", (2, 4, 8, 16))
def test_verify_distributions_all_pass(q):
    report = verify_distributions(field(q))
    assert report["suite"] == "distributions"
    assert all(c["pass"] for c in report["checks"])
    assert len(report["orbits"]) == 18


def test_verify_known_net_report(gf4):
    report = verify_known_net(gf4)
    names = [c["name"] for c in report["checks"]]
    assert names == ["classifies_as_sigma18", "empty_base", "single_double_line"]
    assert all(c["pass"] for c in report["checks"])
