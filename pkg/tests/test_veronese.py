"""The Veronese surface, its nucleus plane, and the conic/hyperplane duality."""

import pytest

from conicnets.gf import field
from conicnets.projgeom import normalize_point, pg_points
from conicnets.veronese import (
    POINT_CLASSES,
    census,
    classify_conic,
    classify_hyperplane,
    conic_nucleus,
    conic_plane_of,
    delta,
    delta_inv,
    expected_census,
    form_eval,
    form_from_str,
    form_to_str,
    nucleus_plane,
    point_class,
    rank_sym3,
    sym_matrix,
    veronese,
)


def test_veronese_images_have_rank_one(gf4):
    for p in pg_points(gf4, 2):
        y = veronese(gf4, p)
        assert rank_sym3(gf4, y) == 1
        assert point_class(gf4, y) == "rank1"


def test_veronese_is_injective(gf8):
    images = {normalize_point(gf8, veronese(gf8, p)) for p in pg_points(gf8, 2)}
    assert len(images) == 8 ** 2 + 8 + 1


def test_sym_matrix_layout():
    m = sym_matrix((1, 2, 3, 4, 5, 6))
    assert m == ((1, 2, 3), (2, 4, 5), (3, 5, 6))


def test_nucleus_plane_points_are_nuclear(gf4):
    pn = nucleus_plane(gf4)
    assert pn.dim == 2
    for y in pn.points():
        assert point_class(gf4, y) == "rank2_nuclear"
        # zero diagonal in matrix form
        assert y[0] == y[3] == y[5] == 0


@pytest.mark.parametrize("q", (2, 4, 8))
def test_census_matches_closed_forms(q):
    gf = field(q)
    got = census(gf)
    want = expected_census(q)
    assert got == want
    assert set(got) == set(POINT_CLASSES)
    assert got["rank1"] == q * q + q + 1
    assert got["rank2_nuclear"] == q * q + q + 1
    assert got["rank2_secant"] == (q * q - 1) * (q * q + q + 1)
    assert got["rank3"] == q ** 5 - q * q
    assert sum(got.values()) == (q ** 6 - 1) // (q - 1)


def test_form_eval_agrees_with_veronese_pairing(gf4):
    # f(p) equals the dot product of the coefficient vector with nu(p)
    forms = [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (1, 2, 3, 0, 1, 2)]
    for form in forms:
        for p in pg_points(gf4, 2):
            y = veronese(gf4, p)
            dot = 0
            for a, b in zip(form, y):
                dot ^= gf4.mul(a, b)
            assert form_eval(gf4, form, p) == dot


@pytest.mark.parametrize("q", (2, 4, 8))
def test_classify_conic_known_forms(q):
    gf = field(q)
    assert classify_conic(gf, (1, 0, 0, 0, 0, 0)) == "DoubleLine"      # X0^2
    assert classify_conic(gf, (1, 0, 0, 1, 0, 0)) == "DoubleLine"      # (X0+X1)^2
    assert classify_conic(gf, (0, 1, 0, 0, 0, 0)) == "RealPair"        # X0*X1
    assert classify_conic(gf, (0, 0, 1, 1, 0, 0)) == "Nonsingular"     # X0*X2+X1^2
    # X0^2 + X0*X1 + a*X1^2 irreducible iff trace(a) = 1
    a = next(v for v in gf.elements if gf.trace(v) == 1)
    assert classify_conic(gf, (1, 1, 0, a, 0, 0)) == "ImaginaryPair"
    with pytest.raises(ValueError):
        classify_conic(gf, (0, 0, 0, 0, 0, 0))


def test_conic_rational_point_counts(gf4):
    q = gf4.q
    counts = {"DoubleLine": q + 1, "RealPair": 2 * q + 1,
              "ImaginaryPair": 1, "Nonsingular": q + 1}
    for form in [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0), (1, 1, 0, 2, 0, 0)]:
        kind = classify_conic(gf4, form)
        hits = sum(1 for p in pg_points(gf4, 2) if form_eval(gf4, form, p) == 0)
        assert hits == counts[kind]


def test_delta_round_trip(gf4):
    for form in [(1, 0, 0, 0, 0, 0), (0, 1, 2, 0, 0, 3), (1, 1, 1, 1, 1, 1)]:
        h = delta(gf4, form)
        assert h.dim == 4
        back = delta_inv(h)
        assert back == normalize_point(gf4, form)
        # incidence: nu(p) in h exactly when f(p) = 0
        for p in pg_points(gf4, 2):
            assert h.contains_point(veronese(gf4, p)) == (form_eval(gf4, form, p) == 0)


def test_classify_hyperplane_consistent(gf4):
    assert classify_hyperplane(delta(gf4, (1, 0, 0, 0, 0, 0))) == "DoubleLine"
    assert classify_hyperplane(delta(gf4, (0, 1, 0, 0, 0, 0))) == "RealPair"
    assert classify_hyperplane(delta(gf4, (0, 0, 1, 1, 0, 0))) == "Nonsingular"


def test_form_string_round_trip():
    for form in [(1, 0, 0, 0, 0, 0), (0, 0, 3, 1, 0, 0), (1, 2, 3, 4, 5, 6)]:
        assert form_from_str(form_to_str(form)) == form
    assert form_from_str("X1^2 + X0*X2") == (0, 0, 1, 1, 0, 0)
    assert form_from_str("3*X0^2") == (3, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        form_from_str("X3^2")


def test_conic_plane_and_nucleus(gf4):
    # the conic plane over a line of PG(2,q) holds its Veronese image; the
    # image conic's nucleus is a nuclear rank-2 point on that plane
    line = (0, 0, 1)  # Z(X2)
    y = veronese(gf4, (1, 1, 0))
    # a rank-2 secant point on the line's chord: nu(1,0,0) + nu(0,1,0)
    p1, p2 = veronese(gf4, (1, 0, 0)), veronese(gf4, (0, 1, 0))
    secant = tuple(a ^ b for a, b in zip(p1, p2))
    assert rank_sym3(gf4, secant) == 2
    dual, plane = conic_plane_of(gf4, secant)
    assert dual == normalize_point(gf4, line)
    assert plane.dim == 2
    assert plane.contains_point(y)
    nuc = conic_nucleus(gf4, line)
    assert point_class(gf4, nuc) == "rank2_nuclear"
    assert plane.contains_point(nuc)
    assert nucleus_plane(gf4).contains_point(nuc)
    with pytest.raises(ValueError):
        conic_plane_of(gf4, veronese(gf4, (1, 0, 0)))  # rank 1, not rank 2
