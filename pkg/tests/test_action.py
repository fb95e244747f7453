"""The PGL(3,q) action on PG(2,q) and its lift to PG(5,q)."""

import pytest

from conicnets.action import (
    IDENTITY3,
    act_point,
    act_point_pg2,
    act_subspace,
    certify_generators,
    generators,
    k_equivalent,
    lift,
    mat3_inv,
    mat3_mul,
    normalize_mat3,
    orbit_keys,
    pgl_elements,
    pgl_order,
    stabilizer_order,
    stabilizer_order_direct,
)
from conicnets.atlas import representative
from conicnets.errors import ResourceBudgetError
from conicnets.gf import field
from conicnets.projgeom import pg_points, span
from conicnets.veronese import nucleus_plane, veronese


def test_pgl_order_formula():
    assert pgl_order(2) == 168
    assert pgl_order(4) == 60480
    assert pgl_order(8) == 16482816


@pytest.mark.parametrize("q", (2, 4))
def test_generators_generate_the_whole_group(q):
    assert certify_generators(field(q)) == pgl_order(q)


def test_matrix_algebra(gf4):
    gens = generators(gf4)
    for a in gens:
        inv = mat3_inv(gf4, a)
        assert normalize_mat3(gf4, mat3_mul(gf4, a, inv)) == IDENTITY3
        for b in gens:
            ab = mat3_mul(gf4, a, b)
            # (ab)^-1 = b^-1 a^-1
            assert normalize_mat3(gf4, mat3_mul(gf4, mat3_inv(gf4, b), mat3_inv(gf4, a))) \
                == normalize_mat3(gf4, mat3_inv(gf4, ab))


def test_lift_equivariance_exhaustive_q2(gf2):
    """lift(A) . nu(p) = nu(A . p) for every A in PGL(3,2) and every point."""
    pts = pg_points(gf2, 2)
    for a in pgl_elements(gf2):
        l = lift(gf2, a)
        for p in pts:
            assert act_point(gf2, l, veronese(gf2, p)) == veronese(gf2, act_point_pg2(gf2, a, p))


def test_lift_equivariance_sampled_q8(gf8):
    pts = pg_points(gf8, 2)[::7]
    for a in generators(gf8):
        l = lift(gf8, a)
        for p in pts:
            assert act_point(gf8, l, veronese(gf8, p)) == veronese(gf8, act_point_pg2(gf8, a, p))


def test_lift_is_a_homomorphism(gf4):
    gens = generators(gf4)
    y = veronese(gf4, (1, 2, 3))
    for a in gens:
        for b in gens:
            ab = mat3_mul(gf4, a, b)
            assert act_point(gf4, lift(gf4, ab), y) \
                == act_point(gf4, lift(gf4, a), act_point(gf4, lift(gf4, b), y))


def test_act_subspace_preserves_structure(gf4):
    s = representative(gf4, "Sigma9")
    pn = nucleus_plane(gf4)
    for a in generators(gf4):
        t = act_subspace(s, a)
        assert t.dim == s.dim
        # K fixes the nucleus plane setwise
        assert act_subspace(pn, a) == pn


def test_nucleus_plane_is_k_invariant_q2(gf2):
    pn = nucleus_plane(gf2)
    assert orbit_keys(pn) == {pn.key_int()}
    assert stabilizer_order(pn) == pgl_order(2)


@pytest.mark.parametrize("q", (2, 4))
def test_orbit_stabilizer_products(q):
    gf = field(q)
    # a point orbit, a line orbit, and two plane orbits
    probes = [
        span(gf, [veronese(gf, (1, 0, 0))]),
        span(gf, [veronese(gf, (1, 0, 0)), veronese(gf, (0, 1, 0))]),
        representative(gf, "Sigma8"),
        representative(gf, "Sigma19"),
    ]
    for s in probes:
        n = len(orbit_keys(s))
        assert n * stabilizer_order(s) == pgl_order(q)


def test_stabilizer_direct_agrees_q2(gf2):
    for label in ("Sigma1", "Sigma9", "Sigma18"):
        s = representative(gf2, label)
        assert stabilizer_order_direct(s) == stabilizer_order(s)


def test_k_equivalent_on_moved_copies(gf4):
    s = representative(gf4, "Sigma17")
    a = generators(gf4)[1]
    moved = act_subspace(act_subspace(s, a), generators(gf4)[0])
    assert k_equivalent(s, moved)
    assert not k_equivalent(s, representative(gf4, "Sigma18"))


def test_orbit_budget_enforced(gf4):
    s = representative(gf4, "Sigma22")  # orbit size 60480
    with pytest.raises(ResourceBudgetError) as info:
        orbit_keys(s, max_keys=1000)
    assert info.value.partial >= 1000
