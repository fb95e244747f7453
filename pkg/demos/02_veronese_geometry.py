"""The Veronese surface of PG(5,q) for even q, and why a nucleus plane exists.

Points of PG(5,q) are symmetric 3x3 matrices up to scalar.  The Veronese
image of the plane is the rank-1 locus; in characteristic 2 the zero-diagonal
matrices form a plane (the nucleus plane) consisting of rank-2 points that
behave like no odd-characteristic point does.
"""

from conicnets import (
    census,
    classify_conic,
    delta,
    expected_census,
    field,
    form_to_str,
    nucleus_plane,
    pg_points,
    point_class,
    veronese,
)


def main():
    gf = field(4)
    q = gf.q

    p = (1, 2, 3)
    y = veronese(gf, p)
    print("nu%r = %r, class %s" % (p, y, point_class(gf, y)))

    pn = nucleus_plane(gf)
    print("\nnucleus plane rows:", pn.rows)
    classes = {point_class(gf, pt) for pt in pn.points()}
    print("classes on the nucleus plane:", classes)

    print("\npoint-class census of PG(5,%d):" % q)
    got = census(gf)
    want = expected_census(q)
    for name in got:
        mark = "ok" if got[name] == want[name] else "MISMATCH"
        print("  %-13s %7d  (closed form %7d)  %s" % (name, got[name], want[name], mark))

    print("\nconic classes via the form <-> hyperplane duality:")
    for form in [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0), (1, 1, 0, 2, 0, 0)]:
        kind = classify_conic(gf, form)
        h = delta(gf, form)
        hits = sum(1 for pt in pg_points(gf, 2) if h.contains_point(veronese(gf, pt)))
        print("  %-28s %-14s %2d rational points" % (form_to_str(form), kind, hits))


if __name__ == "__main__":
    main()
