"""Classify nets of conics containing a double line.

A net is a 3-space of ternary quadratic forms; under the duality between
forms and hyperplanes it corresponds to a plane of PG(5,q), and the net
contains a double line exactly when that plane meets the nucleus plane.
"""

from conicnets import (
    classify_net,
    example_net,
    field,
    form_to_str,
    net_base_points,
    net_double_line_count,
    net_of_plane,
    plane_of_net,
    representative,
)


def main():
    gf = field(4)

    forms = example_net(gf)
    print("example net:")
    for f in forms:
        print("   ", form_to_str(f))
    print("label:", classify_net(gf, forms))
    print("base points:", net_base_points(gf, forms))
    print("double lines in the net:", net_double_line_count(gf, forms))

    print("\nround trip through the plane picture:")
    plane = plane_of_net(gf, forms)
    print("  plane rows:", plane.rows)
    back = net_of_plane(plane)
    print("  back to forms:", [form_to_str(f) for f in back])
    assert plane_of_net(gf, back) == plane

    print("\nnets of a few other representatives:")
    for label in ("Sigma1", "Sigma9", "SigmaN"):
        net = net_of_plane(representative(gf, label))
        kinds = ", ".join(form_to_str(f) for f in net)
        print("  %-7s  base %2d  double lines %2d   [%s]"
              % (label, len(net_base_points(gf, net)),
                 net_double_line_count(gf, net), kinds))


if __name__ == "__main__":
    main()
