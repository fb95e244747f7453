"""The invariants that tell the 18 plane orbits apart.

For a plane meeting the nucleus plane we compute: the distribution of its
points over the four rank classes, the determinantal cubic with its
factorization type, and the conic classes of the hyperplanes through it.
"""

from conicnets import (
    LABELS,
    cubic_form,
    cubic_type,
    field,
    plane_signature,
    representative,
)
from conicnets.invariants import CUBIC_MONOMIALS


def _cubic_str(cubic):
    names = {
        (3, 0, 0): "x^3", (2, 1, 0): "x^2y", (2, 0, 1): "x^2z",
        (1, 2, 0): "xy^2", (1, 1, 1): "xyz", (1, 0, 2): "xz^2",
        (0, 3, 0): "y^3", (0, 2, 1): "y^2z", (0, 1, 2): "yz^2", (0, 0, 3): "z^3",
    }
    terms = []
    for c, m in zip(cubic, CUBIC_MONOMIALS):
        if c:
            terms.append(names[m] if c == 1 else "%d%s" % (c, names[m]))
    return " + ".join(terms) if terms else "0"


def main():
    gf = field(4)
    print("orbit   od0 (r1, r2n, r2s, r3)   cubic")
    print("-" * 72)
    for label in LABELS:
        s = representative(gf, label)
        sig = plane_signature(s)
        if sig.cubic_vanishes:
            desc = "vanishes identically (plane inside the secant variety)"
        else:
            desc = "%s, %d points" % (sig.cubic_kind, sig.cubic_point_count)
        print("%-7s %-24r %s" % (label, sig.point_counts, desc))

    print("\nthe cubic of one plane, written out:")
    s = representative(gf, "Sigma19")
    print("  Sigma19:", _cubic_str(cubic_form(s)))
    print("  type:", cubic_type(gf, cubic_form(s)))


if __name__ == "__main__":
    main()
