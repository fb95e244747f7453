"""Tour of the GF(2^e) arithmetic layer.

Elements are plain ints 0..q-1 encoding polynomials over GF(2); addition is
XOR and multiplication reduces modulo a fixed irreducible polynomial.
"""

from conicnets import field


def main():
    gf = field(8)
    print("field:", gf)
    print("modulus bit mask: 0x%x" % gf.modulus)

    a, b = 5, 7
    print("\n%d + %d = %d" % (a, b, gf.add(a, b)))
    print("%d * %d = %d" % (a, b, gf.mul(a, b)))
    print("%d / %d = %d" % (a, b, gf.div(a, b)))
    print("%d^-1  = %d,  check: %d" % (a, gf.inv(a), gf.mul(a, gf.inv(a))))

    g = gf.primitive_element()
    powers = []
    x = 1
    for _ in range(gf.q - 1):
        powers.append(x)
        x = gf.mul(x, g)
    print("\nprimitive element %d generates:" % g, powers)

    print("\nsquaring is a bijection (Frobenius); square roots are exact:")
    for a in gf.elements:
        assert gf.sqrt(gf.sq(a)) == a
    print("  sqrt(sq(a)) == a for all", gf.q, "elements")

    print("\ntrace values:", [gf.trace(a) for a in gf.elements])
    print("x^2 + x = c is solvable exactly when trace(c) = 0:")
    for c in gf.elements:
        r = gf.artin_schreier_root(c)
        tag = "root %d" % r if r is not None else "no root"
        print("  c=%d  trace=%d  %s" % (c, gf.trace(c), tag))


if __name__ == "__main__":
    main()
