"""The quadric Veronese embedding of PG(2,q) in PG(5,q), q even.

A point of PG(5,q) is identified with a symmetric 3x3 matrix via

    (y0, y1, y2, y3, y4, y5)  <->  [[y0, y1, y2],
                                    [y1, y3, y4],
                                    [y2, y4, y5]]

The Veronese image of (u0, u1, u2) is the rank-1 point
(u0^2, u0*u1, u0*u2, u1^2, u1*u2, u2^2).  In even characteristic the
matrices with zero diagonal form a distinguished plane, the nucleus plane,
and every point off the Veronese surface has matrix rank 2 or 3.  Rank is
computed by exact Gaussian elimination.

A quadratic form a00*X0^2 + a01*X0*X1 + a02*X0*X2 + a11*X1^2 + a12*X1*X2
+ a22*X2^2 is stored as the 6-tuple (a00, a01, a02, a11, a12, a22); the
form corresponds to the hyperplane Z(a00*Y0 + a01*Y1 + a02*Y2 + a11*Y3
+ a12*Y4 + a22*Y5), so f(p) = 0 exactly when the Veronese image of p lies
in that hyperplane.
"""

from __future__ import annotations

from .errors import ClassificationError
from .gf import GF
from .projgeom import (
    Subspace,
    meet,
    normalize_point,
    nullspace,
    pg_points,
    rref,
    span,
)

POINT_CLASSES = ("rank1", "rank2_nuclear", "rank2_secant", "rank3")
CONIC_CLASSES = ("DoubleLine", "RealPair", "ImaginaryPair", "Nonsingular")


def veronese(gf: GF, p) -> tuple[int, ...]:
    """Image of a projective point of PG(2,q); normalized when p is."""
    u0, u1, u2 = p
    mul = gf._mul
    return (
        mul[u0][u0], mul[u0][u1], mul[u0][u2],
        mul[u1][u1], mul[u1][u2], mul[u2][u2],
    )


def sym_matrix(y) -> tuple[tuple[int, int, int], ...]:
    y0, y1, y2, y3, y4, y5 = y
    return ((y0, y1, y2), (y1, y3, y4), (y2, y4, y5))


def rank_sym3(gf: GF, y) -> int:
    """Rank of the symmetric matrix of y, by Gaussian elimination."""
    mul, inv = gf._mul, gf._inv
    m = [list(r) for r in sym_matrix(y)]
    rank = 0
    for c in range(3):
        pr = None
        for i in range(rank, 3):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[rank], m[pr] = m[pr], m[rank]
        a = m[rank][c]
        if a != 1:
            mia = mul[inv[a]]
            m[rank] = [mia[v] for v in m[rank]]
        prow = m[rank]
        for i in range(rank + 1, 3):
            if m[i][c]:
                mf = mul[m[i][c]]
                m[i] = [m[i][j] ^ mf[prow[j]] for j in range(3)]
        rank += 1
    return rank


def nucleus_plane(gf: GF) -> Subspace:
    """The plane of zero-diagonal symmetric matrices."""
    return span(gf, [(0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0)])


def point_class(gf: GF, y) -> str:
    """rank1 (Veronese surface), rank3, or one of the two rank-2 classes:
    rank2_nuclear (zero diagonal, i.e. on the nucleus plane) and
    rank2_secant (the rest of the secant variety)."""
    r = rank_sym3(gf, y)
    if r == 1:
        return "rank1"
    if r == 3:
        return "rank3"
    y0, _, _, y3, _, y5 = y
    return "rank2_nuclear" if (y0 | y3 | y5) == 0 else "rank2_secant"


def census(gf: GF) -> dict[str, int]:
    """Point-class counts over all of PG(5,q)."""
    counts = dict.fromkeys(POINT_CLASSES, 0)
    for y in pg_points(gf, 5):
        counts[point_class(gf, y)] += 1
    return counts


def expected_census(q: int) -> dict[str, int]:
    n2 = q * q + q + 1
    return {
        "rank1": n2,
        "rank2_nuclear": n2,
        "rank2_secant": (q * q - 1) * n2,
        "rank3": q**5 - q * q,
    }


# -- quadratic forms ------------------------------------------------------


def form_eval(gf: GF, form, p) -> int:
    """f(p); equals the pairing of the form vector with the Veronese image."""
    mul = gf._mul
    nu = veronese(gf, p)
    acc = 0
    for a, m in zip(form, nu):
        if a and m:
            acc ^= mul[a][m]
    return acc


def classify_conic(gf: GF, form) -> str:
    """Orbit of a nonzero conic under projectivities of PG(2,q), q even.

    Double lines are exactly the forms with zero cross coefficients (perfect
    squares of linear forms); the remaining classes are separated by their
    rational point counts 2q+1 (real line pair), 1 (imaginary line pair,
    meeting point only) and q+1 (nonsingular).
    """
    form = tuple(form)
    if len(form) != 6:
        raise ValueError("a conic is a 6-tuple of coefficients")
    if not any(form):
        raise ValueError("the zero form is not a conic")
    if form[1] == 0 and form[2] == 0 and form[4] == 0:
        return "DoubleLine"
    q = gf.q
    count = sum(1 for p in pg_points(gf, 2) if form_eval(gf, form, p) == 0)
    if count == 2 * q + 1:
        return "RealPair"
    if count == 1:
        return "ImaginaryPair"
    if count == q + 1:
        return "Nonsingular"
    raise ClassificationError("conic %r has impossible point count %d" % (form, count))


def delta(gf: GF, form) -> Subspace:
    """Hyperplane of PG(5,q) whose points are the zero locus pairing of f."""
    form = normalize_point(gf, form)
    return Subspace(gf, 5, nullspace(gf, (form,), 6))


def delta_inv(h: Subspace) -> tuple[int, ...]:
    """Coefficient 6-tuple (normalized) of the hyperplane h."""
    if h.n != 5 or len(h.rows) != 5:
        raise ValueError("expected a hyperplane of PG(5,q)")
    ann = nullspace(h.gf, h.rows, 6)
    return normalize_point(h.gf, ann[0])


def classify_hyperplane(h: Subspace) -> str:
    """Conic class of the form cutting out h.

    Cross-checked against the number of Veronese points the hyperplane
    actually contains.
    """
    gf = h.gf
    form = delta_inv(h)
    kind = classify_conic(gf, form)
    hits = sum(1 for p in pg_points(gf, 2) if h.contains_point(veronese(gf, p)))
    q = gf.q
    expected = {"DoubleLine": q + 1, "RealPair": 2 * q + 1,
                "ImaginaryPair": 1, "Nonsingular": q + 1}[kind]
    if hits != expected:
        raise ClassificationError(
            "hyperplane %s classified %s but contains %d Veronese points"
            % (h.key_hex(), kind, hits)
        )
    return kind


def form_to_str(form) -> str:
    names = ("X0^2", "X0*X1", "X0*X2", "X1^2", "X1*X2", "X2^2")
    terms = []
    for a, name in zip(form, names):
        if a == 0:
            continue
        terms.append(name if a == 1 else "%d*%s" % (a, name))
    return " + ".join(terms) if terms else "0"


def form_from_str(text: str) -> tuple[int, ...]:
    """Parse the output format of form_to_str back to a 6-tuple."""
    index = {"X0^2": 0, "X0*X1": 1, "X1*X0": 1, "X0*X2": 2, "X2*X0": 2,
             "X1^2": 3, "X1*X2": 4, "X2*X1": 4, "X2^2": 5}
    coeffs = [0, 0, 0, 0, 0, 0]
    text = text.replace(" ", "")
    if not text or text == "0":
        raise ValueError("empty form")
    for term in text.split("+"):
        if not term:
            raise ValueError("malformed form %r" % text)
        coeff = 1
        mono = term
        head, star, rest = term.partition("*")
        if head.isdigit():
            coeff = int(head)
            mono = rest
        if mono not in index:
            raise ValueError("unknown monomial %r in form" % mono)
        coeffs[index[mono]] ^= 0 if coeff == 0 else coeff
    return tuple(coeffs)


# -- per-field cached geometry --------------------------------------------


class VeroneseModel:
    """Cached tables for one field: PG(2,q) points and lines, Veronese
    images, conic planes and their nuclei."""

    def __init__(self, gf: GF):
        self.gf = gf
        self.points2 = pg_points(gf, 2)
        self.point2_index = {p: i for i, p in enumerate(self.points2)}
        self.nu = [veronese(gf, p) for p in self.points2]
        self.nu_index = {v: i for i, v in enumerate(self.nu)}
        mul = gf._mul
        self.line_duals = list(self.points2)
        self.line_points: list[tuple[int, ...]] = []
        for u, v, w in self.line_duals:
            idxs = []
            for i, (x, y, z) in enumerate(self.points2):
                if mul[u][x] ^ mul[v][y] ^ mul[w][z] == 0:
                    idxs.append(i)
            self.line_points.append(tuple(idxs))
        self.line_index = {d: i for i, d in enumerate(self.line_duals)}
        self._conic_planes: list[tuple[tuple[int, ...], ...]] | None = None
        self._nuclei: list[tuple[int, ...]] | None = None
        self._nucleus_rows = nucleus_plane(gf).rows

    @property
    def conic_planes(self):
        if self._conic_planes is None:
            self._conic_planes = [
                rref(self.gf, [self.nu[i] for i in idxs])
                for idxs in self.line_points
            ]
        return self._conic_planes

    @property
    def nuclei(self):
        if self._nuclei is None:
            self._nuclei = [self._nucleus_of(i) for i in range(len(self.line_duals))]
        return self._nuclei

    def conic_points(self, line_idx: int) -> set[tuple[int, ...]]:
        return {self.nu[i] for i in self.line_points[line_idx]}

    def _nucleus_of(self, line_idx: int) -> tuple[int, ...]:
        """Meet of the tangent lines at two conic points."""
        gf = self.gf
        plane = Subspace(gf, 5, self.conic_planes[line_idx])
        conic = self.conic_points(line_idx)
        pts = sorted(conic)
        t1 = self._tangent_at(plane, conic, pts[0])
        t2 = self._tangent_at(plane, conic, pts[1])
        pt = meet(t1, t2)
        if pt is None or len(pt.rows) != 1:
            raise ClassificationError("tangent lines failed to meet in a point")
        nucleus = pt.rows[0]
        if not _in_rows(gf, self._nucleus_rows, nucleus):
            raise ClassificationError("conic nucleus %r left the nucleus plane" % (nucleus,))
        return nucleus

    def _tangent_at(self, plane: Subspace, conic, at) -> Subspace:
        gf = self.gf
        seen = set()
        tangent = None
        for other in plane.points():
            if other == at:
                continue
            line = span(gf, [at, other])
            key = line.rows
            if key in seen:
                continue
            seen.add(key)
            hits = sum(1 for c in conic if line.contains_point(c))
            if hits == 1:
                if tangent is not None:
                    raise ClassificationError("two tangents at one conic point")
                tangent = line
        if tangent is None:
            raise ClassificationError("no tangent line at %r" % (at,))
        return tangent


def _in_rows(gf: GF, rows, vec) -> bool:
    mul = gf._mul
    v = list(vec)
    for row in rows:
        p = next(j for j, x in enumerate(row) if x)
        if v[p]:
            mf = mul[v[p]]
            v = [v[j] ^ mf[row[j]] for j in range(len(v))]
    return not any(v)


_MODELS: dict[GF, VeroneseModel] = {}


def model(gf: GF) -> VeroneseModel:
    m = _MODELS.get(gf)
    if m is None:
        m = VeroneseModel(gf)
        _MODELS[gf] = m
    return m


def conic_plane_of(gf: GF, y) -> tuple[tuple[int, ...], Subspace]:
    """The unique line of PG(2,q) whose conic plane contains the rank-2
    point y, with that plane; certified unique by full scan."""
    if rank_sym3(gf, y) != 2:
        raise ValueError("conic planes are defined for rank-2 points only")
    m = model(gf)
    y = normalize_point(gf, y)
    matches = [i for i, rows in enumerate(m.conic_planes) if _in_rows(gf, rows, y)]
    if len(matches) != 1:
        raise ClassificationError(
            "rank-2 point %r lies on %d conic planes" % (y, len(matches))
        )
    i = matches[0]
    return m.line_duals[i], Subspace(gf, 5, m.conic_planes[i])


def conic_nucleus(gf: GF, line_dual) -> tuple[int, ...]:
    """Nucleus of the conic that is the Veronese image of the given line."""
    m = model(gf)
    idx = m.line_index.get(normalize_point(gf, line_dual))
    if idx is None:
        raise ValueError("%r is not a line of PG(2,%d)" % (line_dual, gf.q))
    return m.nuclei[idx]
