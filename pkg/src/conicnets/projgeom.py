"""Projective geometry over GF(q): points, subspaces, enumeration.

Points of PG(n, q) are (n+1)-tuples of field ints, normalized so the first
nonzero coordinate is 1.  A subspace is held as its canonical reduced
row-echelon basis (pivot columns strictly increasing, pivots 1, zeros above
and below), which makes equality testing and hashing structural.  The
packed-int form of that basis doubles as the orbit hash key; its hex string
is the stable serialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import prod

from .gf import GF, field


# -- row reduction ------------------------------------------------------


def rref(gf: GF, rows) -> tuple[tuple[int, ...], ...]:
    """Canonical reduced row-echelon form; zero rows are dropped."""
    mul, inv = gf._mul, gf._inv
    work = [list(r) for r in rows]
    if not work:
        return ()
    width = len(work[0])
    r = 0
    for c in range(width):
        pr = None
        for i in range(r, len(work)):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        a = work[r][c]
        if a != 1:
            ia = inv[a]
            mia = mul[ia]
            work[r] = [mia[v] for v in work[r]]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                mf = mul[work[i][c]]
                row = work[i]
                work[i] = [row[j] ^ mf[prow[j]] for j in range(width)]
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r])


def rank(gf: GF, rows) -> int:
    return len(rref(gf, rows))


def nullspace(gf: GF, rows, width: int | None = None) -> tuple[tuple[int, ...], ...]:
    """RREF basis of {v : row . v = 0 for every row}, rows as row vectors."""
    rows = tuple(rows)
    if width is None:
        if not rows:
            raise ValueError("need explicit width for an empty row set")
        width = len(rows[0])
    red = rref(gf, rows)
    pivots = []
    for row in red:
        for j, v in enumerate(row):
            if v:
                pivots.append(j)
                break
    free = [j for j in range(width) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * width
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = red[i][f]  # characteristic 2: no sign flip
        basis.append(tuple(v))
    return rref(gf, basis)


# -- points -------------------------------------------------------------


def normalize_point(gf: GF, coords) -> tuple[int, ...]:
    pt = tuple(coords)
    for a in pt:
        if a:
            if a != 1:
                m = gf._mul[gf._inv[a]]
                pt = tuple(m[v] for v in pt)
            return pt
    raise ValueError("the zero vector is not a projective point")


def pg_points(gf: GF, n: int) -> list[tuple[int, ...]]:
    """All points of PG(n, q), each normalized, in pivot-then-suffix order."""
    pts = []
    width = n + 1
    for pivot in range(width):
        head = (0,) * pivot + (1,)
        for tail in product(gf.elements, repeat=width - pivot - 1):
            pts.append(head + tail)
    return pts


# -- subspaces ----------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A projective subspace of PG(n, q) as its canonical RREF basis."""

    gf: GF
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        width = self.n + 1
        if not 1 <= len(self.rows) <= width:
            raise ValueError("basis must have between 1 and %d rows" % width)
        for row in self.rows:
            if len(row) != width:
                raise ValueError("basis row width %d != %d" % (len(row), width))
        if self.rows != rref(self.gf, self.rows):
            raise ValueError("basis rows are not in canonical RREF")

    @property
    def dim(self) -> int:
        """Projective dimension (number of basis rows minus 1)."""
        return len(self.rows) - 1

    def contains_point(self, pt) -> bool:
        return _reduces_to_zero(self.gf, self.rows, pt)

    def contains(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(_reduces_to_zero(self.gf, self.rows, r) for r in other.rows)

    def points(self) -> list[tuple[int, ...]]:
        """All points, normalized, in deterministic coefficient order."""
        out = []
        rows = self.rows
        width = self.n + 1
        mul = self.gf._mul
        for coeff in _normalized_coeffs(self.gf, len(rows)):
            pt = [0] * width
            for c, row in zip(coeff, rows):
                if c:
                    mc = mul[c]
                    for j, v in enumerate(row):
                        if v:
                            pt[j] ^= mc[v]
            out.append(tuple(pt))
        return out

    def key_int(self) -> int:
        return pack_rows(self.gf, self.rows)

    def key_hex(self) -> str:
        return pack_hex(self.gf, self.rows, self.n)

    def to_json(self) -> dict:
        return {
            "q": self.gf.q,
            "n": self.n,
            "rows": [list(r) for r in self.rows],
            "key": self.key_hex(),
        }

    def __repr__(self) -> str:
        return "Subspace(PG(%d,%d), dim=%d, %s)" % (self.n, self.gf.q, self.dim, self.key_hex())


def _check_ambient(a: Subspace, b: Subspace):
    if a.gf != b.gf or a.n != b.n:
        raise ValueError("subspaces live in different ambient spaces")


def _reduces_to_zero(gf: GF, red_rows, vec) -> bool:
    mul = gf._mul
    v = list(vec)
    for row in red_rows:
        p = None
        for j, x in enumerate(row):
            if x:
                p = j
                break
        if v[p]:
            mf = mul[v[p]]
            v = [v[j] ^ mf[row[j]] for j in range(len(v))]
    return not any(v)


def _normalized_coeffs(gf: GF, r: int):
    """Projectively normalized coefficient tuples (first nonzero entry 1)."""
    for pivot in range(r):
        head = (0,) * pivot + (1,)
        for tail in product(gf.elements, repeat=r - pivot - 1):
            yield head + tail


def span(gf: GF, vectors, n: int | None = None) -> Subspace:
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ValueError("span of an empty set is not a subspace")
    if n is None:
        n = len(vectors[0]) - 1
    rows = rref(gf, vectors)
    if not rows:
        raise ValueError("span of zero vectors only")
    return Subspace(gf, n, rows)


def subspace_from_json(obj: dict, modulus: int | None = None) -> Subspace:
    gf = field(obj["q"], modulus)
    return span(gf, obj["rows"], n=obj["n"])


def meet(a: Subspace, b: Subspace) -> Subspace | None:
    """Intersection subspace, or None when the intersection is empty."""
    _check_ambient(a, b)
    width = a.n + 1
    na = nullspace(a.gf, a.rows, width)
    nb = nullspace(b.gf, b.rows, width)
    rows = nullspace(a.gf, na + nb, width)
    if not rows:
        return None
    return Subspace(a.gf, a.n, rows)


def join(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return span(a.gf, a.rows + b.rows, n=a.n)


def hyperplanes_through(s: Subspace):
    """All hyperplanes containing s, in deterministic order."""
    width = s.n + 1
    if len(s.rows) >= width:
        raise ValueError("the whole space lies in no hyperplane")
    ann = nullspace(s.gf, s.rows, width)
    mul = s.gf._mul
    for coeff in _normalized_coeffs(s.gf, len(ann)):
        vec = [0] * width
        for c, row in zip(coeff, ann):
            if c:
                mc = mul[c]
                for j, v in enumerate(row):
                    if v:
                        vec[j] ^= mc[v]
        yield Subspace(s.gf, s.n, nullspace(s.gf, (tuple(vec),), width))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over GF(q)."""
    if k < 0 or k > n:
        return 0
    num = prod(q**n - q**i for i in range(k))
    den = prod(q**k - q**i for i in range(k))
    if num % den:
        raise AssertionError("Gaussian binomial was not an integer")
    return num // den


# -- exhaustive enumeration ---------------------------------------------


def _free_positions(pivots, width: int):
    free = []
    for i, p in enumerate(pivots):
        for j in range(p + 1, width):
            if j not in pivots:
                free.append((i, j))
    return free


def _pattern_rows(gf: GF, width: int, pivots, first_free: int | None = None):
    """RREF bases with the given pivot columns, free entries in row-major
    field order.  ``first_free`` pins the value of the first free entry,
    which splits one pattern into q equal streams."""
    free_pos = _free_positions(pivots, width)
    base = []
    for i, p in enumerate(pivots):
        row = [0] * width
        row[p] = 1
        base.append(row)
    if not free_pos:
        if first_free is None:
            yield tuple(tuple(row) for row in base)
        return
    if first_free is None:
        tails = product(gf.elements, repeat=len(free_pos))
    else:
        tails = (
            (first_free,) + rest
            for rest in product(gf.elements, repeat=len(free_pos) - 1)
        )
    for vals in tails:
        rows = [row[:] for row in base]
        for (i, j), v in zip(free_pos, vals):
            rows[i][j] = v
        yield tuple(tuple(row) for row in rows)


def enumerate_subspace_rows(gf: GF, width: int, r: int):
    """Every RREF basis of an r-dimensional subspace of GF(q)^width, once.

    Iterates pivot-column patterns in lexicographic order, then free
    entries in row-major field order.
    """
    for pivots in combinations(range(width), r):
        yield from _pattern_rows(gf, width, pivots)


def enumerate_points(gf: GF, n: int):
    for pt in pg_points(gf, n):
        yield pt


def enumerate_planes(gf: GF, filter=None):
    """All planes of PG(5, q) as Subspace objects, exactly once."""
    for rows in enumerate_subspace_rows(gf, 6, 3):
        s = Subspace(gf, 5, rows)
        if filter is None or filter(s):
            yield s


def plane_enumeration_chunks(gf: GF) -> list[tuple[tuple[int, ...], int | None]]:
    """Deterministic work chunks that jointly cover every plane exactly once.

    A chunk is (pivot columns, pinned first-free value).  Pinning the first
    free entry caps a chunk at q^8 planes, which keeps multiprocess sweeps
    reasonably balanced; patterns without free entries yield a single chunk.
    """
    chunks: list[tuple[tuple[int, ...], int | None]] = []
    for pivots in combinations(range(6), 3):
        if _free_positions(pivots, 6):
            chunks.extend((pivots, v) for v in gf.elements)
        else:
            chunks.append((pivots, None))
    return chunks


def enumerate_planes_chunk(gf: GF, chunk):
    """Planes of PG(5, q) belonging to one enumeration chunk."""
    pivots, first_free = chunk
    for rows in _pattern_rows(gf, 6, pivots, first_free):
        yield Subspace(gf, 5, rows)


def plane_from_pattern(gf: GF, pattern) -> Subspace:
    """Plane spanned by three coefficient vectors of a symmetric-matrix pencil.

    ``pattern`` holds three 6-tuples: the coefficient vectors, in coordinates
    (m00, m01, m02, m11, m12, m22), of the three parameters of a plane of
    symmetric 3x3 matrices.  The vectors must be linearly independent.
    """
    vecs = [tuple(v) for v in pattern]
    if len(vecs) != 3 or any(len(v) != 6 for v in vecs):
        raise ValueError("pattern must consist of three 6-tuples")
    rows = rref(gf, vecs)
    if len(rows) != 3:
        raise ValueError("pattern vectors are linearly dependent")
    return Subspace(gf, 5, rows)


# -- packed keys ---------------------------------------------------------


def pack_rows(gf: GF, rows) -> int:
    """Row-major packed-int key: each entry occupies e bits, first entry
    in the highest bits."""
    e = gf.e
    k = 0
    for row in rows:
        for v in row:
            k = (k << e) | v
    return k


def pack_hex(gf: GF, rows, n: int) -> str:
    bits = gf.e * (n + 1) * len(rows)
    return format(pack_rows(gf, rows), "0%dx" % ((bits + 3) // 4))


def unpack_rows(gf: GF, key: int, width: int, r: int) -> tuple[tuple[int, ...], ...]:
    e = gf.e
    mask = (1 << e) - 1
    flat = []
    for _ in range(width * r):
        flat.append(key & mask)
        key >>= e
    flat.reverse()
    return tuple(tuple(flat[i * width:(i + 1) * width]) for i in range(r))
