"""Points, hyperplanes, lines, spans and point sets of PG(r, q).

Points and hyperplane duals are tuples of field codes, normalized so the
first nonzero coordinate is 1.  Enumeration is in lexicographic order of the
normalized tuples, which gives every object a stable integer rank; the rank
is what bitsets and scan kernels index by.
"""

import numpy as np

from .finfield import field


def space_size(q, r):
    return (q ** (r + 1) - 1) // (q - 1)


class ProjSpace:
    """PG(r, q) over a Field; hyperplanes enumerate exactly like points."""

    def __init__(self, f, r):
        self.f = f
        self.r = r
        self.d = r + 1
        self.q = f.order
        self.npoints = space_size(self.q, r)
        self._point_array = None

    def __repr__(self):
        return "PG(%d, %d)" % (self.r, self.q)

    def normalize(self, v):
        f = self.f
        for c in v:
            if c:
                if c == 1:
                    return tuple(v)
                iv = f.inv(c)
                return tuple(f.mul(iv, x) for x in v)
        raise ValueError("zero vector has no projective class")

    def points(self):
        """All points in lexicographic order of normalized coordinates."""
        q, r = self.q, self.r
        for lead in range(r, -1, -1):
            for suffix in _tuples(q, r - lead):
                yield (0,) * lead + (1,) + suffix

    hyperplanes = points

    def point_array(self):
        """(npoints, r+1) uint16 array of codes, row i = point of rank i."""
        if self._point_array is None:
            q, r, d = self.q, self.r, self.d
            blocks = []
            for lead in range(r, -1, -1):
                n = q ** (r - lead)
                blk = np.zeros((n, d), dtype=np.uint16)
                blk[:, lead] = 1
                idx = np.arange(n)
                for pos in range(lead + 1, r + 1):
                    blk[:, pos] = (idx // q ** (r - pos)) % q
                blocks.append(blk)
            self._point_array = np.concatenate(blocks)
            self._point_array.setflags(write=False)
        return self._point_array

    def point_rank(self, pt):
        q, r = self.q, self.r
        lead = 0
        while pt[lead] == 0:
            lead += 1
        off = (q ** (r - lead) - 1) // (q - 1)
        val = 0
        for pos in range(lead + 1, r + 1):
            val = val * q + pt[pos]
        return off + val

    def rank_point(self, i):
        q, r = self.q, self.r
        lead = r
        while i >= q ** (r - lead):
            i -= q ** (r - lead)
            lead -= 1
        coords = [0] * lead + [1]
        for pos in range(lead + 1, r + 1):
            coords.append((i // q ** (r - pos)) % q)
        return tuple(coords)

    def dot(self, u, v):
        f = self.f
        acc = 0
        for a, b in zip(u, v):
            acc = f.add(acc, f.mul(a, b))
        return acc

    def incident(self, dual, pt):
        return self.dot(dual, pt) == 0

    # -- lines ----------------------------------------------------------

    def line_through(self, P, Q):
        """Canonical reduced-echelon 2x(r+1) basis of the line through P, Q."""
        if P == Q:
            raise ValueError("coincident points do not span a line")
        rows, piv = rref(self.f, [P, Q])
        if len(rows) != 2:
            raise ValueError("coincident points do not span a line")
        return (rows[0], rows[1])

    def line_points(self, basis):
        f = self.f
        r0, r1 = basis
        pts = [self.normalize(tuple(f.add(a, f.mul(c, b)) for a, b in zip(r0, r1)))
               for c in f.elements()]
        pts.append(self.normalize(r1))
        return pts

    def hyperplanes_through(self, rows):
        """Normalized duals of all hyperplanes containing span(rows)."""
        basis = null_space(self.f, rows)
        return list(span_points(self.f, basis, self))

    def all_lines(self):
        """Canonical bases of every line, via point pairs (small spaces only)."""
        seen = {}
        pts = list(self.points())
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                key = self.line_through(pts[i], pts[j])
                if key not in seen:
                    seen[key] = None
        return sorted(seen)


def _tuples(q, k):
    if k == 0:
        yield ()
        return
    for head in range(q):
        for tail in _tuples(q, k - 1):
            yield (head,) + tail


# ---------------------------------------------------------------------------
# exact linear algebra over a Field

def span_rank(f, rows, cap=None):
    """Rank of the matrix with the given coordinate rows (division-free)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    d = len(m[0])
    rank = 0
    for col in range(d):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, len(m)):
            e = m[i][col]
            if e:
                m[i] = [f.sub(f.mul(pv, x), f.mul(e, y))
                        for x, y in zip(m[i], m[rank])]
        rank += 1
        if cap is not None and rank >= cap:
            return rank
        if rank == len(m):
            break
    return rank


def rref(f, rows):
    """Reduced row echelon form; returns (nonzero rows as tuples, pivot cols)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    d = len(m[0])
    pivots = []
    rank = 0
    for col in range(d):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        iv = f.inv(m[rank][col])
        m[rank] = [f.mul(iv, x) for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                e = m[i][col]
                m[i] = [f.sub(x, f.mul(e, y)) for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    return [tuple(r) for r in m[:rank]], pivots


def null_space(f, rows):
    """Basis of the right kernel of the matrix with the given rows."""
    reduced, pivots = rref(f, rows)
    d = len(rows[0])
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * d
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(reduced[i][fc])
        basis.append(tuple(v))
    return basis


def span_points(f, basis, space):
    """Normalized points of the projective subspace spanned by basis rows."""
    if not basis:
        return
    seen = set()
    k = len(basis)
    for coeffs in _tuples(f.order, k):
        if all(c == 0 for c in coeffs):
            continue
        v = [0] * len(basis[0])
        for c, row in zip(coeffs, basis):
            if c:
                for i, x in enumerate(row):
                    v[i] = f.add(v[i], f.mul(c, x))
        pt = space.normalize(tuple(v))
        if pt not in seen:
            seen.add(pt)
            yield pt


class Projectivity:
    """Invertible (r+1)x(r+1) matrix up to scalars, row-major tuples."""

    def __init__(self, f, rows):
        self.f = f
        self.rows = _normalize_matrix(f, rows)
        if span_rank(f, self.rows) != len(self.rows):
            raise ValueError("projectivity matrix is singular")

    def apply(self, pt):
        f = self.f
        out = []
        for row in self.rows:
            acc = 0
            for a, b in zip(row, pt):
                acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        for c in out:
            if c:
                iv = f.inv(c)
                return tuple(f.mul(iv, x) for x in out)
        raise ValueError("singular image")

    def compose(self, other):
        """self after other."""
        f = self.f
        a, b = self.rows, other.rows
        n = len(a)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = f.add(acc, f.mul(a[i][k], b[k][j]))
                row.append(acc)
            rows.append(tuple(row))
        return Projectivity(f, rows)

    def __eq__(self, other):
        return isinstance(other, Projectivity) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)


def _normalize_matrix(f, rows):
    flat = [c for row in rows for c in row]
    for c in flat:
        if c:
            if c == 1:
                return tuple(tuple(r) for r in rows)
            iv = f.inv(c)
            return tuple(tuple(f.mul(iv, x) for x in row) for row in rows)
    raise ValueError("zero matrix")


class PointSet:
    """Ordered, duplicate-free points of one ambient space."""

    def __init__(self, space, points):
        self.space = space
        pts = [space.normalize(p) for p in points]
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        self.points = pts
        self._ranks = None
        self._arr = None

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt):
        return self.space.point_rank(self.space.normalize(pt)) in self.ranks()

    def ranks(self):
        if self._ranks is None:
            self._ranks = frozenset(self.space.point_rank(p) for p in self.points)
        return self._ranks

    def coord_array(self):
        if self._arr is None:
            self._arr = np.array(self.points, dtype=np.uint16)
        return self._arr

    def to_jsonable(self):
        f = self.space.f
        return {
            "p": f.p,
            "h": f.h,
            "modulus": list(f.modulus),
            "r": self.space.r,
            "points": [list(p) for p in self.points],
        }

    @classmethod
    def from_jsonable(cls, obj):
        f = field(obj["p"], obj["h"])
        if list(f.modulus) != list(obj["modulus"]):
            raise ValueError("modulus mismatch: file does not use the canonical field model")
        space = ProjSpace(f, obj["r"])
        return cls(space, [tuple(p) for p in obj["points"]])


class Subgeometry:
    """A q0-order subgeometry given by its point set.

    iota, when present, is the order-(h/h0) collineation fixing the
    subgeometry pointwise, as a callable on points; it is what the point
    classification uses.
    """

    def __init__(self, pointset, suborder, iota=None, witness=None):
        self.pointset = pointset
        self.suborder = suborder
        self.iota = iota
        self.witness = witness
        space = pointset.space
        expected = space_size(suborder, space.r)
        if len(pointset) != expected:
            raise ValueError("subgeometry has %d points, expected %d"
                             % (len(pointset), expected))

    @property
    def space(self):
        return self.pointset.space

    def __contains__(self, pt):
        return pt in self.pointset

    def extended_lines(self):
        """Canonical bases of the ambient lines meeting this set in q0+1 points."""
        space = self.space
        pts = self.pointset.points
        seen = {}
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                key = space.line_through(pts[i], pts[j])
                if key not in seen:
                    seen[key] = None
        return sorted(seen)


def canonical_subgeometry(space, h0):
    """The GF(p^h0)-rational points of PG(r, p^h), with coordinate Frobenius."""
    f = space.f
    if f.h % h0 != 0:
        raise ValueError("%d does not divide %d" % (h0, f.h))
    sub = set(f.subfield_codes(h0))
    pts = [p for p in space.points() if all(c in sub for c in p)]
    ps = PointSet(space, pts)

    def iota(pt):
        return space.normalize(tuple(f.frobenius(c, h0) for c in pt))

    return Subgeometry(ps, f.p ** h0, iota=iota)


def classify_point(pt, sub):
    """IN_SIGMA / O2 / O3 for a point against an order-q subgeometry of PG(3, q^3).

    O2 means pt, pt^iota, pt^iota^2 are collinear (pt sits on an extended
    line of the subgeometry), O3 that they span a plane.
    """
    if pt in sub:
        return "IN_SIGMA"
    space = sub.space
    if sub.iota is None:
        raise ValueError("subgeometry carries no fixing collineation")
    a = sub.iota(pt)
    b = sub.iota(a)
    rank = span_rank(space.f, [pt, a, b])
    return "O2" if rank == 2 else "O3"


def classify_line(basis, sub, sigma_plane_ranks=None):
    """L1..L5 orbit label of a line against an order-q subgeometry of PG(3, q^3).

    sigma_plane_ranks, if given, is the set of hyperplane ranks meeting the
    subgeometry in q^2+q+1 points (precompute it when classifying many lines).
    """
    space = sub.space
    pts = space.line_points(basis)
    inter = sum(1 for p in pts if p in sub)
    if inter >= 2:
        return "L1"
    if sigma_plane_ranks is None:
        sigma_plane_ranks = subgeometry_plane_ranks(sub)
    in_plane = any(space.point_rank(h) in sigma_plane_ranks
                   for h in space.hyperplanes_through(basis))
    if inter == 1:
        return "L2" if in_plane else "L3"
    return "L4" if in_plane else "L5"


def subgeometry_plane_ranks(sub):
    """Ranks of hyperplanes meeting the subgeometry in q0^2+q0+1 points."""
    space = sub.space
    want = sub.suborder ** 2 + sub.suborder + 1
    ranks = set()
    member = sub.pointset.ranks()
    for i, h in enumerate(space.hyperplanes()):
        cnt = 0
        for p in sub.pointset.points:
            if space.dot(h, p) == 0:
                cnt += 1
        if cnt == want:
            ranks.add(i)
    return ranks
