"""q-order sublines, clubs and splashes of PG(1, q^3).

A splash here is realized from its two-coordinate parametrization: for
x in GF(q^3) outside GF(q), the point set

    S_x = {(z - z^q, x z^q - x^q z) : z in GF(q^3)*}

together with its two families of q-order sublines r_xi (the family of the
canonical subline r_1) and r'_xi.  Family membership is carried explicitly:
at q = 2 every 3 points of PG(1, 8) form a subline, so "the sublines of a
splash" is only meaningful as the constructed, labelled family.
"""

from dataclasses import dataclass

from .projgeom import ProjSpace


def pg1(q3_field):
    return ProjSpace(q3_field, 1)


def subline_through(space, h0, P1, P2, P3):
    """The unique q0-order subline through three distinct points of PG(1, q0^h).

    Computed by writing P3 = lam P1 + mu P2 and pulling the canonical
    PG(1, q0) back through the frame map; returned as a sorted point tuple.
    """
    f = space.f
    pts = {P1, P2, P3}
    if len(pts) != 3:
        raise ValueError("coincident points")
    det = f.sub(f.mul(P1[0], P2[1]), f.mul(P1[1], P2[0]))
    lam = f.div(f.sub(f.mul(P3[0], P2[1]), f.mul(P3[1], P2[0])), det)
    mu = f.div(f.sub(f.mul(P1[0], P3[1]), f.mul(P1[1], P3[0])), det)
    v1 = (f.mul(lam, P1[0]), f.mul(lam, P1[1]))
    v2 = (f.mul(mu, P2[0]), f.mul(mu, P2[1]))
    out = {space.normalize(v2)}
    for a in f.subfield_codes(h0):
        out.add(space.normalize((f.add(v1[0], f.mul(a, v2[0])),
                                 f.add(v1[1], f.mul(a, v2[1])))))
    sub = tuple(sorted(out))
    if len(sub) != f.p ** h0 + 1:
        raise RuntimeError("subline degenerated")
    return sub


def canonical_subline(space, h0):
    """r_1 = {(1, a) : a in GF(q0)} plus (0, 1)."""
    return tuple(sorted([(0, 1)] + [(1, a) for a in space.f.subfield_codes(h0)]))


def all_sublines(space, h0):
    """Every q0-order subline, deduplicated over point triples (small spaces)."""
    pts = list(space.points())
    seen = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            for k in range(j + 1, len(pts)):
                seen.add(subline_through(space, h0, pts[i], pts[j], pts[k]))
    return sorted(seen)


@dataclass
class Splash:
    space: object
    h0: int
    x: int
    points: tuple       # sorted point tuple, q^2+q+1 points
    fam1: tuple         # sublines containing r_1's family, as sorted tuples
    fam2: tuple


def splash_construct(space, h0, x):
    """S_x with both subline families; x must lie outside GF(q)."""
    f = space.f
    q0 = f.p ** h0
    if f.in_subfield(x, h0):
        raise ValueError("x in GF(%d) does not define a splash" % q0)
    conj = lambda c: f.frobenius(c, h0)
    xq = conj(x)
    pts = set()
    for z in f.nonzero():
        zq = conj(z)
        v = (f.sub(z, zq), f.sub(f.mul(x, zq), f.mul(xq, z)))
        if v != (0, 0):
            pts.add(space.normalize(v))
    if len(pts) != q0 * q0 + q0 + 1:
        raise RuntimeError("splash has %d points" % len(pts))

    sub_codes = f.subfield_codes(h0)
    fam1, fam2 = {}, {}
    for xi in f.nonzero():
        xiq = conj(xi)
        r, rp = set(), set()
        for a in sub_codes:
            xa, xqa = f.add(x, a), f.add(xq, a)
            r.add(space.normalize((
                f.sub(f.mul(xi, xa), f.mul(xiq, xqa)),
                f.sub(f.mul(f.mul(x, xiq), xqa), f.mul(f.mul(xq, xi), xa)))))
            rp.add(space.normalize((
                f.sub(f.mul(xiq, xqa), f.mul(xi, xa)),
                f.sub(f.mul(f.mul(x, xi), xa), f.mul(f.mul(xq, xiq), xqa)))))
        r.add(space.normalize((f.sub(xi, xiq),
                               f.sub(f.mul(x, xiq), f.mul(xq, xi)))))
        rp.add(space.normalize((f.sub(xiq, xi),
                                f.sub(f.mul(x, xi), f.mul(xq, xiq)))))
        fam1.setdefault(tuple(sorted(r)), xi)
        fam2.setdefault(tuple(sorted(rp)), xi)
    want = q0 * q0 + q0 + 1
    if len(fam1) != want or len(fam2) != want:
        raise RuntimeError("family sizes %d/%d" % (len(fam1), len(fam2)))
    for fam in (fam1, fam2):
        for sub in fam:
            if not set(sub) <= pts:
                raise RuntimeError("family subline leaves the splash")
    return Splash(space, h0, x, tuple(sorted(pts)),
                  tuple(sorted(fam1)), tuple(sorted(fam2)))


def intersection_profile(splash, s):
    """How many sublines of the family opposite to s meet it in 1, 2, 0 points."""
    if s in splash.fam1:
        other = splash.fam2
    elif s in splash.fam2:
        other = splash.fam1
    else:
        raise ValueError("subline not in either family")
    ones = twos = zeros = 0
    ss = set(s)
    for t in other:
        m = len(ss & set(t))
        if m == 1:
            ones += 1
        elif m == 2:
            twos += 1
        elif m == 0:
            zeros += 1
        else:
            raise RuntimeError("opposite families share %d points" % m)
    return ones, twos, zeros


# -- the PGL(2, q^3) orbit of a splash --------------------------------------


def pgl2_matrices(f):
    """All elements of PGL(2, Q) as normalized (a, b, c, d), lex order."""
    mats = []
    for c in f.nonzero():
        for d in f.elements():
            mats.append((0, 1, c, d))
    for b in f.elements():
        for c in f.elements():
            bc = f.mul(b, c)
            for d in f.elements():
                if d != bc:
                    mats.append((1, b, c, d))
    return mats


def _point_rank1(pt):
    # PG(1, Q) lex rank: (0,1) first, then (1, c) by code
    return 0 if pt[0] == 0 else 1 + pt[1]


def apply_mat(space, mat, pt):
    f = space.f
    a, b, c, d = mat
    img = (f.add(f.mul(a, pt[0]), f.mul(b, pt[1])),
           f.add(f.mul(c, pt[0]), f.mul(d, pt[1])))
    return space.normalize(img)


def splash_orbit(space, h0, with_families=False):
    """All splashes as sorted point-rank tuples, from the PGL(2, q^3) orbit
    of S_x for the least valid x.

    With with_families, returns {signature: (fam1, fam2)} where the families
    are transported through the first group element reaching the signature
    (the family pair is well defined; its labelling is not canonical).
    """
    f = space.f
    x = min(c for c in f.elements() if not f.in_subfield(c, h0))
    base = splash_construct(space, h0, x)
    base_pts = base.points
    out = {}
    for mat in pgl2_matrices(f):
        img = tuple(sorted(_point_rank1(apply_mat(space, mat, p))
                           for p in base_pts))
        if img in out:
            continue
        if with_families:
            fam1 = tuple(sorted(tuple(sorted(_point_rank1(apply_mat(space, mat, p))
                                             for p in sub))
                                for sub in base.fam1))
            fam2 = tuple(sorted(tuple(sorted(_point_rank1(apply_mat(space, mat, p))
                                             for p in sub))
                                for sub in base.fam2))
            out[img] = (fam1, fam2)
        else:
            out[img] = None
    return out


def count_splashes_through(space, h0, s):
    """Number of splashes having s as one of their family sublines.

    Exhaustive over the full splash orbit.  Family membership, not bare
    point containment, is what is counted: at q = 2 every 3-subset of
    PG(1, 8) is a subline, and plain containment would give 15, not q^3 - q.
    """
    sig = tuple(sorted(_point_rank1(p) for p in s))
    orbit = splash_orbit(space, h0, with_families=True)
    q0 = space.f.p ** h0
    group = space.f.order ** 3 - space.f.order  # |PGL(2, q^3)|
    if len(orbit) * 2 * (q0 * q0 + q0 + 1) != group:
        raise RuntimeError("splash orbit size %d inconsistent with the stabilizer"
                           % len(orbit))
    return sum(1 for fam1, fam2 in orbit.values() if sig in fam1 or sig in fam2)


# -- clubs -------------------------------------------------------------------


@dataclass
class Club:
    points: tuple
    head: tuple
    sublines: tuple  # the q(q+1) constructed sublines, every one through head


def club_by_projection(plane_space, h0, R, m_basis):
    """Project the canonical q-order subplane from R onto the line m.

    R must lie on exactly one extended subline of the subplane and off m;
    the head is where that subline meets m.
    """
    from .projgeom import canonical_subgeometry, null_space

    f = plane_space.f
    sub = canonical_subgeometry(plane_space, h0)
    ext = sub.extended_lines()
    duals = [null_space(f, list(b))[0] for b in ext]
    dual_m = null_space(f, list(m_basis))[0]
    if plane_space.dot(dual_m, R) == 0:
        raise ValueError("projection center lies on the target line")
    through = [i for i, d in enumerate(duals) if plane_space.dot(d, R) == 0]
    if len(through) != 1:
        raise ValueError("center lies on %d extended sublines, need exactly 1"
                         % len(through))
    r_hat = duals[through[0]]

    dmR = plane_space.dot(dual_m, R)

    def project(P):
        dmP = plane_space.dot(dual_m, P)
        img = tuple(f.sub(f.mul(dmR, a), f.mul(dmP, b)) for a, b in zip(P, R))
        return plane_space.normalize(img)

    head_candidates = {project(P) for P in sub.pointset.points
                       if plane_space.dot(r_hat, P) == 0}
    if len(head_candidates) != 1:
        raise RuntimeError("subline through the center did not collapse")
    head = head_candidates.pop()

    club_pts = {project(P) for P in sub.pointset.points}
    q0 = f.p ** h0
    if len(club_pts) != q0 * q0 + 1:
        raise RuntimeError("club has %d points" % len(club_pts))

    fam = set()
    for i, d in enumerate(duals):
        if i == through[0]:
            continue
        img = tuple(sorted({project(P) for P in sub.pointset.points
                            if plane_space.dot(d, P) == 0}))
        fam.add(img)
    if len(fam) != q0 * (q0 + 1):
        raise RuntimeError("club carries %d sublines" % len(fam))
    for s in fam:
        if head not in s:
            raise RuntimeError("club subline missing the head")
    return Club(tuple(sorted(club_pts)), head, tuple(sorted(fam)))
