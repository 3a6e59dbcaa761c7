"""Singer-cycle model of PG(3, q^3) and the three-subgeometry machinery.

Points are the cosets of GF(q^3)* in GF(q^12)*: with gamma a generator of
GF(q^12)*, the point of exponent k is the projective class of gamma^k over
GF(q^3)-coordinates in the basis 1, gamma, gamma^2, gamma^3.  Coordinates
come from the shift-and-reduce recurrence for multiplication by gamma, so no
arithmetic ever runs in GF(q^12) itself; exponents mod N carry the group
theory.

With N the number of points and s = (q+1)(q^2+1), the subgroup S of order s
of the point-regular cyclic group acts by k -> k + N/s.  Its orbits are the
cosets k mod N/s: they form the partition of PG(3, q^3) into
(q^2-q+1)(q^4-q^2+1) pairwise disjoint q-order subgeometries, with the
canonical one (the image of GF(q^4)*) at coset 0.  The collineation fixing
the canonical subgeometry pointwise is x -> x^(q^4), i.e. k -> k q^4 mod N.
"""

from .finfield import factor_prime_power, field, prime_factors
from .projgeom import PointSet, Projectivity, ProjSpace, Subgeometry, span_rank


# -- polynomials with Field-code coefficients (ascending), for the quartic --

def _fp_trim(f, a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(f, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
    return _fp_trim(f, out)


def _fp_mod(f, a, m):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        c = a[-1]
        if c:
            k = len(a) - 1 - dm
            for i in range(dm):
                a[k + i] = f.sub(a[k + i], f.mul(c, m[i]))
        a.pop()
    return _fp_trim(f, a)


def _fp_powmod(f, a, e, m):
    r = [1]
    a = _fp_mod(f, list(a), m)
    while e:
        if e & 1:
            r = _fp_mod(f, _fp_mul(f, r, a), m)
        a = _fp_mod(f, _fp_mul(f, a, a), m)
        e >>= 1
    return r


def _fp_gcd(f, a, b):
    a, b = list(a), list(b)
    while b:
        iv = f.inv(b[-1])
        bm = [f.mul(iv, c) for c in b]
        a, b = b, _fp_mod(f, a, bm)
    return a


def _fp_sub(f, a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _fp_trim(f, [f.sub(x, y) for x, y in zip(a, b)])


def primitive_quartic(f):
    """Smallest-coded monic degree-4 polynomial over f whose root generates
    the multiplicative group of the degree-4 extension."""
    Q = f.order
    order = Q ** 4 - 1
    rho = prime_factors(order)
    x = [0, 1]
    for key in range(1, Q ** 4):
        if key % Q == 0:
            continue  # constant term 0
        c = [key % Q, (key // Q) % Q, (key // Q ** 2) % Q, (key // Q ** 3) % Q, 1]
        # irreducibility (degree 4: proper subfield degrees 1 and 2)
        if _fp_powmod(f, x, Q ** 4, c) != [0, 1]:
            continue
        if len(_fp_gcd(f, _fp_sub(f, _fp_powmod(f, x, Q, c), x), c)) != 1:
            continue
        if len(_fp_gcd(f, _fp_sub(f, _fp_powmod(f, x, Q * Q, c), x), c)) != 1:
            continue
        if any(_fp_powmod(f, x, order // r, c) == [1] for r in rho):
            continue
        return tuple(c)
    raise RuntimeError("no primitive quartic over %r" % (f,))


class SingerPG3:
    """The exponent-indexed model of PG(3, q^3)."""

    def __init__(self, q):
        p, hq = factor_prime_power(q)
        self.q = q
        self.f = field(p, 3 * hq)
        self.space = ProjSpace(self.f, 3)
        self.N = self.space.npoints
        self.s = (q + 1) * (q * q + 1)
        self.M = self.N // self.s
        self.quartic = primitive_quartic(self.f)
        f = self.f
        red = tuple(f.neg(c) for c in self.quartic[:4])  # gamma^4 coordinates
        cur = (1, 0, 0, 0)
        exp_rank = [0] * self.N
        rank_exp = [-1] * self.N
        for k in range(self.N):
            rk = self.space.point_rank(self.space.normalize(cur))
            if rank_exp[rk] != -1:
                raise RuntimeError("singer recurrence revisited a point")
            exp_rank[k] = rk
            rank_exp[rk] = k
            top = cur[3]
            if top:
                cur = (f.mul(top, red[0]),
                       f.add(cur[0], f.mul(top, red[1])),
                       f.add(cur[1], f.mul(top, red[2])),
                       f.add(cur[2], f.mul(top, red[3])))
            else:
                cur = (0, cur[0], cur[1], cur[2])
        if self.space.normalize(cur) != (1, 0, 0, 0):
            raise RuntimeError("gamma^N is not a GF(q^3) scalar")
        self.exp_rank = exp_rank
        self.rank_exp = rank_exp
        self._iota_mult = pow(q, 4, self.N)

    # -- points ----------------------------------------------------------

    def point(self, k):
        return self.space.rank_point(self.exp_rank[k % self.N])

    def exp_of_point(self, pt):
        return self.rank_exp[self.space.point_rank(pt)]

    def iota_exp(self, k):
        return (k * self._iota_mult) % self.N

    def classify_exp(self, k):
        """IN_SIGMA / O2 / O3 of the point gamma^k against the canonical
        subgeometry at coset 0."""
        if k % self.M == 0:
            return "IN_SIGMA"
        a = self.iota_exp(k)
        b = self.iota_exp(a)
        rank = span_rank(self.f, [self.point(k), self.point(a), self.point(b)])
        return "O2" if rank == 2 else "O3"

    def point_census(self):
        """(|Sigma_1|, |O2|, |O3|) over all points."""
        counts = {"IN_SIGMA": 0, "O2": 0, "O3": 0}
        for k in range(self.N):
            counts[self.classify_exp(k)] += 1
        return counts["IN_SIGMA"], counts["O2"], counts["O3"]

    # -- subgeometries -----------------------------------------------------

    def coset_exps(self, k0):
        c = k0 % self.M
        return [c + j * self.M for j in range(self.s)]

    def subgeometry(self, k0):
        """The partition member through gamma^k0, as a Subgeometry."""
        exps = self.coset_exps(k0)
        ps = PointSet(self.space, [self.point(k) for k in exps])
        c = k0 % self.M

        def iota(pt, _c=c):
            k = self.exp_of_point(pt)
            return self.point(((k - _c) * self._iota_mult + _c) % self.N)

        return Subgeometry(ps, self.q, iota=iota)

    def partition(self):
        """All members of the partition into q-order subgeometries."""
        return [self.subgeometry(c) for c in range(self.M)]

    def sigma1(self):
        return self.subgeometry(0)

    # -- S as an explicit projectivity --------------------------------------

    def singer_projectivity(self):
        """Matrix of multiplication by gamma^(N/s): the Singer generator of
        the canonical subgeometry, of order s as a projectivity."""
        f = self.f
        red = tuple(f.neg(c) for c in self.quartic[:4])
        companion = (
            (0, 0, 0, red[0]),
            (1, 0, 0, red[1]),
            (0, 1, 0, red[2]),
            (0, 0, 1, red[3]),
        )
        result = Projectivity(f, ((1, 0, 0, 0), (0, 1, 0, 0),
                                  (0, 0, 1, 0), (0, 0, 0, 1)))
        base = Projectivity(f, companion)
        e = self.M
        while e:
            if e & 1:
                result = base.compose(result)
            base = base.compose(base)
            e >>= 1
        return result

    # -- lines of the canonical subgeometry ---------------------------------

    def sigma1_line_expsets(self):
        """Each extended line of Sigma_1 as the frozenset of Sigma_1
        exponents on it; (q^2+1)(q^2+q+1) lines in all."""
        exps = self.coset_exps(0)
        rank_set = {self.exp_rank[k]: k for k in exps}
        pts = {k: self.point(k) for k in exps}
        seen = {}
        for i in range(len(exps)):
            for j in range(i + 1, len(exps)):
                a, b = exps[i], exps[j]
                key = self.space.line_through(pts[a], pts[b])
                if key in seen:
                    continue
                on = []
                for pt in self.space.line_points(key):
                    rk = self.space.point_rank(pt)
                    if rk in rank_set:
                        on.append(rank_set[rk])
                seen[key] = frozenset(on)
        return seen

    def line_key_of_expset(self, expset):
        it = iter(sorted(expset))
        a = next(it)
        b = next(it)
        return self.space.line_through(self.point(a), self.point(b))

    def singer_line_orbits(self):
        """(spread_orbit, [R_1, ..., R_q]) partition of Sigma_1's lines under S.

        Orbits are lists of exponent-frozensets; the spread orbit has q^2+1
        pairwise disjoint lines, the others (q+1)(q^2+1) each.  R_1 is the
        orbit containing the lexicographically least line (by canonical
        basis) among the large orbits, then R_2 etc. by the same rule.
        """
        lines = self.sigma1_line_expsets()
        unseen = set(lines.values())
        orbits = []
        while unseen:
            start = next(iter(unseen))
            orbit = []
            cur = start
            while cur in unseen:
                unseen.discard(cur)
                orbit.append(cur)
                cur = frozenset((e + self.M) % self.N for e in cur)
            orbits.append(orbit)
        small = [o for o in orbits if len(o) == self.q ** 2 + 1]
        big = [o for o in orbits if len(o) == (self.q + 1) * (self.q ** 2 + 1)]
        if len(small) != 1 or len(big) != self.q:
            raise RuntimeError("unexpected singer line orbit sizes: %r"
                               % sorted(len(o) for o in orbits))
        big.sort(key=lambda o: min(self.line_key_of_expset(L) for L in o))
        return small[0], big
