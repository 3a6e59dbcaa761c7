"""Exhaustive verifiers: cutting, t-fold blocking, minimality, saturation,
and the tangent-lines-per-hyperplane bound for normal rational curves.

Every verdict comes from a full scan over the hyperplanes of the ambient
space (in rank order, so witnesses are the lexicographically least
violators).  Scans are exact and deterministic for any thread count.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .finfield import field_of_order
from .projgeom import PointSet, ProjSpace, null_space, rref, span_points


class BudgetExceeded(Exception):
    """A verifier refused to run past its configured work budget."""


@dataclass
class CuttingCertificate:
    verdict: bool
    scanned: int
    min_rank: int
    witness: tuple | None  # least violating hyperplane dual, when verdict is False

    def to_jsonable(self):
        out = {
            "cutting": self.verdict,
            "scan": {"hyperplanes": self.scanned, "min_intersection_rank": self.min_rank},
        }
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def is_cutting(pointset, threads=1):
    """Scan every hyperplane H and check that X meet H spans H (rank r)."""
    if len(pointset) == 0:
        raise ValueError("empty point set")
    space = pointset.space
    min_rank, first_bad = kernels.scan_cutting(space, pointset.coord_array(), threads)
    witness = space.rank_point(first_bad) if first_bad >= 0 else None
    return CuttingCertificate(first_bad < 0, space.npoints, min_rank, witness)


def is_cutting_fast(pointset):
    """Boolean-only cutting test that aborts on the first violation."""
    space = pointset.space
    return kernels.scan_cutting_abort(space, pointset.coord_array()) < 0


def is_minimal_cutting(pointset, threads=1, precondition=True):
    """(verdict, per-point witness map) for minimality of a cutting set.

    Each point P needs a hyperplane H through it with (X minus P) meet H not
    spanning H; the map records the least such H per point (None for points
    with no witness, which is exactly the non-minimality evidence).
    """
    if precondition and not is_cutting_fast(pointset):
        raise ValueError("point set is not cutting; minimality is undefined")
    space = pointset.space
    essential, witness = kernels.scan_minimality(space, pointset.coord_array(), threads)
    wmap = {}
    for j, pt in enumerate(pointset.points):
        wmap[pt] = space.rank_point(int(witness[j])) if essential[j] else None
    return bool(essential.all()), wmap


def is_tfold_blocking(pointset, t, threads=1):
    """True iff every hyperplane meets the set in at least t points."""
    if t < 1:
        raise ValueError("t must be >= 1")
    counts = kernels.scan_incidence_counts(pointset.space, pointset.coord_array(),
                                           threads)
    return int(counts.min()) >= t


def hyperplane_intersection_counts(pointset, threads=1):
    """|H meet X| for every hyperplane H, indexed by hyperplane rank."""
    return kernels.scan_incidence_counts(pointset.space, pointset.coord_array(),
                                         threads)


def is_saturating(pointset, rho, budget=10 ** 8):
    """True iff every ambient point lies in the span of some rho+1 points of Y.

    Does not check minimality of rho; see is_saturating_exact.  The scan is
    budget-gated: C(|Y|, rho+1) * q**(rho+1) elementary steps must fit.
    """
    space = pointset.space
    n = len(pointset)
    if rho < 0:
        raise ValueError("rho must be >= 0")
    work = 1
    for i in range(rho + 1):
        work = work * (n - i) // (i + 1)
    work *= space.q ** (rho + 1)
    if work > budget:
        raise BudgetExceeded("saturation scan needs ~%d steps, budget %d"
                             % (work, budget))
    covered = set()
    f = space.f
    for subset in combinations(pointset.points, rho + 1):
        for pt in span_points(f, list(subset), space):
            covered.add(space.point_rank(pt))
        if len(covered) == space.npoints:
            return True
    return len(covered) == space.npoints


def is_saturating_exact(pointset, rho, budget=10 ** 8):
    """Saturating at rho and not already saturating at rho - 1."""
    if not is_saturating(pointset, rho, budget):
        return False
    if rho == 0:
        return True
    return not is_saturating(pointset, rho - 1, budget)


def cross_check_cutting_pg2(pointset):
    """Independent oracle for PG(2, q): every line meets X in >= 2 points.

    A line is spanned by its intersection with X iff the intersection has two
    distinct points, so this is the definition unrolled without rank code.
    """
    space = pointset.space
    if space.r != 2:
        raise ValueError("oracle is for planes only")
    member = pointset.ranks()
    for dual in space.hyperplanes():
        hits = 0
        for pt in space.line_points(_line_of_dual(space, dual)):
            if space.point_rank(pt) in member:
                hits += 1
                if hits == 2:
                    break
        if hits < 2:
            return False
    return True


def _line_of_dual(space, dual):
    """The line of PG(2, q) with the given dual covector."""
    basis = null_space(space.f, [dual])
    rows, _ = rref(space.f, basis)
    return (rows[0], rows[1])


# ---------------------------------------------------------------------------
# normal rational curve tangents

def normal_rational_curve(r, q):
    """Curve points and tangent lines of the NRC in PG(r, q).

    Returns (space, curve points, tangents) where each tangent is the pair
    (P, P') spanning it; P' is the derivative point, so p > r is required for
    the tangents to be well defined.
    """
    f = field_of_order(q)
    if f.p <= r:
        raise ValueError("tangents need p > r (p=%d, r=%d)" % (f.p, r))
    space = ProjSpace(f, r)
    curve = []
    tangents = []
    for t in f.elements():
        pt = tuple(f.pow(t, i) if i else 1 for i in range(r + 1))
        deriv = (0,) + tuple(f.mul(_int_elt(f, i), f.pow(t, i - 1))
                             for i in range(1, r + 1))
        curve.append(space.normalize(pt))
        tangents.append((space.normalize(pt), space.normalize(deriv)))
    tail = (0,) * r + (1,)
    tail_deriv = (0,) * (r - 1) + (1, 0)
    curve.append(tail)
    tangents.append((tail, tail_deriv))
    return space, curve, tangents


def _int_elt(f, i):
    acc = 0
    for _ in range(i):
        acc = f.add(acc, 1)
    return acc


def max_tangents_in_hyperplane(r, q, threads=1):
    """Exhaustive max over hyperplanes of tangent lines fully contained."""
    space, _, tangents = normal_rational_curve(r, q)
    defining = [pt for pair in tangents for pt in pair]
    ps = PointSet(space, defining)
    # a tangent lies in H iff both of its defining points do
    arr = ps.coord_array()
    add, sub, mul = kernels.field_tables(space.f)
    hyps = space.point_array()
    best = 0
    block = 4096
    for s in range(0, hyps.shape[0], block):
        hb = hyps[s:s + block]
        acc = mul[hb[:, 0][:, None], arr[:, 0][None, :]]
        for k in range(1, space.d):
            acc = add[acc, mul[hb[:, k][:, None], arr[:, k][None, :]]]
        inside = acc == 0
        both = inside[:, 0::2] & inside[:, 1::2]
        m = int(both.sum(axis=1).max())
        if m > best:
            best = m
    return best
