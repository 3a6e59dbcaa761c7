"""Builders for the four cutting-blocking-set families.

Every free choice (which regulus lines, which Singer orbit, which external
line, which search candidate) is resolved lexicographically and recorded in
the report parameters, so a report is bytewise reproducible from (family, q)
alone.
"""

from dataclasses import dataclass, field as dc_field

from .finfield import factor_prime_power, field, field_of_order
from .hermitian import SearchExhausted, hermitian_space, seven_point_search
from .projgeom import PointSet, ProjSpace, rref
from .singer import SingerPG3
from .verify import is_cutting, is_minimal_cutting, normal_rational_curve


@dataclass
class ConstructionReport:
    family: str
    q: int
    parameters: dict
    pointset: PointSet
    components: dict
    cutting: object            # CuttingCertificate
    minimal: bool
    minimal_witnesses: dict = dc_field(default_factory=dict, repr=False)

    def to_jsonable(self):
        certs = self.cutting.to_jsonable()
        certs["minimal"] = self.minimal
        return {
            "family": self.family,
            "q": self.q,
            "parameters": self.parameters,
            "pointset": self.pointset.to_jsonable(),
            "components": self.components,
            "certificates": certs,
        }


def _certify(family, q, parameters, pointset, components, threads=1,
             check_minimal=True):
    cert = is_cutting(pointset, threads)
    minimal, wit = (False, {})
    if cert.verdict and check_minimal:
        minimal, wit = is_minimal_cutting(pointset, threads, precondition=False)
    return ConstructionReport(family, q, parameters, pointset, components,
                              cert, minimal, wit)


def _line_matrix(basis):
    return [list(r) for r in basis]


# -- PG(3, q): three regulus lines plus an external line ---------------------


def hyperbolic_quadric_point(f, pt):
    """Value of X1 X4 - X2 X3 at the point."""
    return f.sub(f.mul(pt[0], pt[3]), f.mul(pt[1], pt[2]))


def construct_pg3q_four_lines(q, threads=1):
    """The 4(q+1)-point union of three lines of one regulus of the quadric
    X1 X4 = X2 X3 and the least line external to the quadric."""
    f = field_of_order(q)
    space = ProjSpace(f, 3)
    reg_params = [(0, 1), (1, 0), (1, 1)]  # first three points of PG(1, q)
    lines = []
    for a, c in reg_params:
        rows, _ = rref(f, [(a, 0, c, 0), (0, a, 0, c)])
        lines.append((rows[0], rows[1]))
    external = None
    for basis in space.all_lines():
        if all(hyperbolic_quadric_point(f, p) != 0 for p in space.line_points(basis)):
            external = basis
            break
    if external is None:
        raise RuntimeError("no external line to the hyperbolic quadric")
    lines.append(external)
    pts = []
    for basis in lines:
        pts.extend(sorted(space.line_points(basis)))
    ps = PointSet(space, pts)
    if len(ps) != 4 * (q + 1):
        raise RuntimeError("four lines are not pairwise disjoint")
    params = {"regulus_parameters": [list(t) for t in reg_params],
              "external_line": _line_matrix(external)}
    comps = {"lines": [_line_matrix(b) for b in lines]}
    return _certify("pg3q-4lines", q, params, ps, comps, threads)


# -- PG(3, q^3): three disjoint q-order subgeometries -------------------------


def construct_pg3q3_subgeometries(q, threads=1, scan_alternatives=False):
    """Union of the canonical subgeometry with two of its Singer-partition
    mates, chosen so that no line meets all three.

    The recipe: take the least big line orbit R_1 under the Singer group of
    the canonical subgeometry, the least line in it, the least point L of
    that line outside the subgeometry; the partition member through L is the
    second subgeometry.  Mark every point on a line meeting the first two
    members; the least unmarked point of the third point class gives the
    third.  scan_alternatives additionally reports how many candidate points
    survive.
    """
    model = SingerPG3(q)
    space = model.space
    spread, big = model.singer_line_orbits()
    r1_orbit = big[0]
    ell = min(model.line_key_of_expset(L) for L in r1_orbit)
    sigma1_ranks = {model.exp_rank[k] for k in model.coset_exps(0)}
    on_ell = sorted(space.point_rank(p) for p in space.line_points(ell))
    L_rank = next(rk for rk in on_ell if rk not in sigma1_ranks)
    L_exp = model.rank_exp[L_rank]
    if model.classify_exp(L_exp) != "O2":
        raise RuntimeError("chosen point off the subgeometry is not of class O2")
    sigma2_exps = model.coset_exps(L_exp)
    sigma2_ranks = {model.exp_rank[k] for k in sigma2_exps}

    r1_keys = {model.line_key_of_expset(L) for L in r1_orbit}
    pair_lines = {}
    pts1 = [model.point(k) for k in model.coset_exps(0)]
    pts2 = [model.point(k) for k in sigma2_exps]
    for A in pts1:
        for B in pts2:
            key = space.line_through(A, B)
            if key not in pair_lines:
                pair_lines[key] = None
    n_expected = (q ** 3 + q ** 2 + 1) * (q + 1) * (q ** 2 + 1)
    if len(pair_lines) != n_expected:
        raise RuntimeError("lines meeting both subgeometries: %d, expected %d"
                           % (len(pair_lines), n_expected))
    cal_r = [k for k in pair_lines if k not in r1_keys]
    if len(cal_r) != q ** 2 * (q + 1) ** 2 * (q ** 2 + 1):
        raise RuntimeError("unexpected size of the one-one secant line set")

    covered = bytearray(space.npoints)
    for key in list(r1_keys) + cal_r:
        for p in space.line_points(key):
            covered[space.point_rank(p)] = 1

    P_exp = None
    candidates = 0
    for rank in range(space.npoints):
        if covered[rank]:
            continue
        k = model.rank_exp[rank]
        if model.classify_exp(k) == "O3":
            if P_exp is None:
                P_exp = k
            candidates += 1
            if not scan_alternatives:
                break
    if P_exp is None:
        raise RuntimeError("no uncovered point of class O3: partition recipe failed")
    sigma3_exps = model.coset_exps(P_exp)

    pts3 = [model.point(k) for k in sigma3_exps]
    ps = PointSet(space, pts1 + pts2 + pts3)
    params = {
        "quartic_modulus": list(model.quartic),
        "chosen_line": _line_matrix(ell),
        "second_seed_exponent": L_exp,
        "third_seed_exponent": P_exp,
        "secant_lines": len(cal_r),
    }
    if scan_alternatives:
        params["uncovered_o3_points"] = candidates
    comps = {
        "subgeometries": [PointSet(space, pts).to_jsonable()
                          for pts in (pts1, pts2, pts3)],
    }
    return _certify("pg3q3-subgeo", q, params, ps, comps, threads)


# -- PG(5, q): seven lines of the Desarguesian spread -------------------------


class FieldReduction:
    """The map phi from points of PG(2, q^2) to lines of PG(5, q), expanding
    GF(q^2) over the basis 1, eps with eps the canonical generator."""

    def __init__(self, q):
        self.q = q
        self.f2, self.plane, self.h0 = hermitian_space(q)
        self.fq = field(self.f2.p, self.h0)
        self.space = ProjSpace(self.fq, 5)
        _, self._to_small, _ = self.f2.subfield_iso(self.h0)
        self.eps = self.f2.generator
        self._den = self.f2.sub(self.eps, self.f2.frobenius(self.eps, self.h0))

    def expand(self, a):
        """GF(q)-coordinates (a0, a1) with a = a0 + a1 eps, as fq codes."""
        f2 = self.f2
        a1 = f2.div(f2.sub(a, f2.frobenius(a, self.h0)), self._den)
        a0 = f2.sub(a, f2.mul(a1, self.eps))
        return (self._to_small[a0], self._to_small[a1])

    def phi(self, P):
        rows = []
        for mult in (1, self.eps):
            v = tuple(self.f2.mul(mult, c) for c in P)
            rows.append(tuple(x for c in v for x in self.expand(c)))
        rws, _ = rref(self.fq, rows)
        return (rws[0], rws[1])

    def spread(self):
        return [self.phi(P) for P in self.plane.points()]


def construct_pg5q_seven_lines(q, threads=1):
    """Union of the spread lines over the certified seven-point configuration.

    At q = 2 no seven-point set avoids every degenerate Hermitian curve and
    no seven spread lines have a minimal cutting union (both exhausted), so
    the search failure propagates.
    """
    cfg = seven_point_search(q)
    fr = FieldReduction(q)
    space = fr.space
    lines = [fr.phi(P) for P in cfg.points]
    pts = []
    for basis in lines:
        pts.extend(sorted(space.line_points(basis)))
    ps = PointSet(space, pts)
    if len(ps) != 7 * (q + 1):
        raise RuntimeError("spread lines are not pairwise disjoint")
    params = {"x": cfg.x, "xi": cfg.xi, "generic": cfg.generic, "arc": cfg.arc,
              "basis_generator": fr.eps}
    comps = {
        "plane_points": PointSet(fr.plane, list(cfg.points)).to_jsonable(),
        "lines": [_line_matrix(b) for b in lines],
    }
    return _certify("pg5q-7lines", q, params, ps, comps, threads)


# -- PG(r, q): tangent lines of the normal rational curve ---------------------


def construct_nrc_tangents(r, q, k=None, selection="first", threads=1):
    """Union of k tangent lines to the normal rational curve.

    selection: "first" (the k least tangent indices), an explicit index
    list, or "search" (least k-subset, in lexicographic order, whose union
    is a minimal cutting set).  The guaranteed regime is k = 2r-1 with
    p > r and q > 2r-1; other k are accepted as experimental.
    """
    from itertools import combinations

    if k is None:
        k = 2 * r - 1
    if k < 1 or k > q + 1:
        raise ValueError("k must be between 1 and q+1")
    space, curve, tangents = normal_rational_curve(r, q)
    f = space.f
    if k == 2 * r - 1 and selection == "first" and not (f.p > r and q > 2 * r - 1):
        raise ValueError("guaranteed regime needs p > r and q > 2r-1")

    tangent_bases = [space.line_through(P, Pd) for P, Pd in tangents]

    def union_of(idx):
        pts = []
        for i in idx:
            pts.extend(sorted(space.line_points(tangent_bases[i])))
        return PointSet(space, pts)

    if selection == "first":
        chosen = list(range(k))
    elif selection == "search":
        from .verify import is_cutting_fast

        chosen = None
        for idx in combinations(range(len(tangents)), k):
            ps = union_of(idx)
            if len(ps) != k * (q + 1):
                continue
            if not is_cutting_fast(ps):
                continue
            minimal, _ = is_minimal_cutting(ps, threads, precondition=False)
            if minimal:
                chosen = list(idx)
                break
        if chosen is None:
            raise SearchExhausted("no %d tangents give a minimal cutting set" % k)
    else:
        chosen = sorted(selection)
        if len(set(chosen)) != k or chosen[-1] >= len(tangents):
            raise ValueError("bad tangent index selection")

    ps = union_of(chosen)
    if len(ps) != k * (q + 1):
        raise RuntimeError("selected tangent lines intersect")
    params = {"r": r, "k": k, "tangent_indices": chosen,
              "selection": selection if isinstance(selection, str) else "explicit"}
    comps = {"curve": [list(p) for p in curve],
             "tangent_lines": [_line_matrix(tangent_bases[i]) for i in chosen]}
    return _certify("nrc", q, params, ps, comps, threads)


FAMILIES = {
    "pg3q-4lines": lambda q, threads=1, **kw: construct_pg3q_four_lines(q, threads),
    "pg3q3-subgeo": lambda q, threads=1, **kw: construct_pg3q3_subgeometries(q, threads),
    "pg5q-7lines": lambda q, threads=1, **kw: construct_pg5q_seven_lines(q, threads),
}
