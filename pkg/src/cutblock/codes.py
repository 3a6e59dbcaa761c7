"""Linear codes from projective point sets: weight distributions, minimality
and covering radius oracles.

A spanning point set Z of PG(r, q) generates the [|Z|, r+1]_q code whose
generator matrix has the normalized point representatives as columns.  The
hyperplane with dual u then meets Z in |Z| - w points exactly when the
codeword u.M has weight w, which is what the geometric weight distribution
and the geometric minimality test use; the direct oracles enumerate
codewords and never touch the geometry, so the two sides check each other.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .projgeom import null_space, span_rank
from .verify import BudgetExceeded, hyperplane_intersection_counts, is_cutting_fast


@dataclass
class LinearCode:
    field: object
    k: int
    n: int
    gen: tuple  # k rows of n codes

    def gen_array(self):
        return np.array(self.gen, dtype=np.uint16)

    def to_jsonable(self):
        return {
            "p": self.field.p,
            "h": self.field.h,
            "modulus": list(self.field.modulus),
            "k": self.k,
            "n": self.n,
            "rows": [list(r) for r in self.gen],
        }


def code_from_pointset(pointset):
    """The code whose generator columns are the points of Z, in Z's order."""
    space = pointset.space
    k = space.r + 1
    if span_rank(space.f, pointset.points) != k:
        raise ValueError("point set does not span the ambient space")
    cols = pointset.points
    gen = tuple(tuple(col[i] for col in cols) for i in range(k))
    return LinearCode(space.f, k, len(cols), gen)


def weight_distribution_geometric(pointset, threads=1):
    """{w: A_w} via hyperplane intersection counts: A_w = (q-1) #{H: |H^Z| = n-w}."""
    counts = hyperplane_intersection_counts(pointset, threads)
    n = len(pointset)
    q = pointset.space.q
    hist = np.bincount(counts, minlength=n + 1)
    dist = {0: 1}
    for m in range(n + 1):
        if hist[m]:
            dist[n - m] = (q - 1) * int(hist[m])
    return dist


def weight_distribution_direct(code, budget=2 ** 20):
    """{w: A_w} by enumerating one codeword per projective class."""
    q = code.field.order
    if q ** code.k > budget:
        raise BudgetExceeded("codeword enumeration q^k = %d over budget %d"
                             % (q ** code.k, budget))
    counts = kernels.codeword_weights(code.field, code.gen_array())
    dist = {0: 1}
    for w in range(1, code.n + 1):
        if counts[w]:
            dist[w] = (q - 1) * int(counts[w])
    return dist


def check_weight_distribution(dist, q, k):
    """Structural invariants: sum A_w = q^k, A_0 = 1, (q-1) | A_w for w > 0."""
    if dist.get(0) != 1:
        return False
    if sum(dist.values()) != q ** k:
        return False
    return all(a % (q - 1) == 0 for w, a in dist.items() if w > 0)


def codeword_supports(code):
    """Support bitmask of one codeword per projective class (first nonzero 1)."""
    f = code.field
    q = f.order
    k, n = code.k, code.n
    gen = code.gen
    sup = []
    for lead in range(k):
        tail = k - lead - 1
        u = [0] * k
        u[lead] = 1
        while True:
            mask = 0
            for j in range(n):
                acc = 0
                for pos in range(lead, k):
                    if u[pos]:
                        acc = f.add(acc, f.mul(u[pos], gen[pos][j]))
                if acc:
                    mask |= 1 << j
            sup.append(mask)
            pos = k - 1
            while pos > lead:
                u[pos] += 1
                if u[pos] < q:
                    break
                u[pos] = 0
                pos -= 1
            else:
                break
    return sup


def is_minimal_code_direct(code, budget=2 ** 20):
    """Pairwise support-containment scan over projective codeword classes."""
    q = code.field.order
    if q ** code.k > budget:
        raise BudgetExceeded("codeword enumeration q^k = %d over budget %d"
                             % (q ** code.k, budget))
    sup = codeword_supports(code)
    m = len(sup)
    for i in range(m):
        si = sup[i]
        for j in range(m):
            if i != j and sup[j] & ~si == 0:
                return False  # supp(c_j) inside supp(c_i), not a multiple
    return True


def is_minimal_code_geometric(pointset):
    """Minimal code == the column point set is a cutting blocking set."""
    return is_cutting_fast(pointset)


def is_minimal_code(code, pointset=None, budget=2 ** 20):
    """Direct scan when affordable, else the geometric route via the point set."""
    q = code.field.order
    if q ** code.k <= budget:
        return is_minimal_code_direct(code, budget)
    if pointset is not None:
        return is_minimal_code_geometric(pointset)
    raise BudgetExceeded("q^k = %d over budget and no point set given" % q ** code.k)


def puncture(code, i):
    """Delete coordinate i from every codeword."""
    if not 0 <= i < code.n:
        raise ValueError("coordinate out of range")
    gen = tuple(tuple(c for j, c in enumerate(row) if j != i) for row in code.gen)
    return LinearCode(code.field, code.k, code.n - 1, gen)


def is_reduced_minimal(code, budget=2 ** 20):
    """Minimal, and deleting any single coordinate destroys minimality."""
    if not is_minimal_code_direct(code, budget):
        return False
    return all(not is_minimal_code_direct(puncture(code, i), budget)
               for i in range(code.n))


def parity_check(code):
    """Generator of the dual code, rows spanning the right kernel of gen."""
    f = code.field
    basis = null_space(f, [list(r) for r in code.gen])
    return LinearCode(f, len(basis), code.n, tuple(tuple(r) for r in basis))


def covering_radius(code, budget=2 ** 22):
    """Exact covering radius by breadth-first syndrome closure.

    Works over the parity check matrix N: the radius is the largest number of
    columns needed to express any syndrome as a linear combination.
    """
    f = code.field
    q = f.order
    pc = parity_check(code)
    m = pc.k  # n - k
    if m == 0:
        return 0
    if q ** m > budget:
        raise BudgetExceeded("syndrome space q^(n-k) = %d over budget %d"
                             % (q ** m, budget))
    cols = [tuple(pc.gen[i][j] for i in range(m)) for j in range(code.n)]

    def enc(v):
        acc = 0
        for c in v:
            acc = acc * q + c
        return acc

    scaled = []
    for col in cols:
        for lam in range(1, q):
            scaled.append(tuple(f.mul(lam, c) for c in col))
    size = q ** m
    dist = [-1] * size
    dist[0] = 0
    frontier = [(0,) * m]
    radius = 0
    while frontier:
        nxt = []
        for s in frontier:
            ds = dist[enc(s)]
            for sc in scaled:
                t = tuple(f.add(a, b) for a, b in zip(s, sc))
                te = enc(t)
                if dist[te] < 0:
                    dist[te] = ds + 1
                    nxt.append(t)
        frontier = nxt
        if nxt:
            radius = dist[enc(nxt[0])]
    if any(d < 0 for d in dist):
        raise ValueError("syndrome space not covered: parity check is degenerate")
    return radius
