"""Exact arithmetic in GF(p^h) and its subfield lattice.

The element sum_i c_i alpha^i (alpha a root of the field modulus) is encoded
as the integer code sum_i c_i p^i.  For every (p, h) the modulus is the monic
primitive polynomial of degree h whose integer encoding is smallest, so codes
mean the same thing on every machine and in every run.  Code 0 is the
additive identity, code 1 the multiplicative identity.

Arithmetic is table driven (discrete logs, plus a Zech table for addition
when p > 2) while p^h <= 2**24; beyond that it falls back to polynomial
arithmetic with extended-Euclid inversion.  Everything is exact integer
work; no floating point anywhere.
"""

from functools import lru_cache

ZECH_LIMIT = 2 ** 24

_NOLOG = -1  # zech table sentinel: 1 + g^k = 0


def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n):
    """Distinct prime factors of n, ascending (trial division; n <= ~2**50)."""
    out = []
    i = 2
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            while n % i == 0:
                n //= i
        i += 1
    if n > 1:
        out.append(n)
    return out


def factor_prime_power(q):
    """q = p^h with p prime, else ValueError."""
    if q < 2:
        raise ValueError("not a prime power: %r" % (q,))
    for p in prime_factors(q):
        h = 0
        m = q
        while m % p == 0:
            m //= p
            h += 1
        if m == 1:
            return p, h
    raise ValueError("not a prime power: %r" % (q,))


# ---------------------------------------------------------------------------
# polynomials over GF(p), ascending coefficient lists, used only to pick and
# verify the field modulus

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        c = a[-1]
        if c:
            k = len(a) - 1 - dm
            for i in range(dm):
                a[k + i] = (a[k + i] - c * m[i]) % p
        a.pop()
    return _ptrim(a)


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _pdivmod(a, b, p):
    """(quotient, remainder) of a by nonzero b over GF(p)."""
    lead_inv = pow(b[-1], p - 2, p)
    r = list(a)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        c = (r[-1] * lead_inv) % p
        k = len(r) - 1 - db
        q[k] = c
        for i in range(len(b)):
            r[k + i] = (r[k + i] - c * b[i]) % p
        r = _ptrim(r)
    return _ptrim(q), r


def _ppowmod(a, e, m, p):
    r = [1]
    a = _pmod(a, m, p)
    while e:
        if e & 1:
            r = _pmod(_pmul(r, a, p), m, p)
        a = _pmod(_pmul(a, a, p), m, p)
        e >>= 1
    return r


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        lead_inv = pow(b[-1], p - 2, p)
        bm = [(c * lead_inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _code_to_poly(code, p):
    out = []
    while code:
        out.append(code % p)
        code //= p
    return out


def _poly_to_code(poly, p):
    code = 0
    for c in reversed(poly):
        code = code * p + c
    return code


def _is_irreducible(m, p):
    h = len(m) - 1
    x = [0, 1]
    if _ppowmod(x, p ** h, m, p) != _pmod(x, m, p):
        return False
    for r in prime_factors(h):
        t = _ppowmod(x, p ** (h // r), m, p)
        diff = list(t) + [0] * (2 - len(t))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(m, _ptrim(diff), p)
        if len(g) != 1:
            return False
    return True


def _is_primitive(m, p):
    if not _is_irreducible(m, p):
        return False
    n1 = p ** (len(m) - 1) - 1
    for r in prime_factors(n1):
        if _ppowmod([0, 1], n1 // r, m, p) == [1]:
            return False
    return True


def canonical_modulus(p, h):
    """Smallest-coded monic primitive polynomial of degree h over GF(p).

    For h = 1 the convention is x + c with root -c a primitive element of
    GF(p)* (for p = 2 this is x + 1 with root 1).
    """
    if h == 1:
        for c in range(1, p):
            g = (-c) % p
            ok = True
            for r in prime_factors(p - 1):
                if pow(g, (p - 1) // r, p) == 1:
                    ok = False
                    break
            if ok or p == 2:
                return [c, 1]
        raise RuntimeError("no primitive degree-1 modulus mod %d" % p)
    for code in range(p ** h + 1, 2 * p ** h):
        if code % p == 0:
            continue  # constant term 0 is divisible by x
        m = _code_to_poly(code, p)
        if _is_primitive(m, p):
            return m
    raise RuntimeError("no primitive polynomial found for p=%d h=%d" % (p, h))


# ---------------------------------------------------------------------------


class Field:
    """GF(p^h) acting on integer element codes."""

    def __init__(self, p, h):
        if not is_prime(p):
            raise ValueError("p must be prime, got %r" % (p,))
        if h < 1:
            raise ValueError("extension degree must be >= 1")
        if p ** h > 2 ** 30:
            raise ValueError("field order %d exceeds the supported range" % p ** h)
        self.p = p
        self.h = h
        self.order = p ** h
        self.modulus = canonical_modulus(p, h)
        self._n1 = self.order - 1
        if h == 1:
            self.generator = (-self.modulus[0]) % p
            self._mode = "prime"
        elif self.order <= ZECH_LIMIT:
            self.generator = p  # alpha itself, the modulus being primitive
            self._mode = "zech"
            self._build_tables()
        else:
            self.generator = p
            self._mode = "poly"
            self._modlow = self.modulus[:-1]

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.h) if self.h > 1 else "GF(%d)" % self.p

    def _build_tables(self):
        p, h, n1 = self.p, self.h, self._n1
        exp = [0] * n1
        log = [_NOLOG] * self.order
        if p == 2:
            mcode = _poly_to_code(self.modulus, 2)
            cur = 1
            for k in range(n1):
                exp[k] = cur
                log[cur] = k
                cur <<= 1
                if cur & self.order:
                    cur ^= mcode
        else:
            digits = [0] * h
            digits[0] = 1
            modlow = self.modulus[:-1]
            for k in range(n1):
                code = 0
                for c in reversed(digits):
                    code = code * p + c
                exp[k] = code
                log[code] = k
                top = digits[-1]
                digits = [0] + digits[:-1]
                if top:
                    for i in range(h):
                        digits[i] = (digits[i] - top * modlow[i]) % p
            # zech[k] = log(1 + g^k); adding one only bumps the low digit
            zech = [0] * n1
            for k in range(n1):
                c = exp[k]
                c2 = c - (c % p) + ((c + 1) % p)
                zech[k] = log[c2] if c2 else _NOLOG
            self._zech = zech
            self._negone = exp[n1 // 2] if n1 % 2 == 0 else 1
        self._exp = exp
        self._log = log

    # -- core operations on codes ------------------------------------------

    def add(self, a, b):
        p = self.p
        if self.h == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        if self._mode == "zech":
            if a == 0:
                return b
            if b == 0:
                return a
            i, j = self._log[a], self._log[b]
            z = self._zech[(j - i) % self._n1]
            if z == _NOLOG:
                return 0
            return self._exp[(i + z) % self._n1]
        return self._poly_add(a, b)

    def neg(self, a):
        p = self.p
        if self.h == 1:
            return (-a) % p
        if p == 2:
            return a
        if self._mode == "zech":
            return self.mul(a, self._negone)
        code, out, shift = a, 0, 1
        while code:
            out += ((p - code % p) % p) * shift
            code //= p
            shift *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.h == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._mode == "zech":
            return self._exp[(self._log[a] + self._log[b]) % self._n1]
        return self._poly_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in %r" % (self,))
        if self.h == 1:
            return pow(a, self.p - 2, self.p)
        if self._mode == "zech":
            return self._exp[(-self._log[a]) % self._n1]
        return self._poly_inv(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        """a**e; for nonzero a the exponent acts mod p^h - 1."""
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("0 to a negative power")
        if self.h == 1:
            return pow(a, e % self._n1, self.p)
        if self._mode == "zech":
            return self._exp[(self._log[a] * e) % self._n1]
        r, base, ee = 1, a, e % self._n1
        while ee:
            if ee & 1:
                r = self._poly_mul(r, base)
            base = self._poly_mul(base, base)
            ee >>= 1
        return r

    def frobenius(self, a, k=1):
        return self.pow(a, self.p ** (k % self.h)) if a else 0

    # -- subfields ----------------------------------------------------------

    def _check_subdegree(self, hs):
        if hs < 1 or self.h % hs != 0:
            raise ValueError("%d is not a divisor of %d" % (hs, self.h))

    def in_subfield(self, a, hs):
        """True iff a lies in the subfield GF(p^hs)."""
        self._check_subdegree(hs)
        if a == 0:
            return True
        return self.frobenius(a, hs) == a if hs < self.h else True

    def subfield_codes(self, hs):
        self._check_subdegree(hs)
        if hs == self.h:
            return list(range(self.order))
        if self._mode == "zech":
            step = self._n1 // (self.p ** hs - 1)
            codes = [0, ] + [self._exp[k] for k in range(0, self._n1, step)]
            return sorted(codes)
        return [a for a in range(self.order) if self.in_subfield(a, hs)]

    def trace_to(self, a, hs):
        self._check_subdegree(hs)
        t = 0
        for i in range(self.h // hs):
            t = self.add(t, self.frobenius(a, hs * i))
        return t

    def norm_to(self, a, hs):
        self._check_subdegree(hs)
        if a == 0:
            return 0
        e = (self.order - 1) // (self.p ** hs - 1)
        return self.pow(a, e)

    def rel_trace_norm(self, a, hs):
        return self.trace_to(a, hs), self.norm_to(a, hs)

    def subfield_iso(self, hs):
        """Isomorphism between the GF(p^hs) inside this field and field(p, hs).

        Returns (small, to_small, from_small): a Field, a dict mapping the
        subfield's codes here to the standalone field's codes, and the
        inverse list indexed by standalone code.  The map sends the smallest
        root (by code) of the standalone modulus to the standalone alpha.
        """
        self._check_subdegree(hs)
        small = field(self.p, hs)
        sub = self.subfield_codes(hs)
        rho = None
        for a in sub:
            acc = 0
            for c in reversed(small.modulus):
                acc = self.add(self.mul(acc, a), c % self.p)
            if acc == 0:
                rho = a
                break
        if rho is None:
            raise RuntimeError("no root of the subfield modulus found")
        # GF(p)-coordinates of each subfield element over 1, rho, ..., rho^(hs-1)
        p = self.p
        basis = [self.pow(rho, i) if i else 1 for i in range(hs)]
        cols = [_code_to_poly(b, p) + [0] * self.h for b in basis]
        to_small = {}
        from_small = [0] * small.order
        for a in sub:
            target = _code_to_poly(a, p) + [0] * self.h
            coeffs = _solve_gfp([c[: self.h] for c in cols], target[: self.h], p)
            code = 0
            for c in reversed(coeffs):
                code = code * p + c
            to_small[a] = code
            from_small[code] = a
        return small, to_small, from_small

    # -- iteration and sugar --------------------------------------------

    def elements(self):
        return range(self.order)

    def nonzero(self):
        return range(1, self.order)

    def elt(self, code):
        return Elt(self, code)

    # -- polynomial backend (orders beyond the table limit) --------------

    def _poly_digits(self, a):
        d = _code_to_poly(a, self.p)
        return d + [0] * (self.h - len(d))

    def _poly_add(self, a, b):
        p = self.p
        out, shift = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def _poly_mul(self, a, b):
        p = self.p
        da, db = _code_to_poly(a, p), _code_to_poly(b, p)
        prod = _pmod(_pmul(da, db, p), self.modulus, p)
        return _poly_to_code(prod, p)

    def _poly_inv(self, a):
        p = self.p
        # extended Euclid on (modulus, a)
        r0, r1 = list(self.modulus), _code_to_poly(a, p)
        t0, t1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _psub(t0, _pmul(q, t1, p), p)
        c_inv = pow(r0[0], p - 2, p)
        res = [(c * c_inv) % p for c in t0]
        return _poly_to_code(_pmod(res, self.modulus, p), p)


def _solve_gfp(cols, target, p):
    """Solve sum_j x_j cols[j] = target over GF(p); cols are digit vectors."""
    ncols = len(cols)
    nrows = len(target)
    m = [[cols[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    piv = []
    row = 0
    for col in range(ncols):
        sel = None
        for r in range(row, nrows):
            if m[r][col]:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        iv = pow(m[row][col], p - 2, p)
        m[row] = [(v * iv) % p for v in m[row]]
        for r in range(nrows):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [(v - f * w) % p for v, w in zip(m[r], m[row])]
        piv.append(col)
        row += 1
    x = [0] * ncols
    for r, col in enumerate(piv):
        x[col] = m[r][ncols]
    for r in range(row, nrows):
        if m[r][ncols]:
            raise ValueError("inconsistent system")
    return x


class Elt:
    """Element wrapper with operator sugar; raises on mixed-field operands."""

    __slots__ = ("f", "code")

    def __init__(self, f, code):
        if not 0 <= code < f.order:
            raise ValueError("code %r out of range for %r" % (code, f))
        self.f = f
        self.code = code

    def _peer(self, other):
        if isinstance(other, Elt):
            if other.f is not self.f:
                raise ValueError("mixed-field operands: %r vs %r" % (self.f, other.f))
            return other.code
        if isinstance(other, int):
            return other % self.f.p if self.f.h == 1 else other
        return NotImplemented

    def __add__(self, other):
        return Elt(self.f, self.f.add(self.code, self._peer(other)))

    def __sub__(self, other):
        return Elt(self.f, self.f.sub(self.code, self._peer(other)))

    def __mul__(self, other):
        return Elt(self.f, self.f.mul(self.code, self._peer(other)))

    def __truediv__(self, other):
        return Elt(self.f, self.f.div(self.code, self._peer(other)))

    def __pow__(self, e):
        return Elt(self.f, self.f.pow(self.code, e))

    def __neg__(self):
        return Elt(self.f, self.f.neg(self.code))

    def __eq__(self, other):
        if isinstance(other, Elt):
            return self.f is other.f and self.code == other.code
        return NotImplemented

    def __hash__(self):
        return hash((id(self.f), self.code))

    def __repr__(self):
        return "%r[%d]" % (self.f, self.code)


@lru_cache(maxsize=None)
def field(p, h=1):
    """The canonical GF(p^h); cached so repeated calls share tables."""
    return Field(p, h)


def field_of_order(q):
    p, h = factor_prime_power(q)
    return field(p, h)
