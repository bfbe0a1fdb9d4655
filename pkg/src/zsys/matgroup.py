"""Exact determinant-1 matrices over F_p[t, t^-1] and the two example root-group
families realized by them.

The standard family lives in SL_2 and is abelian on the positive side; the
unitary family lives in SL_3 (p odd), has central odd-index generators, and
noncommuting even-index generators whose commutators land on the odd index
halfway between.  Both carry a diagonal shift conjugator moving index n to
n + 2.  Commutator convention throughout: [a, b] = a^-1 b^-1 a b, and
conjugation a^b = b^-1 a b.
"""

from __future__ import annotations

from .laurent import Fp, LaurentPoly, mul_terms
from .rootsystem import Root, check_root


class LaurentMatrix:
    """Square matrix (2x2 or 3x3) over LaurentPoly with determinant 1."""

    __slots__ = ("fp", "n", "rows", "_hash")

    def __init__(self, fp: Fp, rows):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if n not in (2, 3) or any(len(r) != n for r in rows):
            raise ValueError(f"expected a square 2x2 or 3x3 matrix, got rows {rows!r}")
        for row in rows:
            for e in row:
                if not isinstance(e, LaurentPoly) or e.fp != fp:
                    raise ValueError("matrix entries must be LaurentPoly over the same Fp")
        self.fp = fp
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def identity(cls, fp: Fp, n: int) -> "LaurentMatrix":
        one, zero = LaurentPoly.one(fp), LaurentPoly.zero(fp)
        return cls(fp, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, fp: Fp, entries) -> "LaurentMatrix":
        zero = LaurentPoly.zero(fp)
        n = len(entries)
        return cls(fp, [[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_lists(cls, fp: Fp, data) -> "LaurentMatrix":
        return cls(fp, [[LaurentPoly.from_pairs(fp, e) for e in row] for row in data])

    def to_lists(self) -> list:
        return [[e.to_pairs() for e in row] for row in self.rows]

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.fp != other.fp:
            raise ValueError(f"mixed moduli: {self.fp} vs {other.fp}")
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        p = self.fp.p
        n = self.n
        a, b = self.rows, other.rows
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: dict = {}
                for k in range(n):
                    for z, c in mul_terms(a[i][k].terms, b[k][j].terms, p).items():
                        acc[z] = (acc.get(z, 0) + c) % p
                row.append(LaurentPoly(self.fp, {z: c for z, c in acc.items() if c}))
            out.append(row)
        return LaurentMatrix(self.fp, out)

    def det(self) -> LaurentPoly:
        r = self.rows
        if self.n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        return (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )

    def inv(self) -> "LaurentMatrix":
        """Inverse via the adjugate.  For determinant 1 (all group elements)
        this is division free; any unit determinant (a monomial, e.g. the shift
        conjugator of the 3x3 family has det -1) is scaled out exactly."""
        det = self.det()
        if det.is_one():
            unit = None
        elif det.is_monomial():
            unit = det.unit_inverse()
        else:
            raise ValueError(f"determinant is not a unit: {det}")
        r = self.rows
        if self.n == 2:
            adj = [[r[1][1], -r[0][1]], [-r[1][0], r[0][0]]]
        else:
            cof = [
                [
                    r[(i + 1) % 3][(j + 1) % 3] * r[(i + 2) % 3][(j + 2) % 3]
                    - r[(i + 1) % 3][(j + 2) % 3] * r[(i + 2) % 3][(j + 1) % 3]
                    for j in range(3)
                ]
                for i in range(3)
            ]
            adj = [[cof[j][i] for j in range(3)] for i in range(3)]
        if unit is not None:
            adj = [[e * unit for e in row] for row in adj]
        return LaurentMatrix(self.fp, adj)

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(self.fp, list(zip(*self.rows)))

    def is_identity(self) -> bool:
        for i, row in enumerate(self.rows):
            for j, e in enumerate(row):
                if (e.is_one() if i == j else e.is_zero()) is False:
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, LaurentMatrix)
            and self.fp == other.fp
            and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.fp.p, self.rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"[{body}]"


def commutator(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    """[a, b] = a^-1 b^-1 a b."""
    return a.inv() * b.inv() * a * b


def conjugate(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    """a^b = b^-1 a b."""
    return b.inv() * a * b


class StandardExample:
    """SL_2 over F_p[t, t^-1]: upper unipotents with entry c*t^z as positive
    root groups, lower unipotents as negative ones.  The positive side is
    abelian."""

    tag = "standard"
    dim = 2

    def __init__(self, p: int):
        self.fp = Fp(p)
        self.p = self.fp.p

    def u(self, n: int, lam: int = 1) -> LaurentMatrix:
        """Positive-side generator with parameter lam at index n."""
        return self.root_generator(Root(n, 1), lam)

    def root_generator(self, root: Root, lam: int = 1) -> LaurentMatrix:
        check_root(root)
        fp = self.fp
        one, zero = LaurentPoly.one(fp), LaurentPoly.zero(fp)
        if root.eps == 1:
            entry = LaurentPoly.monomial(fp, lam, root.z)
            return LaurentMatrix(fp, [[one, entry], [zero, one]])
        entry = LaurentPoly.monomial(fp, lam, -root.z)
        return LaurentMatrix(fp, [[one, zero], [entry, one]])

    def h(self, lam: int) -> LaurentMatrix:
        if lam % self.p == 0:
            raise ValueError("diagonal parameter must be nonzero")
        fp = self.fp
        return LaurentMatrix.diagonal(
            fp, [LaurentPoly.const(fp, lam), LaurentPoly.const(fp, fp.inv(lam))]
        )

    def sigma(self) -> LaurentMatrix:
        """Shift conjugator: conjugation by it maps the index-n generator to index n + 2."""
        fp = self.fp
        return LaurentMatrix.diagonal(
            fp, [LaurentPoly.monomial(fp, 1, -1), LaurentPoly.monomial(fp, 1, 1)]
        )

    def normal_form(self, m: LaurentMatrix, lo: int, hi: int) -> tuple:
        """Exponent vector (e_lo, ..., e_hi) with m = u_lo^e_lo ... u_hi^e_hi."""
        if lo > hi:
            if m.is_identity():
                return ()
            raise ValueError("nonidentity element on an empty window")
        r = m.rows
        if m.n != 2 or not (r[0][0].is_one() and r[1][1].is_one() and r[1][0].is_zero()):
            raise ValueError("matrix is not upper unitriangular")
        f = r[0][1]
        for z in f.support():
            if not lo <= z <= hi:
                raise ValueError(f"entry support t^{z} escapes window [{lo}, {hi}]")
        return tuple(f.coeff(z) for z in range(lo, hi + 1))

    def normal_form_negative(self, m: LaurentMatrix, lo: int, hi: int) -> tuple:
        """Same read-off on the negative side: index z sits at entry c*t^-z below."""
        if lo > hi:
            if m.is_identity():
                return ()
            raise ValueError("nonidentity element on an empty window")
        r = m.rows
        if m.n != 2 or not (r[0][0].is_one() and r[1][1].is_one() and r[0][1].is_zero()):
            raise ValueError("matrix is not lower unitriangular")
        f = r[1][0]
        for z in f.support():
            if not lo <= -z <= hi:
                raise ValueError(f"entry support t^{z} escapes window [{lo}, {hi}]")
        return tuple(f.coeff(-z) for z in range(lo, hi + 1))

    def root_of(self, m: LaurentMatrix):
        """Match m against the generator families: (root, lam) or None."""
        if m.n != 2 or m.is_identity():
            return None
        r = m.rows
        if r[0][0].is_one() and r[1][1].is_one():
            if r[1][0].is_zero() and r[0][1].is_monomial():
                ((z, c),) = r[0][1].terms.items()
                return Root(z, 1), c
            if r[0][1].is_zero() and r[1][0].is_monomial():
                ((z, c),) = r[1][0].terms.items()
                return Root(-z, -1), c
        return None

    def in_torus(self, m: LaurentMatrix) -> bool:
        r = m.rows
        return (
            m.n == 2
            and r[0][1].is_zero()
            and r[1][0].is_zero()
            and r[0][0].is_constant()
            and not r[0][0].is_zero()
            and (r[0][0] * r[1][1]).is_one()
        )


class UnitaryExample:
    """SL_3 over F_p[t, t^-1], p odd.  Even-index generators occupy the two
    superdiagonal slots plus a corrected corner; odd-index generators occupy
    the corner only and are central on the positive side."""

    tag = "unitary"
    dim = 3

    def __init__(self, p: int):
        fp = Fp(p)
        if fp.p == 2:
            raise ValueError("unitary example requires char != 2")
        self.fp = fp
        self.p = fp.p
        self._half = fp.inv(2)

    def u(self, n: int, lam: int = 1) -> LaurentMatrix:
        """Positive-side generator with parameter lam at index n."""
        fp = self.fp
        p = self.p
        one, zero = LaurentPoly.one(fp), LaurentPoly.zero(fp)
        lam %= p
        if n % 2 == 0:
            z = n // 2
            sgn = 1 if z % 2 else p - 1  # (-1)^(z+1)
            a12 = LaurentPoly.monomial(fp, -lam, z)
            a23 = LaurentPoly.monomial(fp, lam if z % 2 == 0 else -lam, z)
            a13 = LaurentPoly.monomial(fp, sgn * lam * lam * self._half, 2 * z)
            return LaurentMatrix(fp, [[one, a12, a13], [zero, one, a23], [zero, zero, one]])
        z = (n - 1) // 2
        a13 = LaurentPoly.monomial(fp, lam if z % 2 == 0 else -lam, n)
        return LaurentMatrix(fp, [[one, zero, a13], [zero, one, zero], [zero, zero, one]])

    def root_generator(self, root: Root, lam: int = 1) -> LaurentMatrix:
        check_root(root)
        g = self.u(root.z, lam)
        return g if root.eps == 1 else g.transpose()

    def h(self, lam: int) -> LaurentMatrix:
        if lam % self.p == 0:
            raise ValueError("diagonal parameter must be nonzero")
        fp = self.fp
        return LaurentMatrix.diagonal(
            fp,
            [LaurentPoly.const(fp, lam), LaurentPoly.one(fp), LaurentPoly.const(fp, fp.inv(lam))],
        )

    def sigma(self) -> LaurentMatrix:
        fp = self.fp
        return LaurentMatrix.diagonal(
            fp,
            [
                LaurentPoly.monomial(fp, 1, -1),
                LaurentPoly.one(fp),
                LaurentPoly.monomial(fp, -1, 1),
            ],
        )

    def _check_unitriangular(self, m: LaurentMatrix):
        r = m.rows
        if m.n != 3:
            raise ValueError("expected a 3x3 matrix")
        diag_ok = all(r[i][i].is_one() for i in range(3))
        lower_ok = r[1][0].is_zero() and r[2][0].is_zero() and r[2][1].is_zero()
        if not (diag_ok and lower_ok):
            raise ValueError("matrix is not upper unitriangular")

    def normal_form(self, m: LaurentMatrix, lo: int, hi: int) -> tuple:
        """Two-phase read-off.  The even part is visible in the (1,2) entry -f(t)
        (the (2,3) entry must equal f(-t)); dividing it off leaves a matrix
        supported in the corner, whose coefficient at t^(2z+1) times (-1)^z is
        the exponent of the odd generator 2z + 1."""
        if lo > hi:
            if m.is_identity():
                return ()
            raise ValueError("nonidentity element on an empty window")
        self._check_unitriangular(m)
        f = -m.rows[0][1]
        if m.rows[1][2] != f.subs_neg_t():
            raise ValueError("inconsistent (1,2) and (2,3) entries")
        e = [0] * (hi - lo + 1)
        even_part = LaurentMatrix.identity(self.fp, 3)
        for z in f.support():
            n = 2 * z
            if not lo <= n <= hi:
                raise ValueError(f"even index {n} escapes window [{lo}, {hi}]")
            e[n - lo] = f.coeff(z)
        for n in range(lo, hi + 1):
            if n % 2 == 0 and e[n - lo]:
                even_part = even_part * self.u(n, e[n - lo])
        rem = even_part.inv() * m
        r = rem.rows
        if not (r[0][1].is_zero() and r[1][2].is_zero()):
            raise ValueError("even part does not divide off cleanly")
        g = r[0][2]
        for w in g.support():
            if w % 2 == 0 or not lo <= w <= hi:
                raise ValueError(f"corner support t^{w} escapes odd window positions")
            z = (w - 1) // 2
            c = g.coeff(w)
            e[w - lo] = c if z % 2 == 0 else (self.p - c) % self.p
        return tuple(e)

    def normal_form_negative(self, m: LaurentMatrix, lo: int, hi: int) -> tuple:
        """Negative-side read-off; transposition swaps the two sides index-wise."""
        return self.normal_form(m.transpose(), lo, hi)

    def root_of(self, m: LaurentMatrix):
        """Match m against the generator families: (root, lam) or None."""
        if m.n != 3 or m.is_identity():
            return None
        r = m.rows
        lower_zero = r[1][0].is_zero() and r[2][0].is_zero() and r[2][1].is_zero()
        upper_zero = r[0][1].is_zero() and r[0][2].is_zero() and r[1][2].is_zero()
        if lower_zero and not upper_zero:
            got = self._match_positive(m)
            return None if got is None else (Root(got[0], 1), got[1])
        if upper_zero and not lower_zero:
            got = self._match_positive(m.transpose())
            return None if got is None else (Root(got[0], -1), got[1])
        return None

    def _match_positive(self, m: LaurentMatrix):
        r = m.rows
        if not all(r[i][i].is_one() for i in range(3)):
            return None
        a12, a13, a23 = r[0][1], r[0][2], r[1][2]
        if a12.is_zero() and a23.is_zero() and a13.is_monomial():
            ((w, c),) = a13.terms.items()
            if w % 2 == 0:
                return None
            z = (w - 1) // 2
            lam = c if z % 2 == 0 else (self.p - c) % self.p
            return (w, lam) if self.u(w, lam) == m else None
        if a12.is_monomial():
            ((z, c),) = a12.terms.items()
            lam = (self.p - c) % self.p
            return (2 * z, lam) if self.u(2 * z, lam) == m else None
        return None

    def in_torus(self, m: LaurentMatrix) -> bool:
        r = m.rows
        off_zero = all(r[i][j].is_zero() for i in range(3) for j in range(3) if i != j)
        return (
            m.n == 3
            and off_zero
            and r[1][1].is_one()
            and r[0][0].is_constant()
            and not r[0][0].is_zero()
            and (r[0][0] * r[2][2]).is_one()
        )


EXAMPLES = {"standard": StandardExample, "unitary": UnitaryExample}


def make_example(tag: str, p: int):
    if tag not in EXAMPLES:
        raise ValueError(f"unknown example {tag!r}; choose from {sorted(EXAMPLES)}")
    return EXAMPLES[tag](p)
