"""Rational functions over the integers and univariate polynomials over them.

The coefficient field here is the quotient field of Z[u_1, ..., u_k]
(equivalently of the corresponding Laurent ring, since monomials are units).
With k = 0 it degenerates to Q, so one code path covers both the
multi-component and the single-component ("one t variable over Q") cases.

Univariate polynomials over that field, with a lowest-exponent offset so
Laurent units t^k are free, form the principal ideal domain in which module
presentations get diagonalized.
"""

from __future__ import annotations

from typing import Sequence

from .laurent import LaurentPolynomial, exact_divide, _poly_gcd


class RationalFunction:
    """num/den with multivariate integer-polynomial parts, kept canonical.

    Canonical form: num and den are ordinary polynomials (no negative
    exponents) with no common polynomial factor, not both divisible by any
    variable, and the lexicographically least monomial of den has a positive
    coefficient.  Structural equality then decides field equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial | None = None,
                 _canonical: bool = False):
        if den is None:
            den = LaurentPolynomial.one(num.num_vars)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.num_vars != den.num_vars:
            raise ValueError("variable-count mismatch between num and den")
        if not _canonical:
            num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def num_vars(self) -> int:
        return self.num.num_vars

    @classmethod
    def zero(cls, num_vars: int) -> "RationalFunction":
        return cls(LaurentPolynomial.zero(num_vars))

    @classmethod
    def one(cls, num_vars: int) -> "RationalFunction":
        return cls(LaurentPolynomial.one(num_vars))

    @classmethod
    def constant(cls, c: int, num_vars: int) -> "RationalFunction":
        return cls(LaurentPolynomial.constant(c, num_vars))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def __add__(self, other):
        other = self._coerce(other)
        num = self.num * other.den + other.num * self.den
        return RationalFunction(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        # cross-cancel before multiplying to keep parts small
        a, d = _reduce(self.num, other.den)
        c, b = _reduce(other.num, self.den)
        return RationalFunction(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RationalFunction(other.den, other.num, _canonical=False)

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.num_vars != self.num_vars:
                raise ValueError("variable-count mismatch")
            return other
        if isinstance(other, int):
            return RationalFunction.constant(other, self.num_vars)
        if isinstance(other, LaurentPolynomial):
            return RationalFunction(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = RationalFunction.constant(other, self.num_vars)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def format(self, names: list | None = None) -> str:
        if names is None:
            names = [f"u{i + 2}" for i in range(self.num_vars)]
        if self.den == LaurentPolynomial.one(self.num_vars):
            return self.num.format(names)
        return f"({self.num.format(names)})/({self.den.format(names)})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RationalFunction({self})"


def _reduce(num: LaurentPolynomial, den: LaurentPolynomial) -> tuple:
    """Bring num/den to canonical form (see class docstring)."""
    nv = num.num_vars
    if num.is_zero():
        return LaurentPolynomial.zero(nv), LaurentPolynomial.one(nv)
    # clear negative exponents jointly, then strip the joint monomial factor
    mins_n = num.min_exponents()
    mins_d = den.min_exponents()
    joint = tuple(min(a, b) for a, b in zip(mins_n, mins_d))
    num = num.shift(tuple(-x for x in joint))
    den = den.shift(tuple(-x for x in joint))
    g = _poly_gcd(num, den)
    if not (g.is_constant() and abs(g.constant_value()) == 1):
        qn = exact_divide(num, g)
        qd = exact_divide(den, g)
        assert qn is not None and qd is not None
        num, den = qn, qd
    least = min(den.terms)
    if den.terms[least] < 0:
        num, den = -num, -den
    return num, den


class UniPoly:
    """Univariate Laurent polynomial over a RationalFunction field.

    coeffs[i] is the coefficient of t^(low + i); the first and last entries
    are nonzero unless the polynomial is zero (empty coeffs, low == 0).
    """

    __slots__ = ("num_vars", "low", "coeffs")

    def __init__(self, num_vars: int, coeffs: Sequence[RationalFunction],
                 low: int = 0):
        coeffs = list(coeffs)
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            low += 1
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            low = 0
        for c in coeffs:
            if c.num_vars != num_vars:
                raise ValueError("coefficient variable count differs")
        self.num_vars = num_vars
        self.low = low
        self.coeffs = coeffs

    @classmethod
    def zero(cls, num_vars: int) -> "UniPoly":
        return cls(num_vars, [])

    @classmethod
    def one(cls, num_vars: int) -> "UniPoly":
        return cls(num_vars, [RationalFunction.one(num_vars)])

    @classmethod
    def t_power(cls, k: int, num_vars: int) -> "UniPoly":
        return cls(num_vars, [RationalFunction.one(num_vars)], low=k)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_laurent_unit(self) -> bool:
        """True iff of the form c * t^k with c a nonzero field element."""
        return len(self.coeffs) == 1

    def spread(self) -> int:
        """Degree as a Laurent polynomial: top exponent minus bottom exponent."""
        if self.is_zero():
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def top(self) -> int:
        return self.low + len(self.coeffs) - 1

    def leading(self) -> RationalFunction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.top(), other.top())
        out = [RationalFunction.zero(self.num_vars)] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] = out[self.low - lo + i] + c
        for i, c in enumerate(other.coeffs):
            out[other.low - lo + i] = out[other.low - lo + i] + c
        return UniPoly(self.num_vars, out, lo)

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.num_vars, [-c for c in self.coeffs], self.low)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            if other.is_zero():
                return UniPoly.zero(self.num_vars)
            return UniPoly(self.num_vars, [c * other for c in self.coeffs], self.low)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.num_vars)
        out = [RationalFunction.zero(self.num_vars)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.num_vars, out, self.low + other.low)

    def shift_t(self, k: int) -> "UniPoly":
        return UniPoly(self.num_vars, self.coeffs, self.low + k)

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.num_vars == other.num_vars
            and self.low == other.low
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.num_vars, self.low, tuple(self.coeffs)))

    def monic(self) -> "UniPoly":
        """Normalize to a monic ordinary polynomial (low exponent zero)."""
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return UniPoly(self.num_vars, [c * inv for c in self.coeffs], 0)

    def divmod_by(self, other: "UniPoly") -> tuple:
        """Division with remainder in the Laurent sense.

        Returns (q, r) with self == q*other + r and either r == 0 or the
        spread of r is strictly less than the spread of other.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return UniPoly.zero(self.num_vars), UniPoly.zero(self.num_vars)
        # work on the polynomial parts; reattach offsets at the end
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead_inv = other.leading().inverse()
        qcoeffs = [RationalFunction.zero(self.num_vars)] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            dr = len(rem) - 1
            f = rem[-1] * lead_inv
            qcoeffs[dr - db] = f
            for j, b in enumerate(other.coeffs):
                idx = dr - db + j
                rem[idx] = rem[idx] - f * b
            while rem and rem[-1].is_zero():
                rem.pop()
        q = UniPoly(self.num_vars, qcoeffs, self.low - other.low)
        r = UniPoly(self.num_vars, rem, self.low)
        return q, r

    def format(self, tname: str = "t", unames: list | None = None) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            k = self.low + i
            if k == 0:
                pieces.append(c.format(unames))
            else:
                tpart = tname if k == 1 else f"{tname}^{k}"
                pieces.append(f"({c.format(unames)})*{tpart}")
        return " + ".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UniPoly({self})"


class UniPolyMatrix:
    """Matrix over the univariate PID; rows index module generators."""

    __slots__ = ("rows", "cols", "num_vars", "entries")

    def __init__(self, entries: Sequence[Sequence[UniPoly]], num_vars: int,
                 rows: int | None = None, cols: int | None = None):
        data = [list(row) for row in entries]
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("inconsistent matrix dimensions")
        self.rows = rows
        self.cols = cols
        self.num_vars = num_vars
        self.entries = data


def grade_substitute(p: LaurentPolynomial, psi: Sequence[int]) -> UniPoly:
    """Push a Laurent polynomial into the univariate ring over the fraction field.

    Applies t_i -> u_i * t^(psi_i) with u_1 = 1: a term with exponent vector
    e lands in t-degree sum(psi_i * e_i) with coefficient carrying the
    exponents e_2, ..., e_s on the u side.  Distinct source monomials map to
    distinct (u-monomial, t-degree) pairs, so no cancellation occurs.
    """
    s = p.num_vars
    if len(psi) != s:
        raise ValueError("psi must have one entry per variable")
    if p.is_zero():
        return UniPoly.zero(max(s - 1, 0))
    uvars = max(s - 1, 0)
    buckets: dict = {}
    for e, c in p.terms.items():
        tdeg = sum(ps * x for ps, x in zip(psi, e))
        ue = tuple(e[1:])
        bucket = buckets.setdefault(tdeg, {})
        bucket[ue] = bucket.get(ue, 0) + c
    lo = min(buckets)
    hi = max(buckets)
    coeffs = []
    for k in range(lo, hi + 1):
        terms = buckets.get(k)
        if terms:
            coeffs.append(RationalFunction(LaurentPolynomial(uvars, terms)))
        else:
            coeffs.append(RationalFunction.zero(uvars))
    return UniPoly(uvars, coeffs, lo)


def diagonalize_over_pid(M: UniPolyMatrix) -> tuple:
    """Invariant factors and free rank of the module presented by M.

    M presents coker(M): the quotient of the free module on the rows by the
    span of the columns.  Euclidean elimination (the coefficient ring is a
    field, so t-degree is a Euclidean function) produces diagonal entries
    d_1 | d_2 | ...; the monic non-unit entries are the invariant factors of
    the torsion part and free_rank = rows - rank.

    Returns (invariant_factors, free_rank).
    """
    nv = M.num_vars
    a = [row[:] for row in M.entries]
    rows, cols = M.rows, M.cols
    diag = []
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if not x.is_zero() and (best is None or x.spread() < best):
                    best = x.spread()
                    pivot = (i, j)
        if pivot is None:
            break
        a[t], a[pivot[0]] = a[pivot[0]], a[t]
        pj = pivot[1]
        if pj != t:
            for r in a:
                r[t], r[pj] = r[pj], r[t]

        while True:
            dirty = False
            for i in range(t + 1, rows):
                if not a[i][t].is_zero():
                    q, r = a[i][t].divmod_by(a[t][t])
                    for j in range(t, cols):
                        a[i][j] = a[i][j] - q * a[t][j]
                    if not r.is_zero():
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, cols):
                if not a[t][j].is_zero():
                    q, r = a[t][j].divmod_by(a[t][t])
                    for i in range(t, rows):
                        a[i][j] = a[i][j] - a[i][t] * q
                    if not r.is_zero():
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            if any(not a[i][t].is_zero() for i in range(t + 1, rows)):
                continue
            if any(not a[t][j].is_zero() for j in range(t + 1, cols)):
                continue
            # divisibility chain: pivot must divide the trailing submatrix
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j].is_zero():
                        continue
                    _, r = a[i][j].divmod_by(a[t][t])
                    if not r.is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, cols):
                a[t][j] = a[t][j] + a[offender][j]
        diag.append(a[t][t])
        t += 1
        if t >= rows or t >= cols:
            break

    factors = [d.monic() for d in diag if d.spread() > 0]
    free_rank = rows - len(diag)
    return factors, free_rank
