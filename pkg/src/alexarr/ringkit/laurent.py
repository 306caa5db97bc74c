"""Exact multivariate Laurent polynomials over arbitrary-precision integers.

A Laurent polynomial in m variables t_1, ..., t_m is stored as a sparse map
from exponent vectors (length-m tuples of signed ints) to nonzero integer
coefficients.  All arithmetic is exact; coefficients are Python ints and
never overflow.

The units of the ring Z[t_1^{±1}, ..., t_m^{±1}] are the signed monomials
±t^e.  Quantities that are only defined up to units (polynomial gcds) are
returned in the normal form produced by :func:`unit_normalize`: the minimal
exponent of every variable is zero and the leading (graded-lex greatest)
monomial has a positive coefficient, so canonical strings lead with a
positive term.
"""

from __future__ import annotations

from math import gcd as _int_gcd
from typing import Iterable, Mapping


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple, int] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != num_vars:
                    raise ValueError(
                        f"exponent vector {exps!r} has length {len(exps)}, expected {num_vars}"
                    )
                if coeff:
                    e = tuple(exps)
                    c = clean.get(e, 0) + coeff
                    if c:
                        clean[e] = c
                    elif e in clean:
                        del clean[e]
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, num_vars: int) -> "LaurentPolynomial":
        return cls(num_vars, {})

    @classmethod
    def constant(cls, c: int, num_vars: int) -> "LaurentPolynomial":
        if c == 0:
            return cls.zero(num_vars)
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def one(cls, num_vars: int) -> "LaurentPolynomial":
        return cls.constant(1, num_vars)

    @classmethod
    def variable(cls, index: int, num_vars: int, power: int = 1) -> "LaurentPolynomial":
        if not 0 <= index < num_vars:
            raise ValueError(f"variable index {index} out of range for {num_vars} variables")
        exps = [0] * num_vars
        exps[index] = power
        return cls(num_vars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, coeff: int, exps: Iterable[int]) -> "LaurentPolynomial":
        e = tuple(exps)
        return cls(len(e), {e: coeff})

    # ------------------------------------------------------------------
    # predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """True iff the polynomial is ±(a single monomial)."""
        if len(self.terms) != 1:
            return False
        (coeff,) = self.terms.values()
        return coeff in (1, -1)

    def constant_value(self) -> int:
        if self.is_zero():
            return 0
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms[(0,) * self.num_vars]

    # ------------------------------------------------------------------
    # arithmetic

    def _check_compatible(self, other: "LaurentPolynomial") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable-count mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.num_vars)
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return LaurentPolynomial(self.num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.num_vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPolynomial.zero(self.num_vars)
            return LaurentPolynomial(
                self.num_vars, {e: c * other for e, c in self.terms.items()}
            )
        self._check_compatible(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                elif e in terms:
                    del terms[e]
        return LaurentPolynomial(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative powers only defined for unit monomials")
            ((e, c),) = self.terms.items()
            return LaurentPolynomial(
                self.num_vars, {tuple(x * n for x in e): c if n % 2 else 1}
            )
        result = LaurentPolynomial.one(self.num_vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    # ------------------------------------------------------------------
    # structure

    def min_exponents(self) -> tuple:
        """Componentwise minimum exponent vector over all terms (zero poly -> zeros)."""
        if self.is_zero():
            return (0,) * self.num_vars
        mins = None
        for e in self.terms:
            mins = e if mins is None else tuple(min(a, b) for a, b in zip(mins, e))
        return mins

    def max_degree_in(self, k: int) -> int:
        return max((e[k] for e in self.terms), default=0)

    def shift(self, offsets: tuple) -> "LaurentPolynomial":
        """Multiply by the monomial t^offsets."""
        return LaurentPolynomial(
            self.num_vars,
            {tuple(a + b for a, b in zip(e, offsets)): c for e, c in self.terms.items()},
        )

    def permute_variables(self, perm: Iterable[int]) -> "LaurentPolynomial":
        """Relabel variables: new variable i carries old variable perm[i]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.num_vars)):
            raise ValueError("perm must be a permutation of the variable indices")
        return LaurentPolynomial(
            self.num_vars,
            {tuple(e[p] for p in perm): c for e, c in self.terms.items()},
        )

    def integer_content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = _int_gcd(g, c)
            if g == 1:
                return 1
        return g

    # ------------------------------------------------------------------
    # rendering

    def format(self, names: list | None = None) -> str:
        """Render in graded-lexicographic order, highest monomials first."""
        if self.is_zero():
            return "0"
        if names is None:
            names = [f"t{i + 1}" for i in range(self.num_vars)]
        items = sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)
        pieces = []
        for e, c in items:
            factors = [
                names[i] if x == 1 else f"{names[i]}^{x}"
                for i, x in enumerate(e)
                if x != 0
            ]
            body = "*".join(factors)
            if not body:
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            if not pieces:
                pieces.append(text if c > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPolynomial({self.num_vars}, {self.format()!r})"


# ----------------------------------------------------------------------
# degree


def degree_spread(p: LaurentPolynomial) -> int:
    """Max total exponent sum minus min total exponent sum over the terms.

    Unchanged under multiplication by units, so it descends to quantities
    defined only up to units.  Undefined (raises) for the zero polynomial.
    """
    if p.is_zero():
        raise ValueError("degree spread of the zero polynomial is undefined")
    sums = [sum(e) for e in p.terms]
    return max(sums) - min(sums)


# ----------------------------------------------------------------------
# unit normalization


def unit_normalize(p: LaurentPolynomial) -> LaurentPolynomial:
    """Canonical representative of p up to multiplication by units ±t^e.

    The monomial factor is stripped so every variable has minimal exponent
    zero, and the sign is fixed so the graded-lex leading monomial has a
    positive coefficient.
    """
    if p.is_zero():
        return p
    mins = p.min_exponents()
    q = p.shift(tuple(-x for x in mins))
    lead = max(q.terms, key=_grlex_key)
    if q.terms[lead] < 0:
        q = -q
    return q


def _poly_part(p: LaurentPolynomial) -> LaurentPolynomial:
    """Strip the monomial factor only (no sign change): all exponents >= 0."""
    if p.is_zero():
        return p
    mins = p.min_exponents()
    if all(x == 0 for x in mins):
        return p
    return p.shift(tuple(-x for x in mins))


# ----------------------------------------------------------------------
# exact division

def _grlex_key(e: tuple):
    return (sum(e), e)


def exact_divide(p: LaurentPolynomial, d: LaurentPolynomial) -> LaurentPolynomial | None:
    """Return q with q*d == p, or None when d does not divide p exactly.

    Single-divisor division in graded-lex order.  Over an integral domain
    the leading term of an exact quotient is forced at every step, so the
    algorithm never backtracks: any failure (monomial or coefficient
    non-divisibility) proves d does not divide p.
    """
    p._check_compatible(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPolynomial.zero(p.num_vars)
    sp = p.min_exponents()
    sd = d.min_exponents()
    phat = p.shift(tuple(-x for x in sp))
    dhat = d.shift(tuple(-x for x in sd))
    lead_d = max(dhat.terms, key=_grlex_key)
    cd = dhat.terms[lead_d]
    rem = dict(phat.terms)
    q: dict = {}
    while rem:
        lead_r = max(rem, key=_grlex_key)
        cr = rem[lead_r]
        e = tuple(a - b for a, b in zip(lead_r, lead_d))
        if any(x < 0 for x in e) or cr % cd:
            return None
        c = cr // cd
        q[e] = c
        for ed, cdd in dhat.terms.items():
            key = tuple(a + b for a, b in zip(e, ed))
            s = rem.get(key, 0) - c * cdd
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    quotient = LaurentPolynomial(p.num_vars, q)
    back = tuple(a - b for a, b in zip(sp, sd))
    return quotient.shift(back)


def divides(d: LaurentPolynomial, p: LaurentPolynomial) -> bool:
    return exact_divide(p, d) is not None


# ----------------------------------------------------------------------
# multivariate gcd
#
# Recursive content / primitive-part reduction: pick the highest variable
# appearing in both operands, view both as univariate over the subring in
# the remaining variables, and run a subresultant pseudo-remainder
# sequence on the primitive parts.  Two shortcuts keep the common cases
# cheap: monomial operands are handled directly, and a modular
# specialization certificate detects variables the gcd cannot involve
# before any pseudo-division happens.


def _split_by_var(p: LaurentPolynomial, k: int) -> dict:
    """View p as univariate in variable k: degree -> coefficient polynomial."""
    parts: dict = {}
    for e, c in p.terms.items():
        d = e[k]
        e0 = e[:k] + (0,) + e[k + 1 :]
        bucket = parts.setdefault(d, {})
        bucket[e0] = bucket.get(e0, 0) + c
    return {d: LaurentPolynomial(p.num_vars, t) for d, t in parts.items()}


def _join_by_var(parts: dict, k: int, num_vars: int) -> LaurentPolynomial:
    terms: dict = {}
    for d, q in parts.items():
        for e, c in q.terms.items():
            e2 = e[:k] + (d,) + e[k + 1 :]
            terms[e2] = terms.get(e2, 0) + c
    return LaurentPolynomial(num_vars, terms)


def _uni_mul(parts: dict, g: LaurentPolynomial) -> dict:
    out = {}
    for d, q in parts.items():
        prod = q * g
        if not prod.is_zero():
            out[d] = prod
    return out


def _uni_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for d, q in b.items():
        s = out.get(d)
        s = (-q) if s is None else (s - q)
        if s.is_zero():
            out.pop(d, None)
        else:
            out[d] = s
    return out


def _uni_shift(parts: dict, k: int) -> dict:
    return {d + k: q for d, q in parts.items()}


def _content(parts: dict) -> LaurentPolynomial:
    g = None
    for q in parts.values():
        g = q if g is None else _poly_gcd(g, q)
        if g.is_constant() and abs(g.constant_value()) == 1:
            break
    return g


def _primitive(parts: dict) -> dict:
    cont = _content(parts)
    if cont.is_constant() and abs(cont.constant_value()) == 1:
        if cont.constant_value() == -1:
            return {d: -q for d, q in parts.items()}
        return parts
    out = {}
    for d, q in parts.items():
        quot = exact_divide(q, cont)
        assert quot is not None, "content must divide every coefficient"
        out[d] = quot
    return out


def _pseudo_rem(a: dict, b: dict) -> dict:
    """Exact pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b."""
    db = max(b)
    lcb = b[db]
    steps = max(a) - db + 1
    r = a
    used = 0
    while r and max(r) >= db:
        dr = max(r)
        lcr = r[dr]
        r = _uni_sub(_uni_mul(r, lcb), _uni_shift(_uni_mul(b, lcr), dr - db))
        used += 1
    # pad to the exact prem power so subresultant divisions stay exact
    for _ in range(steps - used):
        r = _uni_mul(r, lcb)
    return r


def _subresultant_prs(a: dict, b: dict, num_vars: int) -> dict:
    """Last nonzero element of the subresultant PRS of primitive a, b."""
    one = LaurentPolynomial.one(num_vars)
    g, h = one, one
    while True:
        delta = max(a) - max(b)
        r = _pseudo_rem(a, b)
        if not r:
            return b
        div = g * (h ** delta)
        nxt = {}
        for d, c in r.items():
            quot = exact_divide(c, div)
            assert quot is not None, "subresultant division must be exact"
            nxt[d] = quot
        a, b = b, nxt
        g = a[max(a)]
        if delta == 1:
            h = g
        elif delta > 1:
            h = exact_divide(g ** delta, h ** (delta - 1))
            assert h is not None
        # delta == 0 leaves h unchanged


_CERT_PRIME = (1 << 61) - 1


def _specialized_coeffs(p: LaurentPolynomial, main: int, points: list) -> list | None:
    """Coefficients of p(main variable) after evaluating the other variables
    at points, modulo the certificate prime.  None when the top coefficient
    collapses (the certificate would be unsound)."""
    deg = p.max_degree_in(main)
    out = [0] * (deg + 1)
    for e, c in p.terms.items():
        val = c % _CERT_PRIME
        for i, x in enumerate(e):
            if i == main or x == 0:
                continue
            val = val * pow(points[i], x, _CERT_PRIME) % _CERT_PRIME
        out[e[main]] = (out[e[main]] + val) % _CERT_PRIME
    if out[deg] == 0:
        return None
    return out


def _mod_uni_gcd_degree(a: list, b: list) -> int:
    """Degree of gcd of two univariate polynomials over the prime field."""
    P = _CERT_PRIME

    def strip(x):
        while x and x[-1] == 0:
            x.pop()
        return x

    a, b = strip(list(a)), strip(list(b))
    while b:
        inv = pow(b[-1], P - 2, P)
        while len(a) >= len(b):
            f = a[-1] * inv % P
            off = len(a) - len(b)
            for i, c in enumerate(b):
                a[off + i] = (a[off + i] - f * c) % P
            strip(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _gcd_free_of(p: LaurentPolynomial, q: LaurentPolynomial, main: int) -> bool:
    """Sound one-sided test: True proves gcd(p, q) has degree 0 in variable
    main.  Specializing the other variables maps the true gcd onto a divisor
    of the specialized gcd as long as the leading coefficient survives, so a
    degree-zero specialized gcd is a certificate."""
    for salt in range(4):
        points = [
            pow(5, 7 * i + salt + 1, _CERT_PRIME) % 1000003 + 2
            for i in range(p.num_vars)
        ]
        ca = _specialized_coeffs(p, main, points)
        cb = _specialized_coeffs(q, main, points)
        if ca is None or cb is None:
            continue
        if _mod_uni_gcd_degree(ca, cb) == 0:
            return True
        return False
    return False


def _monomial_gcd_with(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """gcd when p is a single term: common monomial times integer content gcd."""
    ((e, c),) = p.terms.items()
    common = tuple(min(a, b) for a, b in zip(e, q.min_exponents()))
    coeff = _int_gcd(abs(c), q.integer_content())
    return LaurentPolynomial.monomial(coeff, common)


def _poly_gcd(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """gcd of two polynomials with nonnegative exponents, up to sign."""
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    if p.terms == q.terms or p.terms == (-q).terms:
        return p
    if p.is_monomial():
        return _monomial_gcd_with(p, q)
    if q.is_monomial():
        return _monomial_gcd_with(q, p)

    # strip the common monomial factor; it multiplies back in at the end
    mp = p.min_exponents()
    mq = q.min_exponents()
    common = tuple(min(a, b) for a, b in zip(mp, mq))
    if any(common):
        return _poly_gcd(
            p.shift(tuple(-x for x in common)), q.shift(tuple(-x for x in common))
        ).shift(common)

    main = -1
    for k in reversed(range(p.num_vars)):
        if p.max_degree_in(k) > 0 or q.max_degree_in(k) > 0:
            main = k
            break
    if main < 0:
        return LaurentPolynomial.constant(
            _int_gcd(p.constant_value(), q.constant_value()), p.num_vars
        )
    if p.max_degree_in(main) == 0:
        return _poly_gcd(p, _content(_split_by_var(q, main)))
    if q.max_degree_in(main) == 0:
        return _poly_gcd(_content(_split_by_var(p, main)), q)

    if _gcd_free_of(p, q, main):
        return _poly_gcd(
            _content(_split_by_var(p, main)), _content(_split_by_var(q, main))
        )

    pu = _split_by_var(p, main)
    qu = _split_by_var(q, main)
    cp = _content(pu)
    cq = _content(qu)
    cont = _poly_gcd(cp, cq)
    a = _primitive(pu)
    b = _primitive(qu)
    if max(a) < max(b):
        a, b = b, a
    last = _subresultant_prs(a, b, p.num_vars)
    g = _join_by_var(_primitive(last), main, p.num_vars)
    return cont * g


def laurent_gcd(ps: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    """gcd of a family of Laurent polynomials, in unit-normal form.

    The input is consumed lazily and the fold stops as soon as the running
    gcd becomes a unit, so callers may feed an expensive generator (minor
    enumeration) and pay only for the prefix that matters.  The gcd of an
    all-zero family is zero.
    """
    it = iter(ps)
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("gcd of an empty family") from None
    num_vars = first.num_vars
    g: LaurentPolynomial | None = None if first.is_zero() else _poly_part(first)
    if g is None or not g.is_unit():
        for p in it:
            if p.num_vars != num_vars:
                raise ValueError("variable-count mismatch in gcd input")
            if p.is_zero():
                continue
            phat = _poly_part(p)
            g = phat if g is None else _poly_gcd(g, phat)
            if g.is_unit():
                break
    if g is None:
        return LaurentPolynomial.zero(num_vars)
    return unit_normalize(g)
