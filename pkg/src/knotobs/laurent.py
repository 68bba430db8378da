"""Exact integer Laurent polynomial arithmetic and factorization.

A Laurent polynomial is stored as a sparse map from integer exponent to
nonzero integer coefficient.  On top of the ring arithmetic this module
provides breadth, cyclotomic polynomials, complete irreducible factorization
over the integers (up to units +-t^k), the Fox-Milnor slice condition with an
explicit witness, and the splitting-genus lower bound read off from
odd-multiplicity self-reciprocal factors.

Factorization strategy, in order: strip the integer content into prime
constants, strip cyclotomic factors by trial division (screened by integer
divisibility of evaluations), strip linear factors by the rational root test,
then split the remaining square-free part by Kronecker interpolation.  Desk
scale degrees keep the interpolation search small.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    FactorizationComplexityError,
    NormalizationError,
    ParseError,
    ValidationError,
    ZeroPolynomialError,
)


class LaurentPolynomial:
    """Integer Laurent polynomial with finite support.

    Instances are immutable; every operation returns a new object.  The
    coefficient map never stores a zero.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if not isinstance(e, int) or not isinstance(c, int):
                    raise ValidationError("exponents and coefficients must be integers")
                if c != 0:
                    data[e] = c
        object.__setattr__(self, "_coeffs", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *args):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(c: int) -> "LaurentPolynomial":
        return LaurentPolynomial({0: c})

    @staticmethod
    def monomial(c: int, e: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e: c})

    # -- structure ----------------------------------------------------

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    @property
    def min_exp(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no support")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("zero polynomial has no support")
        return max(self._coeffs)

    @property
    def breadth(self) -> int:
        return self.max_exp - self.min_exp

    @property
    def leading_coeff(self) -> int:
        return self._coeffs[self.max_exp]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self._coeffs.items())))
        return self._hash

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LaurentPolynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            raise ValidationError("negative powers are not polynomials")
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by the unit t^k."""
        return LaurentPolynomial({e + k: c for e, c in self._coeffs.items()})

    def reciprocal(self) -> "LaurentPolynomial":
        """Substitute t -> t^-1."""
        return LaurentPolynomial({-e: c for e, c in self._coeffs.items()})

    def substitute_power(self, p: int) -> "LaurentPolynomial":
        """Substitute t -> t^p (p >= 1)."""
        if p < 1:
            raise ValidationError("substitution power must be >= 1")
        return LaurentPolynomial({e * p: c for e, c in self._coeffs.items()})

    def derivative(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e - 1: e * c for e, c in self._coeffs.items() if e != 0})

    def evaluate(self, x):
        """Exact evaluation at a nonzero int or Fraction."""
        if x == 0:
            raise ValidationError("Laurent polynomials cannot be evaluated at 0")
        acc = Fraction(0)
        for e, c in self._coeffs.items():
            acc += c * Fraction(x) ** e
        return int(acc) if acc.denominator == 1 else acc

    # -- normal forms --------------------------------------------------

    @property
    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self._coeffs.values()) if self._coeffs else 0

    def primitive(self) -> "LaurentPolynomial":
        c = self.content
        if c in (0, 1):
            return self
        return LaurentPolynomial({e: v // c for e, v in self._coeffs.items()})

    def canonical(self) -> "LaurentPolynomial":
        """Representative up to units: primitive, positive leading coefficient,
        minimal exponent 0."""
        if self.is_zero:
            return self
        f = self.primitive().shift(-self.min_exp)
        if f.leading_coeff < 0:
            f = -f
        return f

    def centered(self) -> "LaurentPolynomial":
        """Shift so the support is symmetric about exponent 0 (breadth must be even)."""
        if self.is_zero:
            return self
        if self.breadth % 2 != 0:
            raise ValidationError("cannot center a polynomial of odd breadth")
        return self.shift(-(self.min_exp + self.max_exp) // 2)

    def is_palindromic(self) -> bool:
        """True when the coefficient vector reads the same in both directions."""
        if self.is_zero:
            return True
        lo, hi = self.min_exp, self.max_exp
        return all(self.coeff(lo + i) == self.coeff(hi - i) for i in range(self.breadth + 1))

    # -- text form ------------------------------------------------------

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({format_laurent(self)!r})"


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
T = LaurentPolynomial.monomial(1, 1)


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.constant(x)
    raise ValidationError(f"cannot treat {x!r} as a Laurent polynomial")


def arithmetic(f: LaurentPolynomial, g: LaurentPolynomial, op: str) -> LaurentPolynomial:
    """Dispatch form of +, -, *; kept as the stable operation surface."""
    if op == "add":
        return f + g
    if op == "subtract":
        return f - g
    if op == "multiply":
        return f * g
    raise ValidationError(f"unknown arithmetic op {op!r}")


def breadth(f: LaurentPolynomial) -> int:
    return f.breadth


def reciprocal(f: LaurentPolynomial) -> LaurentPolynomial:
    return f.reciprocal()


# ---------------------------------------------------------------------------
# text format: "c0*t^e0 + c1*t^e1 + ..." with strictly increasing exponents
# ---------------------------------------------------------------------------


def format_laurent(f: LaurentPolynomial) -> str:
    if f.is_zero:
        return "0"
    return " + ".join(f"{c}*t^{e}" for e, c in sorted(f.coeffs.items()))


def parse_laurent(text: str) -> LaurentPolynomial:
    """Parse the canonical text format, whitespace-insensitive; accepts bare
    integers, omitted coefficients ("t^2", "-t") and omitted exponents ("3t")."""
    s = text.replace(" ", "").replace("\t", "")
    if not s:
        raise ParseError("empty polynomial text")
    # split on + and - that start a new term; "^-" keeps its minus
    terms = []
    cur = ""
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "+" and cur:
            terms.append(cur)
            cur = ""
        elif ch == "-" and cur and not cur.endswith("^") and not cur.endswith("*"):
            terms.append(cur)
            cur = "-"
        else:
            cur += ch
        i += 1
    terms.append(cur)
    coeffs: dict[int, int] = {}
    for term in terms:
        if not term or term in ("+", "-"):
            raise ParseError(f"malformed term in {text!r}")
        coeff_part, sep, exp_part = term.partition("t")
        if not sep:
            try:
                c = int(term)
            except ValueError as exc:
                raise ParseError(f"bad constant term {term!r}") from exc
            e = 0
        else:
            if coeff_part.endswith("*"):
                coeff_part = coeff_part[:-1]
            if coeff_part in ("", "+"):
                c = 1
            elif coeff_part == "-":
                c = -1
            else:
                try:
                    c = int(coeff_part)
                except ValueError as exc:
                    raise ParseError(f"bad coefficient in {term!r}") from exc
            if exp_part == "":
                e = 1
            elif exp_part.startswith("^"):
                try:
                    e = int(exp_part[1:])
                except ValueError as exc:
                    raise ParseError(f"bad exponent in {term!r}") from exc
            else:
                raise ParseError(f"malformed term {term!r}")
        coeffs[e] = coeffs.get(e, 0) + c
    return LaurentPolynomial(coeffs)


# ---------------------------------------------------------------------------
# dense helpers (ordinary polynomials, coefficient list indexed by degree)
# ---------------------------------------------------------------------------


def _dense(f: LaurentPolynomial) -> list[int]:
    """Coefficient list of f shifted to minimal exponent 0."""
    lo = f.min_exp
    out = [0] * (f.breadth + 1)
    for e, c in f.coeffs.items():
        out[e - lo] = c
    return out


def _from_dense(coeffs) -> LaurentPolynomial:
    return LaurentPolynomial({i: int(c) for i, c in enumerate(coeffs) if c})


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _deg(c: list) -> int:
    return len(c) - 1


def _dmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _dsub(a: list, b: list) -> list:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _ddivmod(a: list, b: list) -> tuple[list, list]:
    """Division over the rationals; returns (quotient, remainder) as Fractions."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in a]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    dv = [Fraction(x) for x in b]
    while _deg(_trim(rem[:])) >= _deg(dv) and any(rem):
        rem = _trim(rem)
        shift = len(rem) - len(dv)
        factor = rem[-1] / dv[-1]
        quot[shift] += factor
        for i, y in enumerate(dv):
            rem[shift + i] -= factor * y
        rem = _trim(rem)
        if not rem:
            break
    return _trim(quot), _trim(rem)


def _dexact_div(a: list, b: list):
    """Exact integer quotient a / b, or None when b does not divide a over Z."""
    q, r = _ddivmod(a, b)
    if r:
        return None
    if any(x.denominator != 1 for x in q):
        return None
    return [int(x) for x in q]


def _dcontent(a: list) -> int:
    return math.gcd(*[abs(x) for x in a]) if a else 0


def _dprimitive(a: list) -> list:
    c = _dcontent(a)
    if c in (0, 1):
        return a[:]
    return [x // c for x in a]


def _dgcd(a: list, b: list) -> list:
    """Primitive gcd over Z with positive leading coefficient."""
    fa = [Fraction(x) for x in _trim(a[:])]
    fb = [Fraction(x) for x in _trim(b[:])]
    while fb:
        _, r = _ddivmod(fa, fb)
        fa, fb = fb, r
    if not fa:
        return []
    # clear denominators, reduce to primitive integer form
    lcm = 1
    for x in fa:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = _dprimitive([int(x * lcm) for x in fa])
    if ints and ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def _deval(a: list, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def exact_div(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    """Exact quotient f / g in the Laurent ring; raises if g does not divide f."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return ZERO
    q = _dexact_div(_dense(f), _dense(g))
    if q is None:
        raise ValidationError(f"{g} does not divide {f}")
    return _from_dense(q).shift(f.min_exp - g.min_exp)


# ---------------------------------------------------------------------------
# number theory helpers
# ---------------------------------------------------------------------------


def totient(n: int) -> int:
    """Euler's phi, via the product over prime divisors."""
    if n < 1:
        raise ValidationError("totient requires n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    m = abs(n)
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = [1]
    for p, e in _prime_factors(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPolynomial:
    """The n-th cyclotomic polynomial, by exact division of t^n - 1."""
    if n < 1:
        raise ValidationError("cyclotomic requires n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]  # t^n - 1
    for d in range(1, n):
        if n % d == 0:
            q = _dexact_div(poly, _dense(cyclotomic(d)))
            assert q is not None
            poly = q
    return _from_dense(poly)


@lru_cache(maxsize=None)
def _cyclotomic_at(n: int, x: int) -> int:
    return _deval(_dense(cyclotomic(n)), x)


def torus_alexander(p: int, q: int) -> LaurentPolynomial:
    """Alexander polynomial of the (p,q) torus knot, centered symmetric form:
    (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))."""
    if p < 2 or q < 2:
        raise ValidationError("torus knot parameters must be >= 2")
    if math.gcd(p, q) != 1:
        raise ValidationError(f"torus knot parameters must be coprime, got ({p},{q})")

    def tn_minus_1(n):
        return [-1] + [0] * (n - 1) + [1]

    num = _dmul(tn_minus_1(p * q), tn_minus_1(1))
    den = _dmul(tn_minus_1(p), tn_minus_1(q))
    quot = _dexact_div(num, den)
    assert quot is not None
    return _from_dense(quot).centered()


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """Complete factorization f = sign * t^exponent * prod(factors^mult).

    Factors are canonical irreducible representatives: prime integers
    (breadth 0) or primitive polynomials with positive leading coefficient and
    minimal exponent 0, ordered by (breadth, coefficient tuple).
    """

    sign: int
    exponent: int
    factors: tuple[tuple[LaurentPolynomial, int], ...]

    @property
    def unit(self) -> LaurentPolynomial:
        return LaurentPolynomial.monomial(self.sign, self.exponent)

    def expand(self) -> LaurentPolynomial:
        out = self.unit
        for p, m in self.factors:
            out = out * p**m
        return out

    def multiplicity(self, p: LaurentPolynomial) -> int:
        key = p.canonical()
        for q, m in self.factors:
            if q == key:
                return m
        return 0

    def as_dict(self) -> dict:
        return {
            "unit": format_laurent(self.unit),
            "factors": [
                {"factor": format_laurent(p), "multiplicity": m} for p, m in self.factors
            ],
        }


def _factor_key(p: LaurentPolynomial):
    dense = tuple(_dense(p))
    return (p.breadth, dense)


def _strip_rational_roots(F: list) -> tuple[list, list[list]]:
    """Remove linear factors b*t - a (rational roots a/b) from a primitive
    dense polynomial; returns (remaining, linear factors found)."""
    found = []
    F = _trim(F[:])
    while _deg(F) >= 1:
        hit = None
        for b in _divisors(F[-1]):
            for a in _divisors(F[0]):
                if math.gcd(a, b) != 1:
                    continue
                for aa in (a, -a):
                    cand = _trim([-aa, b])
                    q = _dexact_div(F, cand)
                    if q is not None:
                        hit = (cand, q)
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            break
        found.append(hit[0])
        F = _dprimitive(hit[1])
    return F, found


_KRONECKER_BUDGET = 400_000


def _kronecker_split(W: list) -> list | None:
    """Find one nontrivial factor of a primitive square-free polynomial with
    no rational roots, by interpolation through small integer points; returns
    the factor (dense, primitive, positive lc) or None when W is irreducible.
    """
    n = _deg(W)
    if n <= 3:
        return None  # degree 2 or 3 without rational roots is irreducible
    pool = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6]
    pts = sorted(pool, key=lambda x: abs(_deval(W, x)))
    for d in range(2, n // 2 + 1):
        sel = pts[: d + 1]
        values = [_deval(W, x) for x in sel]
        assert all(values), "square-free part with no rational roots cannot vanish"
        divisor_lists = []
        for i, v in enumerate(values):
            ds = _divisors(v)
            if i == 0:
                divisor_lists.append(ds)  # global sign is quotiented out
            else:
                divisor_lists.append([s * t for t in ds for s in (1, -1)])
        budget = 1
        for ds in divisor_lists:
            budget *= len(ds)
        if budget > _KRONECKER_BUDGET:
            raise FactorizationComplexityError(
                f"interpolation search space {budget} exceeds budget at degree {d}"
            )
        # depth-first over divisor tuples; prune with (x_i - x_j) | (v_i - v_j)
        stack: list[int] = []

        def search(depth: int):
            if depth == len(sel):
                cand = _interpolate_integer(sel, stack)
                if cand is not None and _deg(cand) == d:
                    cand = _dprimitive(cand)
                    if cand[-1] < 0:
                        cand = [-x for x in cand]
                    if _dexact_div(W, cand) is not None:
                        return cand
                return None
            for v in divisor_lists[depth]:
                ok = True
                for j in range(depth):
                    diff = sel[depth] - sel[j]
                    if (v - stack[j]) % diff != 0:
                        ok = False
                        break
                if ok:
                    stack.append(v)
                    hit = search(depth + 1)
                    if hit is not None:
                        return hit
                    stack.pop()
            return None

        hit = search(0)
        if hit is not None:
            return hit
    return None


def _interpolate_integer(xs: list[int], ys: list[int]) -> list | None:
    """Lagrange interpolation; returns dense integer coefficients or None."""
    m = len(xs)
    coeffs = [Fraction(0)] * m
    for i in range(m):
        basis = [Fraction(1)]
        denom = 1
        for j in range(m):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                new[k] += b * (-xs[j])
                new[k + 1] += b
            basis = new
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i], denom)
        for k, b in enumerate(basis):
            coeffs[k] += b * scale
    if any(c.denominator != 1 for c in coeffs):
        return None
    return _trim([int(c) for c in coeffs])


def _kronecker_irreducibles(W: list) -> list[list]:
    """Complete splitting of a primitive square-free dense polynomial with no
    rational roots into irreducible factors."""
    if _deg(W) <= 1:
        return [W] if _deg(W) >= 1 else []
    piece = _kronecker_split(W)
    if piece is None:
        return [W]
    rest = _dexact_div(W, piece)
    assert rest is not None
    return _kronecker_irreducibles(piece) + _kronecker_irreducibles(_dprimitive(rest))


def factor(f: LaurentPolynomial, cyclotomic_bound: int | None = None) -> Factorization:
    """Complete irreducible factorization over Z up to units +-t^k.

    cyclotomic_bound caps the index of cyclotomic polynomials tried by trial
    division (default 3 * breadth); factors beyond the bound are still found
    by the general interpolation stage.
    """
    if f.is_zero:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    exponent = f.min_exp
    F = _dense(f)
    sign = 1
    if F[-1] < 0:
        sign = -1
        F = [-x for x in F]

    found: dict[LaurentPolynomial, int] = {}

    def record(poly: LaurentPolynomial, mult: int = 1):
        found[poly] = found.get(poly, 0) + mult

    content = _dcontent(F)
    if content > 1:
        F = [x // content for x in F]
        for p, e in _prime_factors(content).items():
            record(LaurentPolynomial.constant(p), e)

    if _deg(F) >= 1:
        bound = cyclotomic_bound if cyclotomic_bound is not None else 3 * f.breadth
        screens = [x for x in (2, 3) if _deval(F, x) != 0]
        screen_vals = {x: _deval(F, x) for x in screens}
        for d in range(1, bound + 1):
            if totient(d) > _deg(F):
                continue
            if any(screen_vals[x] % _cyclotomic_at(d, x) != 0 for x in screens):
                continue
            phi_d = _dense(cyclotomic(d))
            mult = 0
            while True:
                q = _dexact_div(F, phi_d)
                if q is None:
                    break
                F = q
                mult += 1
            if mult:
                record(cyclotomic(d), mult)
                screens = [x for x in (2, 3) if _deval(F, x) != 0]
                screen_vals = {x: _deval(F, x) for x in screens}
            if _deg(F) < 1:
                break

    if _deg(F) >= 1:
        F, linears = _strip_rational_roots(F)
        for lin in linears:
            poly = _from_dense(lin).canonical()
            record(poly)
        # re-collect multiplicities of repeated linear factors
    if _deg(F) >= 1:
        sqfree_gcd = _dgcd(F, _trim([i * c for i, c in enumerate(F)][1:]))
        W = _dexact_div(F, sqfree_gcd)
        assert W is not None
        W = _dprimitive(W)
        for irr in _kronecker_irreducibles(W):
            poly = _from_dense(irr).canonical()
            dense_irr = _dense(poly)
            mult = 0
            while True:
                q = _dexact_div(F, dense_irr)
                if q is None:
                    break
                F = q
                mult += 1
            assert mult > 0
            record(poly, mult)
        assert _deg(F) < 1 and F and F[0] == 1, "factor residue must be the unit 1"

    ordered = tuple(sorted(found.items(), key=lambda kv: _factor_key(kv[0])))
    result = Factorization(sign=sign, exponent=exponent, factors=ordered)
    assert result.expand() == f, "factorization must reproduce the input"
    return result


# ---------------------------------------------------------------------------
# Fox-Milnor and the splitting-genus bound
# ---------------------------------------------------------------------------


def reciprocal_partner(p: LaurentPolynomial) -> LaurentPolynomial:
    """Canonical representative of t^{deg p} * p(1/t)."""
    return p.reciprocal().canonical()


def is_alexander_normalized(f: LaurentPolynomial) -> bool:
    return (not f.is_zero) and f.evaluate(1) in (1, -1)


@dataclass(frozen=True)
class FoxMilnorResult:
    passes: bool
    witness: LaurentPolynomial | None
    violations: tuple[str, ...]
    factorization: Factorization

    def as_dict(self) -> dict:
        return {
            "passes": self.passes,
            "witness": format_laurent(self.witness) if self.witness else None,
            "violations": list(self.violations),
            "factorization": self.factorization.as_dict(),
        }


def fox_milnor(f: LaurentPolynomial) -> FoxMilnorResult:
    """Decide whether f factors as +-t^n w(t) w(1/t); on a pass return the
    witness w.

    Every self-reciprocal irreducible factor must occur with even
    multiplicity, and every other factor with the same multiplicity as its
    reciprocal partner.
    """
    if f.is_zero:
        raise ZeroPolynomialError("Fox-Milnor is undefined for the zero polynomial")
    if not is_alexander_normalized(f):
        raise NormalizationError(
            f"normalization required: f(1) = {f.evaluate(1)}, expected +-1"
        )
    fac = factor(f)
    mult = {p: m for p, m in fac.factors}
    violations = []
    witness = ONE
    seen = set()
    for p, m in fac.factors:
        if p in seen:
            continue
        partner = reciprocal_partner(p)
        if partner == p:
            if m % 2 != 0:
                violations.append(
                    f"self-reciprocal factor {format_laurent(p)} has odd multiplicity {m}"
                )
            else:
                witness = witness * p ** (m // 2)
            seen.add(p)
        else:
            pm = mult.get(partner, 0)
            if pm != m:
                violations.append(
                    f"factor {format_laurent(p)} has multiplicity {m} but its "
                    f"reciprocal partner has {pm}"
                )
            else:
                # deterministic pick: the partner with the larger coefficient tuple
                chosen = max(p, partner, key=_factor_key)
                witness = witness * chosen**m
            seen.add(p)
            seen.add(partner)
    if violations:
        return FoxMilnorResult(False, None, tuple(violations), fac)
    # confirm the witness reproduces f up to a unit
    prod = witness * witness.reciprocal()
    ratio = exact_div(f, prod)
    assert ratio.breadth == 0 and abs(ratio.leading_coeff) == 1
    return FoxMilnorResult(True, witness, (), fac)


def gsp_lower_bound(f: LaurentPolynomial) -> Fraction:
    """Largest breadth/2 over self-reciprocal irreducible factors of odd
    multiplicity; 0 when every such factor has even multiplicity.

    Reciprocal pairs of distinct factors never obstruct: they can always be
    split between a witness and its reflection, so only self-reciprocal
    factors enter the bound.
    """
    fac = factor(f)
    best = Fraction(0)
    for p, m in fac.factors:
        if m % 2 == 1 and p.breadth > 0 and reciprocal_partner(p) == p:
            best = max(best, Fraction(p.breadth, 2))
    return best
