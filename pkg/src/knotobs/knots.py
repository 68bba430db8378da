"""Symbolic knot expressions and their classical invariants.

The expression language covers exactly what the concordance obstructions
need: torus knots, cables, untwisted Whitehead doubles, mirrors, connected
sums and the unknot.  Alexander polynomials and Seifert genus are computed
structurally; the three knot families J_n, J'_n and L_n are provided as
constructors.

Whitehead doubles are fixed as untwisted with positive clasp and enter every
computation only through Delta = 1 and g = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Union

from . import laurent
from .errors import (
    ParseError,
    UnsupportedOrientationError,
    ValidationError,
)

SLICE_GENUS_SOURCE_L = "published slice-genus computation for the L-family"


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int
    slice_hint: tuple[int, str] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValidationError("torus knot parameters must be >= 2")
        if math.gcd(self.p, self.q) != 1:
            raise ValidationError(f"torus knot parameters must be coprime: ({self.p},{self.q})")


@dataclass(frozen=True)
class Cable:
    companion: "KnotExpression"
    p: int
    q: int
    slice_hint: tuple[int, str] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.p < 1:
            raise ValidationError("cable longitude winding p must be >= 1")
        if math.gcd(self.p, abs(self.q)) != 1:
            raise ValidationError(f"cable parameters must be coprime: ({self.p},{self.q})")


@dataclass(frozen=True)
class WhiteheadDouble:
    companion: "KnotExpression"
    slice_hint: tuple[int, str] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Mirror:
    inner: "KnotExpression"
    slice_hint: tuple[int, str] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Sum:
    summands: tuple["KnotExpression", ...]
    slice_hint: tuple[int, str] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Unknot:
    slice_hint: tuple[int, str] | None = field(default=None, compare=False)


KnotExpression = Union[TorusKnot, Cable, WhiteheadDouble, Mirror, Sum, Unknot]

UNKNOT = Unknot()


# ---------------------------------------------------------------------------
# constructors producing normalized expressions
# ---------------------------------------------------------------------------


def torus(p: int, q: int) -> TorusKnot:
    if p > q:
        p, q = q, p
    return TorusKnot(p, q)


def cable(companion: KnotExpression, p: int, q: int) -> KnotExpression:
    if p == 1:
        # the (1,q) pattern is the core curve, so the cable is the companion
        return companion
    return Cable(normalize(companion), p, q)


def wh(companion: KnotExpression) -> WhiteheadDouble:
    return WhiteheadDouble(normalize(companion))


def mirror(e: KnotExpression) -> KnotExpression:
    return normalize(Mirror(e))


def sum_of(*exprs: KnotExpression) -> KnotExpression:
    return normalize(Sum(tuple(exprs)))


def normalize(e: KnotExpression) -> KnotExpression:
    """Canonical form: sums flattened, sorted and unknot-free; mirrors pushed
    inside sums and cancelled pairwise; single-summand sums collapsed.  A
    slice-genus annotation on the root survives normalization."""
    out = _normalize(e)
    hint = getattr(e, "slice_hint", None)
    if hint is not None and getattr(out, "slice_hint", None) is None:
        out = replace(out, slice_hint=hint)
    return out


def _normalize(e: KnotExpression) -> KnotExpression:
    if isinstance(e, (TorusKnot, Unknot)):
        return e
    if isinstance(e, Cable):
        inner = normalize(e.companion)
        if e.p == 1:
            return inner
        if inner is not e.companion:
            return replace(e, companion=inner)
        return e
    if isinstance(e, WhiteheadDouble):
        inner = normalize(e.companion)
        if inner is not e.companion:
            return replace(e, companion=inner)
        return e
    if isinstance(e, Mirror):
        inner = normalize(e.inner)
        if isinstance(inner, Unknot):
            return UNKNOT
        if isinstance(inner, Mirror):
            return inner.inner
        if isinstance(inner, Sum):
            return normalize(Sum(tuple(Mirror(s) for s in inner.summands)))
        return Mirror(inner)
    if isinstance(e, Sum):
        flat: list[KnotExpression] = []
        for s in e.summands:
            s = normalize(s)
            if isinstance(s, Sum):
                flat.extend(s.summands)
            elif isinstance(s, Unknot):
                continue
            else:
                flat.append(s)
        if not flat:
            return UNKNOT
        if len(flat) == 1:
            return flat[0]
        flat.sort(key=format_knot)
        return Sum(tuple(flat))
    raise ValidationError(f"not a knot expression: {e!r}")


def summands(e: KnotExpression) -> tuple[KnotExpression, ...]:
    e = normalize(e)
    return e.summands if isinstance(e, Sum) else (e,)


# ---------------------------------------------------------------------------
# text grammar: T(p,q) | Wh(E) | Cable(E;p,q) | -E | E # E | U
# ---------------------------------------------------------------------------


def format_knot(e: KnotExpression) -> str:
    if isinstance(e, Unknot):
        return "U"
    if isinstance(e, TorusKnot):
        return f"T({e.p},{e.q})"
    if isinstance(e, WhiteheadDouble):
        return f"Wh({format_knot(e.companion)})"
    if isinstance(e, Cable):
        return f"Cable({format_knot(e.companion)};{e.p},{e.q})"
    if isinstance(e, Mirror):
        return f"-{format_knot(e.inner)}"
    if isinstance(e, Sum):
        return " # ".join(format_knot(s) for s in e.summands)
    raise ValidationError(f"not a knot expression: {e!r}")


class _Parser:
    def __init__(self, text: str):
        self.s = text.replace(" ", "").replace("\t", "")
        self.i = 0

    def error(self, msg: str):
        raise ParseError(f"{msg} at position {self.i} in knot expression")

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def take(self, token: str):
        if not self.s.startswith(token, self.i):
            self.error(f"expected {token!r}")
        self.i += len(token)

    def integer(self) -> int:
        start = self.i
        if self.peek() == "-":
            self.i += 1
        while self.peek().isdigit():
            self.i += 1
        if self.i == start or self.s[start:self.i] == "-":
            self.error("expected an integer")
        return int(self.s[start:self.i])

    def expression(self) -> KnotExpression:
        parts = [self.term()]
        while self.peek() == "#":
            self.i += 1
            parts.append(self.term())
        return Sum(tuple(parts)) if len(parts) > 1 else parts[0]

    def term(self) -> KnotExpression:
        if self.peek() == "-":
            self.i += 1
            return Mirror(self.term())
        return self.atom()

    def atom(self) -> KnotExpression:
        if self.s.startswith("T(", self.i):
            self.take("T(")
            p = self.integer()
            self.take(",")
            q = self.integer()
            self.take(")")
            return torus(p, q)
        if self.s.startswith("Wh(", self.i):
            self.take("Wh(")
            inner = self.expression()
            self.take(")")
            return WhiteheadDouble(inner)
        if self.s.startswith("Cable(", self.i):
            self.take("Cable(")
            inner = self.expression()
            self.take(";")
            p = self.integer()
            self.take(",")
            q = self.integer()
            self.take(")")
            return Cable(inner, p, q) if p > 1 else inner
        if self.peek() == "U":
            self.i += 1
            return UNKNOT
        if self.peek() == "(":
            self.i += 1
            inner = self.expression()
            self.take(")")
            return inner
        self.error("expected a knot atom")


def parse_knot(text: str) -> KnotExpression:
    p = _Parser(text)
    e = p.expression()
    if p.i != len(p.s):
        p.error("trailing input")
    return normalize(e)


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def alexander(e: KnotExpression) -> laurent.LaurentPolynomial:
    """Alexander polynomial, centered symmetric normalization.

    Cables use Delta_{K_{p,q}}(t) = Delta_K(t^p) * Delta_{T(p,q)}(t); for
    q in {0, +-1} the pattern torus factor is trivial.  Untwisted Whitehead
    doubles have trivial Alexander polynomial.
    """
    e = normalize(e)
    if isinstance(e, Unknot):
        return laurent.ONE
    if isinstance(e, TorusKnot):
        return laurent.torus_alexander(e.p, e.q)
    if isinstance(e, WhiteheadDouble):
        return laurent.ONE
    if isinstance(e, Mirror):
        return alexander(e.inner)
    if isinstance(e, Sum):
        out = laurent.ONE
        for s in e.summands:
            out = out * alexander(s)
        return out
    if isinstance(e, Cable):
        base = alexander(e.companion).substitute_power(e.p)
        if e.q >= 2:
            return base * laurent.torus_alexander(e.p, e.q)
        if e.q in (0, 1, -1):
            return base
        raise UnsupportedOrientationError(
            f"cable meridian winding {e.q} <= -2 has no verified convention"
        )
    raise ValidationError(f"not a knot expression: {e!r}")


@dataclass(frozen=True)
class GenusReport:
    seifert_genus: int
    summand_max_genus: int
    slice_genus_hint: int | None = None
    slice_genus_source: str | None = None

    def __post_init__(self):
        if self.summand_max_genus > self.seifert_genus:
            raise ValidationError("summand genus cannot exceed total genus")
        if self.slice_genus_hint is not None:
            if self.slice_genus_hint > self.seifert_genus:
                raise ValidationError("slice genus hint cannot exceed Seifert genus")
            if self.slice_genus_source is None:
                raise ValidationError("slice genus hints must carry a provenance tag")

    def as_dict(self) -> dict:
        return {
            "seifert_genus": self.seifert_genus,
            "summand_max_genus": self.summand_max_genus,
            "slice_genus_hint": self.slice_genus_hint,
            "slice_genus_source": self.slice_genus_source,
        }


def _seifert_genus(e: KnotExpression) -> int:
    if isinstance(e, Unknot):
        return 0
    if isinstance(e, TorusKnot):
        return (e.p - 1) * (e.q - 1) // 2
    if isinstance(e, WhiteheadDouble):
        return 1
    if isinstance(e, Mirror):
        return _seifert_genus(e.inner)
    if isinstance(e, Sum):
        return sum(_seifert_genus(s) for s in e.summands)
    if isinstance(e, Cable):
        if e.q <= 0:
            raise UnsupportedOrientationError(
                "Seifert genus of cables is only supported for q >= 1"
            )
        return e.p * _seifert_genus(e.companion) + (e.p - 1) * (e.q - 1) // 2
    raise ValidationError(f"not a knot expression: {e!r}")


def genus(e: KnotExpression) -> GenusReport:
    """Seifert genus from the standard constructions: g(T(p,q)) = (p-1)(q-1)/2,
    g(Wh K) = 1, g(K_{p,q}) = p g(K) + (p-1)(q-1)/2 for q >= 1, additive under
    connected sum."""
    e = normalize(e)
    total = _seifert_genus(e)
    per_summand = max(_seifert_genus(s) for s in summands(e))
    hint = getattr(e, "slice_hint", None)
    return GenusReport(
        seifert_genus=total,
        summand_max_genus=per_summand,
        slice_genus_hint=hint[0] if hint else None,
        slice_genus_source=hint[1] if hint else None,
    )


# ---------------------------------------------------------------------------
# the three families
# ---------------------------------------------------------------------------


def family(name: str, n: int) -> KnotExpression:
    """Family member by name:

    J      (Wh T(2,3))_{n,n+1} # -T(n,n+1)
    Jprime (Wh T(2,3))_{n,2n-1} # -T(n,2n-1)
    L      (Wh T(2,3))_{n,1} # -(Wh T(2,3))_{n-1,1}

    L members carry the published slice-genus-1 annotation.
    """
    if n < 2:
        raise ValidationError(f"family index must be >= 2, got {n}")
    core = wh(torus(2, 3))
    if name == "J":
        expr = sum_of(cable(core, n, n + 1), mirror(torus(n, n + 1)))
    elif name == "Jprime":
        expr = sum_of(cable(core, n, 2 * n - 1), mirror(torus(n, 2 * n - 1)))
    elif name == "L":
        expr = sum_of(cable(core, n, 1), mirror(cable(core, n - 1, 1)))
        expr = replace(expr, slice_hint=(1, SLICE_GENUS_SOURCE_L))
    else:
        raise ValidationError(f"unknown family {name!r}; expected J, Jprime or L")
    return expr


def gsp_bound_of_knot(e: KnotExpression) -> tuple[Fraction, Fraction]:
    """(lower, upper) bounds for the splitting concordance genus: lower from
    odd-multiplicity self-reciprocal Alexander factors, upper from the largest
    Seifert genus among the top-level summands."""
    lower = laurent.gsp_lower_bound(alexander(e))
    upper = Fraction(genus(e).summand_max_genus)
    return lower, upper
