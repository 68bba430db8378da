"""Exact piecewise-linear Upsilon calculus on [0,2].

Upsilon of an L-space-form polynomial is realized through its staircase:
corners read off the alternating Alexander coefficients, then
U(t) = -2 min over corners (i,j) of [(1 - t/2) i + (t/2) j].  The derivative
jump at t0 drives two obstructions: a genus bound from the denominator of a
singularity, and exclusion of nonzero jumps on (0, 1/n) for sums of genus-n
knots.  The J' family enters only through its published derivative-jump germ
(zero before 2/(2n-1), jump 2n-1 there); queries beyond the certified range
are refused rather than defaulted.

All arithmetic in this module is exact rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import knots, laurent
from .errors import (
    InsufficientDataError,
    NotLSpaceFormError,
    UnsupportedExpressionError,
    ValidationError,
)
from .reporting import CertificateCheck

JPRIME_GERM_SOURCE = "published derivative-jump computation for the J' family"


# ---------------------------------------------------------------------------
# piecewise linear functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PiecewiseLinearFunction:
    """Exact PL function on [0,2] stored by breakpoints; canonical form keeps
    no collinear interior breakpoint, so equality is equality of graphs."""

    ts: tuple[Fraction, ...]
    vs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.ts) != len(self.vs) or len(self.ts) < 2:
            raise ValidationError("breakpoints and values must align, with both endpoints")
        if self.ts[0] != 0 or self.ts[-1] != 2:
            raise ValidationError("domain must be exactly [0,2]")
        if any(a >= b for a, b in zip(self.ts, self.ts[1:])):
            raise ValidationError("breakpoints must be strictly increasing")
        if self.vs[0] != 0:
            raise ValidationError("value at t = 0 must be 0")

    @staticmethod
    def from_breakpoints(points) -> "PiecewiseLinearFunction":
        pts = sorted((Fraction(t), Fraction(v)) for t, v in points)
        ts = [p[0] for p in pts]
        vs = [p[1] for p in pts]
        # drop collinear interior points
        keep_t, keep_v = [ts[0]], [vs[0]]
        for i in range(1, len(ts) - 1):
            t0, v0 = keep_t[-1], keep_v[-1]
            t1, v1, t2, v2 = ts[i], vs[i], ts[i + 1], vs[i + 1]
            if (v1 - v0) * (t2 - t1) != (v2 - v1) * (t1 - t0):
                keep_t.append(t1)
                keep_v.append(v1)
        keep_t.append(ts[-1])
        keep_v.append(vs[-1])
        return PiecewiseLinearFunction(tuple(keep_t), tuple(keep_v))

    @staticmethod
    def zero() -> "PiecewiseLinearFunction":
        return PiecewiseLinearFunction((Fraction(0), Fraction(2)), (Fraction(0), Fraction(0)))

    def value(self, t) -> Fraction:
        t = Fraction(t)
        if not 0 <= t <= 2:
            raise ValidationError(f"{t} outside the domain [0,2]")
        for i in range(len(self.ts) - 1):
            if self.ts[i] <= t <= self.ts[i + 1]:
                t0, t1 = self.ts[i], self.ts[i + 1]
                v0, v1 = self.vs[i], self.vs[i + 1]
                return v0 + (v1 - v0) * (t - t0) / (t1 - t0)
        raise AssertionError("unreachable")

    def __add__(self, other: "PiecewiseLinearFunction") -> "PiecewiseLinearFunction":
        ts = sorted(set(self.ts) | set(other.ts))
        return PiecewiseLinearFunction.from_breakpoints(
            (t, self.value(t) + other.value(t)) for t in ts
        )

    def __neg__(self) -> "PiecewiseLinearFunction":
        return PiecewiseLinearFunction(self.ts, tuple(-v for v in self.vs))

    def scale(self, c: int) -> "PiecewiseLinearFunction":
        if c == 0:
            return PiecewiseLinearFunction.zero()
        return PiecewiseLinearFunction(self.ts, tuple(c * v for v in self.vs))

    def slope_right(self, t) -> Fraction:
        t = Fraction(t)
        if not 0 <= t < 2:
            raise ValidationError(f"no right slope at {t}")
        for i in range(len(self.ts) - 1):
            if self.ts[i] <= t < self.ts[i + 1]:
                return (self.vs[i + 1] - self.vs[i]) / (self.ts[i + 1] - self.ts[i])
        raise AssertionError("unreachable")

    def slope_left(self, t) -> Fraction:
        t = Fraction(t)
        if not 0 < t <= 2:
            raise ValidationError(f"no left slope at {t}")
        for i in range(len(self.ts) - 1):
            if self.ts[i] < t <= self.ts[i + 1]:
                return (self.vs[i + 1] - self.vs[i]) / (self.ts[i + 1] - self.ts[i])
        raise AssertionError("unreachable")

    def delta_prime(self, t0) -> Fraction:
        """Jump of the derivative at t0 in (0,2): right slope minus left slope."""
        t0 = Fraction(t0)
        if not 0 < t0 < 2:
            raise ValidationError(f"derivative jumps are defined on (0,2), got {t0}")
        return self.slope_right(t0) - self.slope_left(t0)

    def singularities(self) -> tuple[Fraction, ...]:
        """Interior breakpoints; in canonical form each carries a nonzero
        derivative jump."""
        return self.ts[1:-1]

    def reflected(self) -> "PiecewiseLinearFunction":
        """The function t -> value(2 - t), valid when it vanishes at t = 2."""
        if self.vs[-1] != 0:
            raise ValidationError("reflection needs value 0 at t = 2")
        return PiecewiseLinearFunction.from_breakpoints(
            (2 - t, v) for t, v in zip(self.ts, self.vs)
        )

    def breakpoints(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple(zip(self.ts, self.vs))


def pl_arithmetic(f: PiecewiseLinearFunction, g: PiecewiseLinearFunction | None, op: str, c: int | None = None) -> PiecewiseLinearFunction:
    """Dispatch form of the PL vector-space structure."""
    if op == "add":
        return f + g
    if op == "negate":
        return -f
    if op == "integer_scale":
        return f.scale(c)
    raise ValidationError(f"unknown PL op {op!r}")


def delta_prime(f: PiecewiseLinearFunction, t0) -> Fraction:
    return f.delta_prime(t0)


# ---------------------------------------------------------------------------
# staircases of L-space-form polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Staircase:
    """Even-index corner data of the staircase complex of an L-space-form
    polynomial: strictly monotone corners from (0,g) to (g,0), symmetric under
    (i,j) -> (j,i), within the genus band |i - j| <= g."""

    corners: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cs = self.corners
        if not cs:
            raise ValidationError("a staircase needs at least one corner")
        g = cs[0][1]
        if cs[0] != (0, g) or cs[-1] != (g, 0):
            raise ValidationError("staircase must run from (0,g) to (g,0)")
        for (i1, j1), (i2, j2) in zip(cs, cs[1:]):
            if not (i1 < i2 and j1 > j2):
                raise ValidationError("corners must strictly increase in i and decrease in j")
        if set(cs) != {(j, i) for i, j in cs}:
            raise ValidationError("corner set must be symmetric under (i,j) -> (j,i)")
        if any(abs(i - j) > g for i, j in cs):
            raise ValidationError("corner outside the genus band")

    @property
    def genus(self) -> int:
        return self.corners[0][1]


def staircase_from_alexander(f: laurent.LaurentPolynomial) -> Staircase:
    """Corners from an alternating +-1 polynomial: with exponents
    a_0 > a_1 > ... > a_{2l} the path takes horizontal steps a_{2r} - a_{2r+1}
    and vertical steps a_{2r+1} - a_{2r+2} from (0, a_0); even-index corners
    are returned."""
    if f.is_zero:
        raise NotLSpaceFormError("zero polynomial")
    exps = sorted(f.coeffs, reverse=True)
    coeffs = [f.coeff(e) for e in exps]
    if len(coeffs) % 2 == 0 or any(
        c != (1 if i % 2 == 0 else -1) for i, c in enumerate(coeffs)
    ):
        raise NotLSpaceFormError(
            "coefficients must alternate +1, -1 from the top exponent down"
        )
    corners = [(0, exps[0])]
    i = j = 0
    j = exps[0]
    for r in range(len(exps) - 1):
        step = exps[r] - exps[r + 1]
        if r % 2 == 0:
            i += step
        else:
            j -= step
        corners.append((i, j))
    even = tuple(corners[::2])
    try:
        return Staircase(even)
    except ValidationError as exc:
        raise NotLSpaceFormError(f"exponent pattern has no staircase: {exc}") from exc


def upsilon_from_staircase(s: Staircase) -> PiecewiseLinearFunction:
    """U(t) = -2 min over corners (i,j) of [(1 - t/2) i + (t/2) j], as the
    exact lower envelope of finitely many lines."""
    lines = [(Fraction(i), Fraction(j - i, 2)) for i, j in s.corners]  # value i + slope*t
    ts = {Fraction(0), Fraction(2)}
    for a1, b1 in lines:
        for a2, b2 in lines:
            if b1 != b2:
                t = (a2 - a1) / (b1 - b2)
                if 0 < t < 2:
                    ts.add(t)
    pts = []
    for t in sorted(ts):
        m = min(a + b * t for a, b in lines)
        pts.append((t, -2 * m))
    return PiecewiseLinearFunction.from_breakpoints(pts)


def upsilon_torus(p: int, q: int) -> PiecewiseLinearFunction:
    return upsilon_from_staircase(staircase_from_alexander(laurent.torus_alexander(p, q)))


def upsilon_of_expression(e: knots.KnotExpression) -> PiecewiseLinearFunction:
    """Upsilon of sums and mirrors of torus knots, via additivity and
    negation under mirroring; other constructors are outside the computable
    class."""
    e = knots.normalize(e)
    if isinstance(e, knots.Unknot):
        return PiecewiseLinearFunction.zero()
    if isinstance(e, knots.TorusKnot):
        return upsilon_torus(e.p, e.q)
    if isinstance(e, knots.Mirror):
        return -upsilon_of_expression(e.inner)
    if isinstance(e, knots.Sum):
        out = PiecewiseLinearFunction.zero()
        for s in e.summands:
            out = out + upsilon_of_expression(s)
        return out
    raise UnsupportedExpressionError(
        "Upsilon is only computed for sums and mirrors of torus knots; "
        "cabled and doubled summands enter through published germ data"
    )


# ---------------------------------------------------------------------------
# derivative-jump germs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JumpGerm:
    """Partial low-t record of a derivative-jump function: zero on
    (0, first_singularity) when zero_before, with the stated jump there.
    Nothing beyond first_singularity is certified."""

    first_singularity: Fraction
    jump_value: Fraction
    zero_before: bool = True
    source: str = "user-supplied"

    def __post_init__(self):
        if not 0 < self.first_singularity < 2:
            raise ValidationError("first singularity must lie in (0,2)")
        if self.jump_value <= 0:
            raise ValidationError("germ jump value must be positive")

    def negated(self) -> "MirroredJumpGerm":
        return MirroredJumpGerm(self)

    def delta_prime_at(self, t0: Fraction) -> Fraction:
        t0 = Fraction(t0)
        if t0 == self.first_singularity:
            return self.jump_value
        if t0 < self.first_singularity:
            if self.zero_before:
                return Fraction(0)
            raise InsufficientDataError(
                f"germ does not certify values below {self.first_singularity}"
            )
        raise InsufficientDataError(
            f"germ certifies nothing beyond t = {self.first_singularity}"
        )


@dataclass(frozen=True)
class MirroredJumpGerm:
    """Germ of the mirror knot; jump negated at the same first singularity."""

    germ: JumpGerm

    def delta_prime_at(self, t0: Fraction) -> Fraction:
        return -self.germ.delta_prime_at(t0)


def jprime_germ(n: int) -> JumpGerm:
    """Published derivative-jump germ of the n-th J' knot: zero before
    2/(2n-1), jump 2n-1 there."""
    if n < 2:
        raise ValidationError(f"J' family index must be >= 2, got {n}")
    return JumpGerm(
        first_singularity=Fraction(2, 2 * n - 1),
        jump_value=Fraction(2 * n - 1),
        zero_before=True,
        source=JPRIME_GERM_SOURCE,
    )


# ---------------------------------------------------------------------------
# homomorphisms and obstructions
# ---------------------------------------------------------------------------


def _delta_prime_of(source, t0: Fraction) -> Fraction:
    if isinstance(source, PiecewiseLinearFunction):
        return source.delta_prime(t0)
    if isinstance(source, (JumpGerm, MirroredJumpGerm)):
        return source.delta_prime_at(t0)
    raise ValidationError(f"cannot read a derivative jump from {source!r}")


def oss_hom(source, p: int, q: int) -> Fraction:
    """Integer-valued concordance homomorphism at the rational p/q in (0,2):
    (1/q) dU'(p/q) for even p, (1/(2q)) dU'(p/q) for odd p."""
    if q < 1 or math.gcd(p, q) != 1:
        raise ValidationError(f"{p}/{q} must be a reduced fraction")
    t0 = Fraction(p, q)
    if not 0 < t0 < 2:
        raise ValidationError(f"evaluation point {t0} outside (0,2)")
    dj = _delta_prime_of(source, t0)
    return dj / q if p % 2 == 0 else dj / (2 * q)


def min_genus_from_singularity(p: int, q: int) -> int:
    """Least genus compatible with a derivative jump at reduced p/q: q for odd
    p (q <= g), ceil(q/2) for even p (q <= 2g)."""
    if q < 1 or math.gcd(p, q) != 1:
        raise ValidationError(f"{p}/{q} must be a reduced fraction")
    if not 0 < Fraction(p, q) < 2:
        raise ValidationError(f"{p}/{q} outside (0,2)")
    return q if p % 2 == 1 else (q + 1) // 2


@dataclass(frozen=True)
class ObstructionVerdict:
    status: str  # obstructed | not_obstructed | inconclusive
    witness: Fraction | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": str(self.witness) if self.witness is not None else None,
            "detail": self.detail,
        }


def obstruct_Gn(source, n: int) -> ObstructionVerdict:
    """Membership obstruction against sums of genus <= n knots: any nonzero
    derivative jump at a rational in (0, 1/n) obstructs."""
    if n < 1:
        raise ValidationError("genus level must be >= 1")
    window = Fraction(1, n)
    if isinstance(source, PiecewiseLinearFunction):
        for t in source.singularities():
            if t < window and source.delta_prime(t) != 0:
                return ObstructionVerdict(
                    "obstructed",
                    witness=t,
                    detail=f"derivative jump {source.delta_prime(t)} at {t} < 1/{n}",
                )
        return ObstructionVerdict(
            "not_obstructed", detail=f"no derivative jump on (0, 1/{n})"
        )
    if isinstance(source, (JumpGerm, MirroredJumpGerm)):
        germ = source.germ if isinstance(source, MirroredJumpGerm) else source
        t0 = germ.first_singularity
        if t0 < window:
            return ObstructionVerdict(
                "obstructed",
                witness=t0,
                detail=f"certified jump {_delta_prime_of(source, t0)} at {t0} < 1/{n}",
            )
        if germ.zero_before:
            return ObstructionVerdict(
                "not_obstructed",
                detail=f"certified zero on (0, {t0}) covers (0, 1/{n})",
            )
        return ObstructionVerdict(
            "inconclusive",
            detail=f"germ certifies nothing on (0, 1/{n})",
        )
    raise ValidationError(f"cannot obstruct with {source!r}")


# ---------------------------------------------------------------------------
# summand certificate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UpsilonSummandCertificate:
    """Checked hypotheses that the J' family from index k on maps onto a basis
    of a Z^infinity summand of the concordance group modulo genus <= k-1."""

    k: int
    n_max: int
    matrix: tuple[tuple[Fraction | None, ...], ...]  # rows m, cols n; None = uncertified
    checks: tuple[CertificateCheck, ...]
    provenance: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def conclusion(self) -> str:
        if self.valid:
            return (
                f"J'_{self.k} .. J'_{self.n_max} represent part of a basis of a "
                f"Z^inf summand modulo knots of genus <= {self.k - 1}"
            )
        failed = ", ".join(c.name for c in self.checks if not c.passed)
        return f"certificate invalid; failed checks: {failed}"

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "n_max": self.n_max,
            "rows": list(range(self.k, self.n_max + 1)),
            "matrix": [
                [str(v) if v is not None else None for v in row] for row in self.matrix
            ],
            "valid": self.valid,
            "checks": [c.as_dict() for c in self.checks],
            "conclusion": self.conclusion,
            "provenance": list(self.provenance),
        }


def summand_certificate_upsilon(k: int, n_max: int) -> UpsilonSummandCertificate:
    """Evaluate the germ-certified part of the homomorphism matrix
    M[m][n] = oss_hom(jprime_germ(n), 2, 2m-1) and check it is triangular with
    unit diagonal, with every evaluation point inside the exclusion window
    (0, 1/(k-1))."""
    if k < 2:
        raise ValidationError("certificate needs k >= 2")
    if n_max < k:
        raise ValidationError(f"n_max must be >= k, got {n_max} < {k}")
    indices = range(k, n_max + 1)
    germs = {n: jprime_germ(n) for n in indices}
    matrix: list[tuple[Fraction | None, ...]] = []
    checks: list[CertificateCheck] = []
    for m in indices:
        row: list[Fraction | None] = []
        for n in indices:
            if m >= n:
                row.append(oss_hom(germs[n], 2, 2 * m - 1))
            else:
                row.append(None)  # beyond the germ's certified range
        matrix.append(tuple(row))
    for a, m in enumerate(indices):
        diag = matrix[a][a]
        checks.append(
            CertificateCheck(
                name=f"unit_diagonal[{m}]",
                passed=diag == 1,
                witness=f"M[{m}][{m}] = {diag}",
            )
        )
    below_ok = all(
        matrix[a][b] == 0 for a in range(len(matrix)) for b in range(a)
    )
    checks.append(
        CertificateCheck(
            name="triangular_below_diagonal",
            passed=below_ok,
            witness="all germ-certified entries with m > n vanish",
        )
    )
    window = Fraction(1, k - 1)
    for m in indices:
        t = Fraction(2, 2 * m - 1)
        checks.append(
            CertificateCheck(
                name=f"evaluation_in_window[{m}]",
                passed=t < window,
                witness=f"2/(2m-1) = {t} vs 1/(k-1) = {window}",
            )
        )
    return UpsilonSummandCertificate(
        k=k,
        n_max=n_max,
        matrix=tuple(matrix),
        checks=tuple(checks),
        provenance=(JPRIME_GERM_SOURCE,),
    )
