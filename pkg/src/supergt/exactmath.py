"""Exact arithmetic: rationals, dense polynomials, rational functions, truncated series.

Everything here is immutable and exact.  Rational numbers are
``fractions.Fraction``; polynomials are dense coefficient tuples over any
exact field whose elements support ``+ - * /`` and compare with ``0`` (in
practice ``Fraction`` or a nested :class:`RationalFunction`, which is how the
generic-q field Q(q) and the two-variable towers Q(q)(u) are built).

No floating point is used anywhere.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class ExactMathError(ArithmeticError):
    """Base error for exact arithmetic misuse."""


class ZeroDenominatorError(ExactMathError, ZeroDivisionError):
    pass


class PoleError(ExactMathError, ZeroDivisionError):
    """Evaluation or expansion hit a pole; carries the offending point/direction."""


def _is_zero(c) -> bool:
    return c == 0


class Polynomial:
    """Dense univariate polynomial, coefficients indexed by degree.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial((c,))

    @staticmethod
    def x(power: int = 1, coeff=1) -> "Polynomial":
        return Polynomial((0,) * power + (coeff,))

    @staticmethod
    def from_roots(roots: Sequence) -> "Polynomial":
        """Monic product of (x - r) over the given roots."""
        p = Polynomial((1,))
        for r in roots:
            p = p * Polynomial((-r, 1))
        return p

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ExactMathError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = _as_poly(other)
        return NotImplemented if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = _as_poly(other)
        return NotImplemented if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ExactMathError("negative power of a polynomial; use RationalFunction")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        return Polynomial(tuple(a * c for a in self.coeffs))

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDenominatorError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.leading()
        d = other.degree
        for i in range(len(rem) - 1, d - 1, -1):
            if _is_zero(rem[i]):
                continue
            c = rem[i] / lead
            q[i - d] = c
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] = rem[i - d + j] - c * b
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial"):
        return self.divmod(other)[0]

    def __mod__(self, other: "Polynomial"):
        return self.divmod(other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == 1:
            return self
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def evaluate(self, point):
        """Horner evaluation at an exact point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def shift(self, a) -> "Polynomial":
        """p(x) -> p(x + a)."""
        result = Polynomial()
        for c in reversed(self.coeffs):
            result = result * Polynomial((a, 1)) + Polynomial.constant(c)
        return result

    def rescale_var(self, c) -> "Polynomial":
        """p(x) -> p(c*x)."""
        out, cur = [], 1
        for a in self.coeffs:
            out.append(a * cur)
            cur = cur * c
        return Polynomial(out)

    def valuation(self) -> int:
        """Multiplicity of the root at 0 (order of the lowest nonzero term)."""
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        raise ExactMathError("zero polynomial has no valuation")


def _as_poly(v):
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial.constant(Fraction(v))
    return NotImplemented


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd via the Euclidean algorithm over the coefficient field."""
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic() if not a.is_zero() else a


def is_squarefree(p: Polynomial) -> bool:
    """True iff gcd(p, p') is constant.  Rejects the zero polynomial."""
    if p.is_zero():
        raise ExactMathError("squarefreeness of the zero polynomial is undefined")
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree <= 0


class Direction(enum.Enum):
    """Expansion direction of a truncated series; directions never mix."""

    AT_INFINITY = "at-infinity"  # powers of u^{-1}
    AT_ZERO = "at-zero"  # powers of u


class TruncatedSeries:
    """Truncated expansion with ``order + 1`` coefficients in a fixed direction.

    ``coeffs[j]`` multiplies u^{-j} (at infinity) or u^{j} (at zero).
    """

    __slots__ = ("direction", "order", "coeffs")

    def __init__(self, direction: Direction, order: int, coeffs: Iterable):
        cs = tuple(coeffs)
        if order < 0 or len(cs) != order + 1:
            raise ExactMathError("series needs exactly order+1 coefficients")
        object.__setattr__(self, "direction", direction)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.direction is other.direction
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.direction, self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({self.direction.value}, {list(self.coeffs)!r})"

    def _check(self, other: "TruncatedSeries"):
        if self.direction is not other.direction:
            raise ExactMathError("cannot mix series expanded at zero and at infinity")

    def __add__(self, other: "TruncatedSeries"):
        self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.direction, n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncatedSeries"):
        self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries(
            self.direction, n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: "TruncatedSeries"):
        self._check(other)
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if _is_zero(a):
                continue
            for j in range(0, n + 1 - i):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncatedSeries(self.direction, n, out)

    def scale(self, c):
        return TruncatedSeries(self.direction, self.order, tuple(a * c for a in self.coeffs))


def _series_div(num: Sequence, den: Sequence, order: int) -> list:
    """Power series division num/den to the given order; den[0] must be nonzero."""
    inv0 = den[0]
    out = []
    for j in range(order + 1):
        acc = num[j] if j < len(num) else Fraction(0)
        for t in range(1, j + 1):
            d = den[t] if t < len(den) else 0
            if not _is_zero(d):
                acc = acc - d * out[j - t]
        out.append(acc / inv0)
    return out


class RationalFunction:
    """Reduced ratio of polynomials with a monic denominator.

    The canonical form (coprime numerator/denominator, monic denominator) is
    enforced at construction, so equality of values is structural equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced: bool = False):
        num = _as_poly(num)
        den = Polynomial((1,)) if den is None else _as_poly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalFunction needs polynomial or scalar arguments")
        if den.is_zero():
            raise ZeroDenominatorError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Polynomial((1,))
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num // g
                    den = den // g
                lead = den.leading()
                if lead != 1:
                    num = num.scale(1 / lead)
                    den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    # -- construction --------------------------------------------------------

    @staticmethod
    def constant(c) -> "RationalFunction":
        return RationalFunction(Polynomial.constant(c), Polynomial((1,)), _reduced=True)

    @staticmethod
    def x() -> "RationalFunction":
        return RationalFunction(Polynomial.x(), Polynomial((1,)), _reduced=True)

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.coeffs == (1,) and self.den.coeffs == (1,)

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        if not self.is_constant():
            raise ExactMathError("not a constant rational function")
        return self.num[0] if self.num.coeffs else Fraction(0)

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Polynomial)):
            o = _as_rf(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash(("RationalFunction", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = _as_rf(other)
        return NotImplemented if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = _as_rf(other)
        return NotImplemented if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_rf(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDenominatorError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _as_rf(other)
        return NotImplemented if o is NotImplemented else o / self

    def inverse(self) -> "RationalFunction":
        return 1 / self

    def __pow__(self, n: int):
        if n == 0:
            return RationalFunction.constant(1)
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def shift(self, a) -> "RationalFunction":
        """f(u) -> f(u + a)."""
        return RationalFunction(self.num.shift(a), self.den.shift(a))

    def rescale_var(self, c) -> "RationalFunction":
        """f(u) -> f(c*u); c must be nonzero."""
        if _is_zero(c):
            raise ExactMathError("rescaling by zero collapses the variable")
        return RationalFunction(self.num.rescale_var(c), self.den.rescale_var(c))


def _as_rf(v):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, (int, Fraction)):
        return RationalFunction.constant(Fraction(v))
    if isinstance(v, Polynomial):
        return RationalFunction(v, Polynomial((1,)), _reduced=True)
    return NotImplemented


def normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Canonical reduced form of num/den (coprime, monic denominator)."""
    return RationalFunction(num, den)


def evaluate_at(f: RationalFunction, point):
    """Exact value of f at the point; raises PoleError on a pole."""
    d = f.den.evaluate(point)
    if _is_zero(d):
        raise PoleError(f"evaluation at a pole: u = {point}")
    return f.num.evaluate(point) / d


def series_expand(f: RationalFunction, direction: Direction, order: int) -> TruncatedSeries:
    """Truncated Laurent-free expansion of f at infinity or zero.

    At infinity the value must stay finite (deg num <= deg den); at zero the
    denominator must not vanish at 0.  Violations raise PoleError naming the
    direction.
    """
    if order < 0:
        raise ExactMathError("series order must be nonnegative")
    if f.is_zero():
        return TruncatedSeries(direction, order, (Fraction(0),) * (order + 1))
    if direction is Direction.AT_INFINITY:
        dn, dd = f.num.degree, f.den.degree
        if dn > dd:
            raise PoleError("pole at the expansion point (at-infinity): deg num > deg den")
        # substitute u = 1/t and pad: rev(num) gains t^{dd-dn}
        num_t = [0] * (dd - dn) + list(reversed(f.num.coeffs))
        den_t = list(reversed(f.den.coeffs))
        return TruncatedSeries(direction, order, _series_div(num_t, den_t, order))
    if _is_zero(f.den[0]):
        raise PoleError("pole at the expansion point (at-zero): den(0) = 0")
    return TruncatedSeries(direction, order, _series_div(f.num.coeffs, f.den.coeffs, order))


# ---------------------------------------------------------------------------
# Q(q) helpers: elements of the generic-q field are RationalFunctions in q.
# The canonical Laurent presentation q^shift * num/den (num, den with nonzero
# constant term, minimal shift) is derived on demand for serialization.
# ---------------------------------------------------------------------------

QElement = RationalFunction


def q_var() -> QElement:
    return RationalFunction.x()


def q_monomial(k: int) -> QElement:
    """q^k as an element of Q(q), for any integer k."""
    if k >= 0:
        return RationalFunction(Polynomial.x(k), Polynomial((1,)), _reduced=True)
    return RationalFunction(Polynomial((1,)), Polynomial.x(-k), _reduced=True)


def q_shift_decompose(f: QElement) -> tuple[int, Polynomial, Polynomial]:
    """Write f = q^shift * n(q)/d(q) with n(0) != 0 != d(0) and minimal |shift|."""
    if f.is_zero():
        return 0, Polynomial(), Polynomial((1,))
    vn = f.num.valuation()
    vd = f.den.valuation()
    num = Polynomial(f.num.coeffs[vn:])
    den = Polynomial(f.den.coeffs[vd:])
    return vn - vd, num, den


def evaluate_q(f: QElement, q_value: Fraction) -> Fraction:
    """Evaluate an element of Q(q) at an exact rational q."""
    return evaluate_at(f, q_value)


def limit_at(f: RationalFunction, point) -> Fraction:
    """Limit of f at the point, cancelling matching root orders exactly.

    Used for classical limits q -> 1 where numerator and denominator may both
    vanish; raises PoleError if the limit is infinite.
    """
    num, den = f.num, f.den
    root = Polynomial((-point, 1))
    while _is_zero(den.evaluate(point)):
        if _is_zero(num.evaluate(point)):
            num = num // root
            den = den // root
        else:
            raise PoleError(f"infinite limit at {point}")
    return num.evaluate(point) / den.evaluate(point)
