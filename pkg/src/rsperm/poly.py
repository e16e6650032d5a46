"""Univariate polynomial algebra over a finite field.

Dense ascending coefficient vectors with no trailing zeros; the zero
polynomial is the empty vector and its degree is the NEG_INF sentinel,
so degree arithmetic stays honest (deg(f*g) = deg f + deg g even when a
factor is zero).  Also holds ordered evaluation sets with their Lagrange
machinery: vanishing polynomial, indicator functions, interpolation and
composition modulo the set.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from .gf import Field, FieldElement

# Degree of the zero polynomial.  A float so that NEG_INF + d == NEG_INF
# and NEG_INF < d hold for every integer degree d.
NEG_INF = float("-inf")


class Polynomial:
    """Polynomial over a Field, ascending coefficients, trailing zeros stripped."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[FieldElement] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, FieldElement) or c.field != field:
                raise ValueError(f"coefficient {c!r} is not an element of {field}")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, c: FieldElement) -> "Polynomial":
        return cls(c.field, (c,))

    @classmethod
    def affine(cls, a: FieldElement, b: FieldElement) -> "Polynomial":
        """a*x + b with a allowed to be zero (then just the constant b)."""
        return cls(a.field, (b, a))

    @classmethod
    def from_ints(cls, field: Field, ints: Sequence[int]) -> "Polynomial":
        """Convenience for prime fields: coefficients given as integers."""
        return cls(field, tuple(field.element(i) for i in ints))

    @classmethod
    def monomial(cls, field: Field, degree: int) -> "Polynomial":
        return cls(field, (field.zero,) * degree + (field.one,))

    # -- basics ----------------------------------------------------------

    @property
    def degree(self):
        """Integer degree, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def coefficient(self, i: int) -> FieldElement:
        return self.coeffs[i] if i < len(self.coeffs) else self.field.zero

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            self.field,
            (self.coefficient(i) + other.coefficient(i) for i in range(n)),
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            self.field,
            (self.coefficient(i) - other.coefficient(i) for i in range(n)),
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, (-c for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    def scale(self, c: FieldElement) -> "Polynomial":
        return Polynomial(self.field, (c * a for a in self.coeffs))

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Schoolbook long division; divisor must be nonzero."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        d = len(divisor.coeffs) - 1
        inv_lead = divisor.coeffs[-1].inverse()
        if len(rem) - 1 < d:
            return Polynomial.zero(field), self
        quot = [field.zero] * (len(rem) - d)
        for top in range(len(rem) - 1, d - 1, -1):
            c = rem[top]
            if c.is_zero():
                continue
            f = c * inv_lead
            quot[top - d] = f
            for i, b in enumerate(divisor.coeffs):
                rem[top - d + i] = rem[top - d + i] - f * b
        return Polynomial(field, quot), Polynomial(field, rem)

    def __mod__(self, divisor: "Polynomial") -> "Polynomial":
        return divmod(self, divisor)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ValueError("the zero polynomial has no monic form")
        return self.scale(self.coeffs[-1].inverse())

    # -- evaluation and composition ----------------------------------------

    def evaluate(self, a: FieldElement) -> FieldElement:
        """Horner evaluation."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Usual composition self(inner(x)), Horner style over polynomials."""
        acc = Polynomial.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.constant(c)
        return acc

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xpart = "x" if i == 1 else f"x^{i}"
                if c == self.field.one:
                    terms.append(xpart)
                else:
                    terms.append(f"{c}*{xpart}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Polynomial({self.field!r}, {self})"


def affine_str(f: Polynomial) -> str:
    """Degree <= 1 polynomials in a*x + b style, as in group listings."""
    if f.degree > 1:
        return str(f)
    a = f.coefficient(1)
    b = f.coefficient(0)
    if a.is_zero():
        return str(b)
    ax = "x" if a == f.field.one else f"{a}*x"
    return ax if b.is_zero() else f"{ax} + {b}"


class EvaluationSet:
    """Ordered tuple of n >= 2 pairwise-distinct field elements."""

    def __init__(self, field: Field, points: Iterable):
        pts = tuple(field.element(a) for a in points)
        if len(pts) < 2:
            raise ValueError("evaluation sets need at least two points")
        if len(set(pts)) != len(pts):
            raise ValueError("evaluation points must be pairwise distinct")
        if len(pts) > field.q:
            raise ValueError(f"{len(pts)} distinct points cannot fit in {field}")
        self.field = field
        self.points = pts
        self.n = len(pts)
        self._position = {a: i for i, a in enumerate(pts)}

    @classmethod
    def full_field(cls, field: Field) -> "EvaluationSet":
        return cls(field, field.elements())

    @classmethod
    def multiplicative_group(cls, field: Field) -> "EvaluationSet":
        return cls(field, field.nonzero_elements())

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> FieldElement:
        return self.points[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EvaluationSet):
            return NotImplemented
        return self.field == other.field and self.points == other.points

    def __hash__(self) -> int:
        return hash((self.field, self.points))

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.points) + ")"

    def position(self, a: FieldElement) -> int | None:
        """Index of a point, or None when the element is not in the set."""
        return self._position.get(a)

    def permuted(self, images: Sequence[int]) -> "EvaluationSet":
        """The tuple (a_pi(1), ..., a_pi(n)) for 0-based images."""
        return EvaluationSet(self.field, tuple(self.points[i] for i in images))

    # -- Lagrange machinery ---------------------------------------------

    @cached_property
    def vanishing(self) -> Polynomial:
        """Monic degree-n polynomial with roots exactly the points."""
        acc = Polynomial.one(self.field)
        for a in self.points:
            acc = acc * Polynomial(self.field, (-a, self.field.one))
        return acc

    @cached_property
    def indicators(self) -> tuple[Polynomial, ...]:
        """Indicator functions: degree n-1 polynomials with L_i(a_j) = delta_ij."""
        out = []
        for i, ai in enumerate(self.points):
            num = Polynomial.one(self.field)
            den = self.field.one
            for j, aj in enumerate(self.points):
                if j == i:
                    continue
                num = num * Polynomial(self.field, (-aj, self.field.one))
                den = den * (ai - aj)
            out.append(num.scale(den.inverse()))
        return tuple(out)

    def evaluate(self, f: Polynomial) -> tuple[FieldElement, ...]:
        """The vector (f(a_1), ..., f(a_n))."""
        return tuple(f.evaluate(a) for a in self.points)

    def interpolate(self, values: Sequence[FieldElement]) -> Polynomial:
        """The unique polynomial of degree < n matching the values on the points."""
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(values)}")
        acc = Polynomial.zero(self.field)
        for v, L in zip(values, self.indicators):
            if not v.is_zero():
                acc = acc + L.scale(v)
        return acc


def compose_mod(p1: Polynomial, p2: Polynomial, points: EvaluationSet) -> Polynomial:
    """Composition p1(p2(x)) reduced modulo the vanishing polynomial of the set.

    The result has degree < n and agrees with the plain composition on
    every point, which makes the set of degree < n polynomials permuting
    the points a group under this operation.
    """
    return p1.compose(p2) % points.vanishing
