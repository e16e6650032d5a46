"""Exact arithmetic in finite fields F_p and GF(p^m).

Elements of GF(p^m) are coefficient vectors of length m over the prime
field, ascending powers of the generator t, reduced modulo a monic
irreducible polynomial of degree m.  Everything is immutable; fields are
capped at q = p^m <= 2**16.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

MAX_FIELD_SIZE = 1 << 16

# q*q lookup tables are built only below this size; larger fields fall
# back to coefficient arithmetic.
TABLE_MAX_Q = 512


class FieldMismatchError(ValueError):
    """Raised when combining elements of different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, m) with p prime and q = p**m, or raise ValueError."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            rest = q
            while rest % p == 0:
                rest //= p
                m += 1
            if rest != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, m
    raise ValueError(f"{q} is not a prime power")


# -- polynomial helpers over F_p, used only for modulus validation --------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo b over F_p (b nonzero)."""
    r = [x % p for x in a]
    _trim(r)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        factor = (r[-1] * inv_lead) % p
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - factor * bc) % p
        _trim(r)
    return r


def _monic_polys_of_degree(d: int, p: int) -> Iterable[list[int]]:
    for idx in range(p**d):
        coeffs = []
        v = idx
        for _ in range(d):
            coeffs.append(v % p)
            v //= p
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m//2."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] % p != 1:
        return False
    for d in range(1, m // 2 + 1):
        for div in _monic_polys_of_degree(d, p):
            if not _polymod_p(modulus, div, p):
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """First irreducible monic polynomial of degree m, lowest constant part."""
    for cand in _monic_polys_of_degree(m, p):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise ValueError(f"no irreducible polynomial of degree {m} over F_{p}")


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p^m), stored as m residues mod p (ascending powers)."""

    field: "Field"
    coeffs: tuple[int, ...]

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.field != other.field:
            raise FieldMismatchError(
                f"elements of {self.field} and {other.field} cannot be combined"
            )

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field,
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field._mul_coeffs(self.coeffs, other.coeffs))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        """Square-and-multiply; 0**0 is defined as 1."""
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse via y = x**(q-2); raises on zero."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self ** (self.field.q - 2)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def index(self) -> int:
        """Position in the field enumeration: sum(c_i * p**i)."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.field.p + c
        return v

    def __str__(self) -> str:
        if self.field.m == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"FieldElement({self.field!r}, {self})"


class Field:
    """GF(p^m) for a prime p, with q = p**m <= 2**16.

    The modulus (monic irreducible of degree m, ascending coefficients)
    is validated at construction; for m == 1 it is implicit.  A default
    modulus is searched for when none is given.
    """

    def __init__(self, q: int, modulus: Sequence[int] | None = None):
        p, m = factor_prime_power(q)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {q} exceeds cap {MAX_FIELD_SIZE}")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus: tuple[int, ...] | None = None
        else:
            if modulus is None:
                self.modulus = default_modulus(p, m)
            else:
                mod = tuple(c % p for c in modulus)
                if len(mod) != m + 1 or mod[-1] != 1:
                    raise ValueError(
                        f"modulus must be monic of degree {m} (got {list(modulus)})"
                    )
                if not is_irreducible(mod, p):
                    raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
                self.modulus = mod

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __str__(self) -> str:
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.q}) mod {list(self.modulus)}"

    def __repr__(self) -> str:
        if self.m == 1:
            return f"Field({self.q})"
        return f"Field({self.q}, modulus={list(self.modulus)})"

    # -- element construction ------------------------------------------

    def element(self, value) -> FieldElement:
        """Coerce an int (prime field), coefficient list, or element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} is not in {self}")
            return value
        if isinstance(value, int):
            if self.m != 1:
                raise ValueError(
                    f"{self} elements need {self.m} coefficients, got int {value}"
                )
            return FieldElement(self, (value % self.p,))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.m:
            raise ValueError(
                f"expected {self.m} coefficients for {self}, got {len(coeffs)}"
            )
        return FieldElement(self, coeffs)

    def from_index(self, i: int) -> FieldElement:
        if not 0 <= i < self.q:
            raise ValueError(f"index {i} out of range for {self}")
        coeffs = []
        for _ in range(self.m):
            coeffs.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(coeffs))

    @cached_property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    @cached_property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def generator(self) -> FieldElement:
        """The residue class of t (only meaningful for m > 1)."""
        if self.m == 1:
            raise ValueError("prime fields have no polynomial generator")
        return self.from_index(self.p)

    def elements(self) -> list[FieldElement]:
        """All q elements, zero first, in base-p order on coefficient vectors."""
        return [self.from_index(i) for i in range(self.q)]

    def nonzero_elements(self) -> list[FieldElement]:
        return [self.from_index(i) for i in range(1, self.q)]

    def parse(self, literal: str) -> FieldElement:
        """Parse an element literal: decimal for m == 1, [c0,...,c_{m-1}] else."""
        s = literal.strip()
        if s.startswith("["):
            if not s.endswith("]"):
                raise ValueError(f"unterminated element literal {literal!r}")
            parts = s[1:-1].split(",")
            try:
                coeffs = [int(x) for x in parts]
            except ValueError:
                raise ValueError(f"bad element literal {literal!r}") from None
            return self.element(coeffs)
        if self.m != 1:
            raise ValueError(
                f"{self} element literals must be bracketed vectors, got {literal!r}"
            )
        try:
            return self.element(int(s))
        except ValueError:
            raise ValueError(f"bad element literal {literal!r}") from None

    # -- internal coefficient arithmetic --------------------------------

    def _mul_coeffs(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        if self.m == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * self.m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        prod = [c % p for c in prod]
        red = self._reduction_rows
        out = prod[: self.m]
        for s, row in enumerate(red):
            c = prod[self.m + s]
            if c:
                for i in range(self.m):
                    out[i] = (out[i] + c * row[i]) % p
        return tuple(c % p for c in out)

    @cached_property
    def _reduction_rows(self) -> list[list[int]]:
        """Row s holds the coefficients of t**(m+s) reduced mod the modulus."""
        p, m = self.p, self.m
        rows = []
        # t**m = -(modulus minus leading term)
        cur = [(-c) % p for c in self.modulus[:m]]
        rows.append(list(cur))
        for _ in range(m - 2):
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                for i in range(m):
                    nxt[i] = (nxt[i] + top * rows[0][i]) % p
            cur = nxt
            rows.append(list(cur))
        return rows

    # -- small lookup tables for exhaustive searches --------------------

    @cached_property
    def tables(self) -> tuple[list[list[int]], list[list[int]]] | None:
        """(add, mul) tables indexed by element index, or None when q is large."""
        if self.q > TABLE_MAX_Q:
            return None
        els = self.elements()
        add = [[(a + b).index for b in els] for a in els]
        mul = [[(a * b).index for b in els] for a in els]
        return add, mul
