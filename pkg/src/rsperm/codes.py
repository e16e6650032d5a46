"""Linear codes over F_q as row spaces.

A LinearCode is canonicalized at construction to the reduced row echelon
form of its generator matrix, so two codes are equal exactly when their
rref fields are identical.  Reed-Solomon codes, duals, star products and
coordinate permutations are built on top of that canonical form.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .gf import Field, FieldElement
from .poly import EvaluationSet, Polynomial

Row = tuple[FieldElement, ...]

# Exhaustive codeword enumeration (min_distance) is refused above this size.
ENUMERATION_CAP = 200_000


def rref(field: Field, rows: Iterable[Sequence[FieldElement]]) -> tuple[Row, ...]:
    """Reduced row echelon form over F_q; zero rows are dropped."""
    work = [list(r) for r in rows]
    if not work:
        return ()
    n = len(work[0])
    for r in work:
        if len(r) != n:
            raise ValueError("ragged generator matrix")
    pivot_row = 0
    for col in range(n):
        pivot = None
        for r in range(pivot_row, len(work)):
            if not work[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        inv = work[pivot_row][col].inverse()
        work[pivot_row] = [inv * x for x in work[pivot_row]]
        for r in range(len(work)):
            if r != pivot_row and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
        if pivot_row == len(work):
            break
    return tuple(
        tuple(r) for r in work[:pivot_row] if not all(x.is_zero() for x in r)
    )


class LinearCode:
    """A k-dimensional subspace of F_q^n, stored as its rref basis."""

    def __init__(
        self,
        field: Field,
        rows: Iterable[Sequence[FieldElement]],
        n: int | None = None,
    ):
        canon = rref(field, rows)
        if canon:
            length = len(canon[0])
            if n is not None and n != length:
                raise ValueError(f"declared length {n} but rows have length {length}")
            n = length
        elif n is None:
            raise ValueError("zero code needs an explicit length")
        self.field = field
        self.n = n
        self.k = len(canon)
        self.rref = canon

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and self.rref == other.rref
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.rref))

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k}, field={self.field})"

    @cached_property
    def dual(self) -> "LinearCode":
        """The (n-k)-dimensional code orthogonal to every codeword."""
        field = self.field
        if self.k == 0:
            ident = [
                tuple(field.one if j == i else field.zero for j in range(self.n))
                for i in range(self.n)
            ]
            return LinearCode(field, ident)
        pivots = []
        for row in self.rref:
            for j, x in enumerate(row):
                if not x.is_zero():
                    pivots.append(j)
                    break
        pivot_set = set(pivots)
        rows = []
        for f in range(self.n):
            if f in pivot_set:
                continue
            w = [field.zero] * self.n
            w[f] = field.one
            for i, p in enumerate(pivots):
                w[p] = -self.rref[i][f]
            rows.append(tuple(w))
        return LinearCode(field, rows, n=self.n)

    def contains(self, vector: Sequence) -> bool:
        """Membership via the parity check H * v^T = 0."""
        v = [self.field.element(x) for x in vector]
        if len(v) != self.n:
            raise ValueError(f"vector length {len(v)} != code length {self.n}")
        for h in self.dual.rref:
            s = self.field.zero
            for hi, vi in zip(h, v):
                s = s + hi * vi
            if not s.is_zero():
                return False
        return True

    def permuted(self, images: Sequence[int]) -> "LinearCode":
        """The code {pi(c)} with pi(c)_i = c_{images[i]} (0-based pull-back)."""
        images = list(images)
        if sorted(images) != list(range(self.n)):
            raise ValueError(f"not a permutation of 0..{self.n - 1}: {images}")
        rows = [tuple(row[i] for i in images) for row in self.rref]
        return LinearCode(self.field, rows, n=self.n)

    def star(self, multiplier: Sequence[FieldElement]) -> "LinearCode":
        """Componentwise rescaling {v * c : c in C}; v must have no zero entry."""
        v = [self.field.element(x) for x in multiplier]
        if len(v) != self.n:
            raise ValueError(f"multiplier length {len(v)} != code length {self.n}")
        if any(x.is_zero() for x in v):
            raise ValueError("star multiplier must have no zero entries")
        rows = [tuple(vi * ri for vi, ri in zip(v, row)) for row in self.rref]
        return LinearCode(self.field, rows, n=self.n)

    def frobenius_image(self, j: int = 1) -> "LinearCode":
        """The code generated by applying y -> y**(p**j) to every entry.

        Only defined for extension fields, 1 <= j < m.
        """
        if self.field.m == 1:
            raise ValueError("prime fields have no nontrivial field automorphism")
        if not 1 <= j < self.field.m:
            raise ValueError(f"automorphism power must be in 1..{self.field.m - 1}")
        e = self.field.p**j
        rows = [tuple(x**e for x in row) for row in self.rref]
        return LinearCode(self.field, rows, n=self.n)

    def codewords(self) -> Iterable[Row]:
        """All q**k codewords (zero included); guarded by ENUMERATION_CAP."""
        if self.field.q**self.k > ENUMERATION_CAP:
            raise ValueError("codeword enumeration too large")
        field = self.field
        for combo in product(field.elements(), repeat=self.k):
            word = [field.zero] * self.n
            for c, row in zip(combo, self.rref):
                if not c.is_zero():
                    for i, x in enumerate(row):
                        word[i] = word[i] + c * x
            yield tuple(word)

    def min_distance(self) -> int:
        """Minimum Hamming weight over all nonzero codewords, by enumeration."""
        if self.k == 0:
            raise ValueError("the zero code has no minimum distance")
        best = self.n + 1
        for word in self.codewords():
            w = sum(1 for x in word if not x.is_zero())
            if 0 < w < best:
                best = w
        return best


def rs_code(points: EvaluationSet, k: int) -> LinearCode:
    """The Reed-Solomon code {f(A) : deg f < k} for the ordered point set."""
    if not 1 <= k <= points.n:
        raise ValueError(f"dimension k must be in 1..{points.n}, got {k}")
    field = points.field
    rows = [
        points.evaluate(Polynomial.monomial(field, i)) for i in range(k)
    ]
    return LinearCode(field, rows, n=points.n)


def rs_dual_multiplier(points: EvaluationSet) -> tuple[FieldElement, ...]:
    """The column multipliers turning RS(A, n-k) into the dual of RS(A, k).

    Entry j is the inverse of prod_{i != j} (a_j - a_i); all entries are
    nonzero, and star-multiplying RS(A, n-k) by this vector yields
    dual(RS(A, k)) for every k.
    """
    out = []
    for j, aj in enumerate(points):
        prod_ = points.field.one
        for i, ai in enumerate(points):
            if i != j:
                prod_ = prod_ * (aj - ai)
        out.append(prod_.inverse())
    return tuple(out)


def format_matrix(rows: Iterable[Sequence[FieldElement]]) -> str:
    """Rows of space-separated element literals."""
    return "\n".join(" ".join(str(x) for x in row) for row in rows)


def matrix_json(rows: Iterable[Sequence[FieldElement]]) -> list[list[str]]:
    """Array-of-arrays of element literals, ready for json.dumps."""
    return [[str(x) for x in row] for row in rows]
