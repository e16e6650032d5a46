"""Permutation groups of linear codes and affine permutations of point sets.

The permutation group Per(C) of a length-n code is computed exactly by
scanning all n! coordinate permutations with a parity-check membership
test (an optional backtracking mode prunes on prefix-supported dual
constraints).  Permutations of an evaluation set correspond to the unique
degree < n polynomial interpolating a_i -> a_pi(i); the affine ones are
those of degree exactly 1.  For Reed-Solomon codes RS(A, k) with
1 < k < n-1 the two notions coincide, and check_theorem verifies that
equality instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iter_permutations
from typing import Iterable, Sequence

from .codes import LinearCode, rref, rs_code
from .gf import FieldElement
from .poly import EvaluationSet, Polynomial, affine_str, compose_mod

DEFAULT_MAX_N = 10

# Abelian testing is quadratic in the group order; skip above this size.
ABELIAN_CHECK_CAP = 10_000


class NotAPermutationError(ValueError):
    """A polynomial does not map the point set bijectively onto itself."""


class DegreeBoundError(RuntimeError):
    """A group member's polynomial violates the degree bound for 1 < k < n-1."""


class Permutation:
    """A bijection of {0,...,n-1}; displayed 1-based."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        t = tuple(images)
        if sorted(t) != list(range(len(t))):
            raise ValueError(f"not a permutation of 0..{len(t) - 1}: {list(t)}")
        self.images = t

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> "Permutation":
        return cls(tuple(i - 1 for i in images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition (self * other)(i) = self(other(i))."""
        if len(other.images) != len(self.images):
            raise ValueError("permutation degree mismatch")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def one_based(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.images)

    def cycle_string(self) -> str:
        """Disjoint cycle notation on 1-based points; fixed points omitted."""
        seen = [False] * len(self.images)
        parts = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                parts.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
        return "".join(parts) if parts else "()"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return str(list(self.one_based()))

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


@dataclass(frozen=True)
class AffineMap:
    """The polynomial a*x + b with a != 0."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.is_zero():
            raise ValueError("affine maps need a nonzero linear coefficient")

    @property
    def polynomial(self) -> Polynomial:
        return Polynomial.affine(self.a, self.b)

    def __str__(self) -> str:
        return affine_str(self.polynomial)


# -- permutation <-> polynomial dictionary --------------------------------


def perm_to_poly(perm: Permutation, points: EvaluationSet) -> Polynomial:
    """The unique degree < n polynomial with p(a_i) = a_pi(i)."""
    if perm.n != points.n:
        raise ValueError("permutation degree does not match the point set")
    return points.interpolate([points[j] for j in perm.images])


def poly_to_perm(f: Polynomial, points: EvaluationSet) -> Permutation:
    """The index permutation with f(a_i) = a_pi(i); raises if f does not permute."""
    images = []
    for a in points:
        pos = points.position(f.evaluate(a))
        if pos is None:
            raise NotAPermutationError(f"{f} maps {a} outside the point set")
        images.append(pos)
    if len(set(images)) != points.n:
        raise NotAPermutationError(f"{f} is not injective on the point set")
    return Permutation(images)


def permutes(f: Polynomial, points: EvaluationSet) -> bool:
    """True when a -> f(a) is a bijection of the point set onto itself."""
    seen = set()
    for a in points:
        pos = points.position(f.evaluate(a))
        if pos is None or pos in seen:
            return False
        seen.add(pos)
    return True


def affine_group(points: EvaluationSet) -> list[tuple[AffineMap, Permutation]]:
    """All degree-1 polynomials permuting the point set, with their permutations.

    Candidates a*x + b run over all q*(q-1) pairs in enumeration order, so
    the identity map x comes first.  The result is closed under
    composition modulo the point set.
    """
    field = points.field
    out = []
    for a in field.nonzero_elements():
        for b in field.elements():
            images = []
            for ai in points:
                pos = points.position(a * ai + b)
                if pos is None:
                    break
                images.append(pos)
            else:
                out.append((AffineMap(a, b), Permutation(images)))
    return out


# -- exhaustive group computation ------------------------------------------


def _scan_tables(code: LinearCode, tables) -> list[tuple[int, ...]]:
    add, mul = tables
    n = code.n
    rows = sorted(
        (tuple(x.index for x in row) for row in code.rref),
        key=lambda r: -len(set(r)),
    )
    duals = [
        tuple((i, x.index) for i, x in enumerate(h) if not x.is_zero())
        for h in code.dual.rref
    ]
    members = []
    for pi in iter_permutations(range(n)):
        ok = True
        for r in rows:
            for supp in duals:
                s = 0
                for i, hi in supp:
                    s = add[s][mul[hi][r[pi[i]]]]
                if s:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            members.append(pi)
    return members


def _scan_objects(code: LinearCode) -> list[tuple[int, ...]]:
    n = code.n
    zero = code.field.zero
    rows = sorted(code.rref, key=lambda r: -len(set(r)))
    duals = [
        tuple((i, x) for i, x in enumerate(h) if not x.is_zero())
        for h in code.dual.rref
    ]
    members = []
    for pi in iter_permutations(range(n)):
        ok = True
        for r in rows:
            for supp in duals:
                s = zero
                for i, hi in supp:
                    s = s + hi * r[pi[i]]
                if not s.is_zero():
                    ok = False
                    break
            if not ok:
                break
        if ok:
            members.append(pi)
    return members


def _scan_backtrack(code: LinearCode) -> list[tuple[int, ...]]:
    """Depth-first search over prefix assignments.

    The dual basis is re-echelonized so every basis vector has a distinct
    last support position; a vector supported inside the current prefix
    yields a complete parity constraint on each permuted generator row,
    so violating branches are cut early.  At full depth the whole dual
    basis has been checked, which is exactly the plain membership test.
    """
    field = code.field
    n = code.n
    gen = [tuple(row) for row in code.rref]
    reversed_rows = [tuple(reversed(r)) for r in code.dual.rref]
    echelon = [tuple(reversed(r)) for r in rref(field, reversed_rows)]
    by_depth: list[list[tuple[tuple[int, FieldElement], ...]]] = [[] for _ in range(n)]
    for row in echelon:
        last = max(i for i, x in enumerate(row) if not x.is_zero())
        by_depth[last].append(
            tuple((i, row[i]) for i in range(last + 1) if not row[i].is_zero())
        )
    zero = field.zero
    members: list[tuple[int, ...]] = []
    used = [False] * n
    pi = [0] * n

    def extend(depth: int) -> None:
        if depth == n:
            members.append(tuple(pi))
            return
        for cand in range(n):
            if used[cand]:
                continue
            pi[depth] = cand
            ok = True
            for supp in by_depth[depth]:
                for r in gen:
                    s = zero
                    for i, hi in supp:
                        s = s + hi * r[pi[i]]
                    if not s.is_zero():
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                used[cand] = True
                extend(depth + 1)
                used[cand] = False

    extend(0)
    return members


def exhaustive_permutations(
    code: LinearCode, max_n: int = DEFAULT_MAX_N, method: str = "scan"
) -> list[Permutation]:
    """All coordinate permutations fixing the code, in lexicographic order."""
    if code.n > max_n:
        raise ValueError(
            f"length {code.n} exceeds the exhaustive-search cap {max_n}"
        )
    if method == "scan":
        tables = code.field.tables
        raw = (
            _scan_tables(code, tables) if tables is not None else _scan_objects(code)
        )
    elif method == "backtrack":
        raw = _scan_backtrack(code)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [Permutation(t) for t in raw]


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class GroupMember:
    perm: Permutation
    poly: Polynomial | None
    degree: int | None
    is_affine: bool | None

    def to_json_dict(self) -> dict:
        return {
            "perm": list(self.perm.one_based()),
            "poly": None
            if self.poly is None
            else (affine_str(self.poly) if self.poly.degree <= 1 else str(self.poly)),
            "degree": self.degree,
            "affine": self.is_affine,
        }


@dataclass(frozen=True)
class IsomorphismHint:
    order: int
    abelian: bool | None
    label: str | None

    def __str__(self) -> str:
        if self.abelian is None:
            return f"order {self.order}"
        kind = "abelian" if self.abelian else "non-abelian"
        tag = f" ({self.label})" if self.label else ""
        return f"order {self.order}, {kind}{tag}"


@dataclass(frozen=True)
class GroupReport:
    order: int
    elements: tuple[GroupMember, ...]
    affine_order: int | None
    is_affine_equal: bool | None
    hint: IsomorphismHint

    def permutation_set(self) -> frozenset[Permutation]:
        return frozenset(m.perm for m in self.elements)

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "affine_order": self.affine_order,
            "equal": self.is_affine_equal,
            "elements": [m.to_json_dict() for m in self.elements],
        }


def _is_abelian(perms: Sequence[Permutation]) -> bool | None:
    if len(perms) > ABELIAN_CHECK_CAP:
        return None
    images = [p.images for p in perms]
    for i, a in enumerate(images):
        for b in images[i + 1 :]:
            for j in range(len(a)):
                if a[b[j]] != b[a[j]]:
                    return False
    return True


def brute_force_perm_group(
    code: LinearCode,
    points: EvaluationSet | None = None,
    max_n: int = DEFAULT_MAX_N,
    method: str = "scan",
) -> GroupReport:
    """Exact Per(C) by exhaustive scan of S_n.

    When an evaluation set is supplied, every member is enriched with its
    interpolating polynomial and degree, and the group is compared
    against the affine permutations of the set.
    """
    perms = exhaustive_permutations(code, max_n=max_n, method=method)
    if points is None:
        members = tuple(GroupMember(p, None, None, None) for p in perms)
        affine_order = None
        equal = None
    else:
        if points.n != code.n or points.field != code.field:
            raise ValueError("evaluation set does not match the code")
        members = []
        for p in perms:
            f = perm_to_poly(p, points)
            deg = int(f.degree)
            members.append(GroupMember(p, f, deg, deg == 1))
        members = tuple(members)
        affine_perms = {perm for _, perm in affine_group(points)}
        affine_order = len(affine_perms)
        equal = affine_perms == set(perms)
    order = len(perms)
    abelian = _is_abelian(perms)
    label = "S_3" if order == 6 and abelian is False else None
    return GroupReport(
        order=order,
        elements=members,
        affine_order=affine_order,
        is_affine_equal=equal,
        hint=IsomorphismHint(order, abelian, label),
    )


def group_closure_check(perms: Iterable[Permutation]) -> bool:
    """True iff the set contains the identity and is closed under * and inverse."""
    ps = set(perms)
    if not ps:
        return False
    n = len(next(iter(ps)))
    if Permutation.identity(n) not in ps:
        return False
    for a in ps:
        if a.inverse() not in ps:
            return False
        for b in ps:
            if a * b not in ps:
                return False
    return True


def homomorphism_check(
    points: EvaluationSet, perm1: Permutation, perm2: Permutation
) -> bool:
    """Composition modulo the set matches index composition of permutations."""
    lhs = compose_mod(
        perm_to_poly(perm1, points), perm_to_poly(perm2, points), points
    )
    return lhs == perm_to_poly(perm1 * perm2, points)


def degree_profile(
    code: LinearCode, points: EvaluationSet, max_n: int = DEFAULT_MAX_N
) -> dict[Permutation, int]:
    """Degree of the interpolating polynomial for every member of Per(C).

    For 1 < k < n-1 the degrees must stay below min(k, n-k); a violation
    would expose an implementation bug and raises DegreeBoundError.
    """
    report = brute_force_perm_group(code, points, max_n=max_n)
    profile = {m.perm: m.degree for m in report.elements}
    k, n = code.k, code.n
    if 1 < k < n - 1:
        bound = min(k, n - k)
        for perm, deg in profile.items():
            if deg >= bound:
                raise DegreeBoundError(
                    f"member {perm} has degree {deg}, expected < {bound} "
                    f"for n={n}, k={k}"
                )
    return profile


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of comparing Per(RS(A,k)) with the affine permutations of A."""

    points: EvaluationSet
    k: int
    in_range: bool
    group: GroupReport
    equal: bool
    all_degree_one: bool
    warning: str | None

    @property
    def holds(self) -> bool:
        """True when nothing contradicts the expected characterization."""
        return (self.equal and self.all_degree_one) if self.in_range else True

    def to_json_dict(self) -> dict:
        return {
            "q": self.points.field.q,
            "n": self.points.n,
            "k": self.k,
            "in_range": self.in_range,
            "equal": self.equal,
            "all_degree_one": self.all_degree_one,
            "warning": self.warning,
            "group": self.group.to_json_dict(),
        }


def check_theorem(
    points: EvaluationSet,
    k: int,
    max_n: int = DEFAULT_MAX_N,
    method: str = "scan",
) -> TheoremReport:
    """Compare brute-force Per(RS(A,k)) with the affine permutations of A.

    Equality is expected exactly for 1 < k < n-1.  Boundary dimensions
    k in {1, n-1, n} are still computed but only reported, with a warning
    flag instead of an assertion.
    """
    n = points.n
    code = rs_code(points, k)
    report = brute_force_perm_group(code, points, max_n=max_n, method=method)
    in_range = 1 < k < n - 1
    equal = bool(report.is_affine_equal)
    all_degree_one = all(m.degree == 1 for m in report.elements)
    warning = None
    if not in_range:
        warning = (
            f"k={k} is outside 1 < k < n-1 for n={n}; "
            "equality with the affine group is not expected to hold"
        )
    return TheoremReport(
        points=points,
        k=k,
        in_range=in_range,
        group=report,
        equal=equal,
        all_degree_one=all_degree_one,
        warning=warning,
    )
