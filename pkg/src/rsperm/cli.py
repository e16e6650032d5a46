"""Command-line front end.

Subcommands: affine, group, verify, sweep, paper-examples.  Exit codes:
0 success/verified, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from .codes import format_matrix, rs_code
from .gf import Field
from .permgroup import (
    GroupReport,
    TheoremReport,
    affine_group,
    brute_force_perm_group,
    check_theorem,
    exhaustive_permutations,
)
from .poly import EvaluationSet, Polynomial, affine_str

RNG_NAME = "python-random (Mersenne Twister)"
SWEEP_FIELD_POOL = (5, 7, 8, 9, 11, 13, 16)


def split_top_level(text: str) -> list[str]:
    """Split a comma-separated list, ignoring commas inside [...] literals."""
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced brackets in {text!r}")
        cur.append(ch)
    if depth != 0:
        raise ValueError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur))
    return parts


def build_field(args) -> Field:
    modulus = None
    if args.modulus is not None:
        modulus = [int(c) for c in args.modulus.split(",")]
    return Field(args.field, modulus=modulus)


def parse_points(field: Field, text: str) -> EvaluationSet:
    literals = [s for s in split_top_level(text) if s.strip()]
    return EvaluationSet(field, [field.parse(s) for s in literals])


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


# -- subcommands -------------------------------------------------------------


def cmd_affine(args) -> int:
    field = build_field(args)
    points = parse_points(field, args.points)
    members = affine_group(points)
    if args.json:
        _print_json(
            {
                "field": field.q,
                "points": [str(a) for a in points],
                "order": len(members),
                "elements": [
                    {"poly": str(m), "perm": list(perm.one_based())}
                    for m, perm in members
                ],
            }
        )
        return 0
    print(f"field {field}")
    print(f"points {points}")
    print(f"affine permutations of the point set: {len(members)}")
    width = max(len(str(m)) for m, _ in members)
    for m, perm in members:
        print(f"  {str(m):<{width}}  {perm}")
    return 0


def _print_group_text(report: GroupReport) -> None:
    print(f"permutation group order {report.order} ({report.hint})")
    if report.affine_order is not None:
        print(
            f"affine subgroup order {report.affine_order}; "
            f"equal to the full group: {report.is_affine_equal}"
        )
    for m in report.elements:
        poly = affine_str(m.poly) if m.poly.degree <= 1 else str(m.poly)
        tag = "affine" if m.is_affine else f"degree {m.degree}"
        print(f"  {m.perm}  {poly}  [{tag}]")


def cmd_group(args) -> int:
    field = build_field(args)
    points = parse_points(field, args.points)
    code = rs_code(points, args.k)
    report = brute_force_perm_group(code, points, max_n=args.max_n)
    if args.json:
        _print_json(report.to_json_dict())
        return 0
    print(f"field {field}")
    print(f"points {points}")
    print(f"RS code of dimension {args.k}: n={code.n} k={code.k}")
    print("generator matrix (rref):")
    print(format_matrix(code.rref))
    _print_group_text(report)
    return 0


def cmd_verify(args) -> int:
    field = build_field(args)
    points = parse_points(field, args.points)
    result = check_theorem(points, args.k, max_n=args.max_n)
    if args.json:
        _print_json(result.to_json_dict())
    else:
        print(f"field {field}")
        print(f"points {points}  k={args.k}")
        if result.warning:
            print(f"warning: {result.warning}")
        print(
            f"brute-force group order {result.group.order}, "
            f"affine group order {result.group.affine_order}"
        )
        print(f"groups equal: {result.equal}")
        print(f"every member has an affine polynomial: {result.all_degree_one}")
        if not result.in_range:
            print("reported (equality not asserted outside 1 < k < n-1)")
        else:
            print("verified" if result.holds else "MISMATCH")
    return 0 if result.holds else 1


@dataclass(frozen=True)
class SweepTrial:
    index: int
    q: int
    modulus: list[int] | None
    points: list[str]
    k: int
    order: int
    affine_order: int
    equal: bool
    all_degree_one: bool
    duality_ok: bool
    degree_bound_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.equal
            and self.all_degree_one
            and self.duality_ok
            and self.degree_bound_ok
        )

    def to_json_dict(self) -> dict:
        return {
            "trial": self.index,
            "q": self.q,
            "modulus": self.modulus,
            "points": self.points,
            "k": self.k,
            "order": self.order,
            "affine_order": self.affine_order,
            "equal": self.equal,
            "all_degree_one": self.all_degree_one,
            "duality_ok": self.duality_ok,
            "degree_bound_ok": self.degree_bound_ok,
            "ok": self.ok,
        }


def run_sweep(seed: int, trials: int, max_n: int = 10) -> list[SweepTrial]:
    """Seeded random instances checking the affine characterization.

    Each trial samples a field from SWEEP_FIELD_POOL, a point set with
    4 <= n <= min(8, q) and a dimension 2 <= k <= n-2, then verifies
    group equality, the degree bound, and Per(C) = Per(dual C).
    """
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        q = rng.choice(SWEEP_FIELD_POOL)
        field = Field(q)
        n = rng.randint(4, min(8, q))
        pts = rng.sample(field.elements(), n)
        k = rng.randint(2, n - 2)
        points = EvaluationSet(field, pts)
        result = check_theorem(points, k, max_n=max_n)
        group_perms = {m.perm for m in result.group.elements}
        code = rs_code(points, k)
        dual_perms = set(exhaustive_permutations(code.dual, max_n=max_n))
        bound = min(k, n - k)
        out.append(
            SweepTrial(
                index=t,
                q=q,
                modulus=None if field.modulus is None else list(field.modulus),
                points=[str(a) for a in points],
                k=k,
                order=result.group.order,
                affine_order=result.group.affine_order,
                equal=result.equal,
                all_degree_one=result.all_degree_one,
                duality_ok=dual_perms == group_perms,
                degree_bound_ok=all(
                    m.degree < bound for m in result.group.elements
                ),
            )
        )
    return out


def cmd_sweep(args) -> int:
    trials = run_sweep(args.seed, args.trials, max_n=args.max_n)
    failures = [t for t in trials if not t.ok]
    if args.json:
        _print_json(
            {
                "rng": RNG_NAME,
                "seed": args.seed,
                "trials": args.trials,
                "passed": len(trials) - len(failures),
                "failed": len(failures),
                "results": [t.to_json_dict() for t in trials],
            }
        )
        return 0 if not failures else 1
    print(f"sweep rng={RNG_NAME} seed={args.seed} trials={args.trials}")
    for t in trials:
        status = "ok" if t.ok else "FAIL"
        print(
            f"trial {t.index:03d} q={t.q} n={len(t.points)} k={t.k} "
            f"order={t.order} affine={t.affine_order} {status}"
        )
    for t in failures:
        print(
            f"FAILURE trial {t.index}: q={t.q} modulus={t.modulus} "
            f"points={','.join(t.points)} k={t.k} "
            f"equal={t.equal} degrees_ok={t.all_degree_one} "
            f"duality_ok={t.duality_ok} bound_ok={t.degree_bound_ok}"
        )
    print(f"{len(trials) - len(failures)}/{len(trials)} pass")
    return 0 if not failures else 1


def _paper_example_f13(checks: list[tuple[str, bool, str]]) -> None:
    field = Field(13)
    points = EvaluationSet(field, [0, 1, 4, 6])
    report = brute_force_perm_group(rs_code(points, 3), points)
    checks.append(
        ("F_13 group order is 6", report.order == 6, f"got {report.order}")
    )
    checks.append(
        (
            "F_13 group is non-abelian (S_3)",
            report.hint.abelian is False and report.hint.label == "S_3",
            f"got {report.hint}",
        )
    )
    expected = {
        Polynomial.from_ints(field, [0, 1]),
        Polynomial.from_ints(field, [1, 3]),
        Polynomial.from_ints(field, [4, 9]),
    }
    actual = {m.polynomial for m, _ in affine_group(points)}
    checks.append(
        (
            "F_13 affine maps are exactly {x, 3*x + 1, 9*x + 4}",
            actual == expected,
            "got {" + ", ".join(sorted(affine_str(f) for f in actual)) + "}",
        )
    )
    checks.append(
        (
            "F_13 affine subgroup has order 3 and is proper",
            report.affine_order == 3 and report.is_affine_equal is False,
            f"affine order {report.affine_order}, equal {report.is_affine_equal}",
        )
    )


def _paper_example_f9(checks: list[tuple[str, bool, str]]) -> None:
    field = Field(9, modulus=(2, 2, 1))
    points = EvaluationSet(
        field, [[0, 0], [1, 0], [2, 0], [1, 1], [2, 2]]
    )
    cube = lambda v: tuple(x**3 for x in v)  # noqa: E731
    x2 = points.evaluate(Polynomial.monomial(field, 2))
    x6 = points.evaluate(Polynomial.monomial(field, 6))
    checks.append(
        (
            "F_9 cubing the x^2 evaluations gives the x^6 evaluations",
            cube(x2) == x6,
            f"{[str(v) for v in cube(x2)]} vs {[str(v) for v in x6]}",
        )
    )
    x1 = points.evaluate(Polynomial.x(field))
    x9 = points.evaluate(Polynomial.monomial(field, 9))
    checks.append(
        (
            "F_9 x^9 and x agree on the points",
            x9 == x1,
            f"{[str(v) for v in x9]} vs {[str(v) for v in x1]}",
        )
    )
    c4 = rs_code(points, 4)
    checks.append(
        (
            "F_9 Frobenius fixes the dimension-4 RS code",
            c4.frobenius_image() == c4,
            "codes differ",
        )
    )
    c3 = rs_code(points, 3)
    checks.append(
        (
            "F_9 Frobenius moves the dimension-3 RS code",
            c3.frobenius_image() != c3,
            "codes coincide",
        )
    )


def cmd_paper_examples(args) -> int:
    checks: list[tuple[str, bool, str]] = []
    _paper_example_f13(checks)
    _paper_example_f9(checks)
    failed = [c for c in checks if not c[1]]
    if args.json:
        _print_json(
            {
                "checks": [
                    {"name": name, "ok": ok} for name, ok, _ in checks
                ],
                "passed": len(checks) - len(failed),
                "failed": len(failed),
            }
        )
        return 0 if not failed else 1
    for name, ok, detail in checks:
        if ok:
            print(f"ok   {name}")
        else:
            print(f"FAIL {name}: {detail}")
    print(f"{len(checks) - len(failed)}/{len(checks)} checks pass")
    return 0 if not failed else 1


# -- parser -------------------------------------------------------------------


def _add_field_flags(sub, with_k: bool) -> None:
    sub.add_argument("--field", type=int, required=True, help="field order q = p^m")
    sub.add_argument(
        "--modulus",
        default=None,
        help="extension modulus c0,c1,...,cm (ascending, monic); default: first irreducible",
    )
    sub.add_argument(
        "--points",
        required=True,
        help="comma-separated element literals, e.g. 0,1,4,6 or [0,0],[1,0]",
    )
    if with_k:
        sub.add_argument("--k", type=int, required=True, help="code dimension")
        sub.add_argument(
            "--max-n", type=int, default=10, help="exhaustive-search length cap"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsperm",
        description="Permutation groups of Reed-Solomon codes over arbitrary evaluation sets",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("affine", help="list the affine permutations of a point set")
    _add_field_flags(p, with_k=False)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_affine)

    p = subs.add_parser("group", help="brute-force the permutation group of RS(A,k)")
    _add_field_flags(p, with_k=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_group)

    p = subs.add_parser(
        "verify", help="check Per(RS(A,k)) against the affine permutations of A"
    )
    _add_field_flags(p, with_k=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("sweep", help="seeded randomized verification sweep")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser(
        "paper-examples", help="reproduce the built-in F_13 and F_9 worked examples"
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_paper_examples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
