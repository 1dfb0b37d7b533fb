"""Command-line interface.

Exit codes: 0 success or agreement, 1 disagreement found by a sweep,
2 invalid input, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import classifier, oracle, special, sweep
from .measure import Measure, format_rational, parse_rational
from .report import Report

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_GRID_CAP = 1_000_000


class InputError(ValueError):
    pass


def read_masses(tokens: Sequence[str], l: int, stream=None) -> Measure:
    """Parse masses from command-line tokens, or from ``stream`` when none are given."""
    if not tokens:
        text = (stream or sys.stdin).read()
        tokens = [t for t in re.split(r"[\s,]+", text) if t]
    else:
        tokens = [t for tok in tokens for t in re.split(r"[\s,]+", tok) if t]
    want = 1 << l
    if len(tokens) != want:
        raise InputError(f"expected {want} masses for l={l}, got {len(tokens)}")
    masses = []
    for pos, tok in enumerate(tokens, 1):
        try:
            masses.append(parse_rational(tok))
        except ValueError as exc:
            raise InputError(f"mass #{pos}: {exc}") from None
    total = sum(masses, Fraction(0))
    if total != 1:
        raise InputError(f"masses sum to {format_rational(total)}, not 1")
    return Measure.from_masses(masses)


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _closed_form(mu: Measure):
    if mu.l == 3:
        v = classifier.is_tec_theorem4(mu, with_counterexample=False)
        label = v.decomposition.label() if v.decomposition else None
        return v.tec, v.branch if v.tec else None, label, v.normalizing_shift
    if mu.l == 2:
        return special.theorem3_check(mu), None, None, None
    return None, None, None, None


def cmd_classify(args) -> int:
    mu = read_masses(args.masses, args.l)
    closed, branch, dec, shift = _closed_form(mu)
    ref = oracle.is_tec_bruteforce(mu)
    rep = Report(
        "classify", mu, closed, ref.tec, branch, dec, shift, ref.counterexample,
        oracle.equivalence_class(mu) if args.with_class else None,
    )
    _emit(rep.to_machine() if args.format == "machine" else rep.to_human())
    return EXIT_INTERNAL if rep.agree is False else EXIT_OK


def cmd_class(args) -> int:
    mu = read_masses(args.masses, args.l)
    rep = Report("class", mu, class_reps=oracle.equivalence_class(mu))
    _emit(rep.to_machine() if args.format == "machine" else rep.to_human())
    return EXIT_OK


def _summary_text(name: str, s: sweep.Summary, extra: dict, machine: bool) -> str:
    fields = dict(extra)
    fields.update(
        measures=s.total, tec=s.tec, non_tec=s.non_tec, disagreements=s.disagreements,
    )
    branches = {b: s.branches[b] for b in sorted(s.branches)}
    if machine:
        lines = [f"report={name}"] + [f"{k}={v}" for k, v in fields.items()]
        lines += [f"branch.{b}={n}" for b, n in branches.items()]
        lines += [f"failure={m}" for m in s.failures]
        return "\n".join(lines) + "\n"
    lines = [f"{name}: " + ", ".join(f"{k}={v}" for k, v in fields.items())]
    if branches:
        lines.append("branch usage: " + ", ".join(f"{b}:{n}" for b, n in branches.items()))
    if s.failures:
        lines.append(f"DISAGREEMENT; minimal failing input (denominator, then lexicographic):")
        lines.append(f"  {s.failures[0]}")
    else:
        lines.append("classifier and oracle agree on every measure")
    return "\n".join(lines) + "\n"


def cmd_fuzz(args) -> int:
    if args.count < 1 or args.denominator < 1:
        raise InputError("--count and --denominator must be >= 1")
    s = sweep.fuzz(args.count, args.seed, args.denominator, args.workers)
    extra = {"seed": args.seed, "count": args.count, "denominator_bound": args.denominator}
    _emit(_summary_text("fuzz", s, extra, args.format == "machine"))
    return EXIT_OK if s.ok else EXIT_DISAGREE


def cmd_grid(args) -> int:
    if args.denominator < 1:
        raise InputError("--denominator must be >= 1")
    n = sweep.composition_count(args.denominator)
    if n > args.cap:
        raise InputError(f"grid D={args.denominator} has {n} measures, above --cap {args.cap}")
    s = sweep.grid(args.denominator, args.workers)
    _emit(_summary_text("grid", s, {"denominator": args.denominator}, args.format == "machine"))
    return EXIT_OK if s.ok else EXIT_DISAGREE


def cmd_theorems(args) -> int:
    which = [1, 2, 3] if args.which == "all" else [int(args.which)]
    ok = True
    lines = []
    for t in which:
        if t == 1:
            r = sweep.theorem1_sweep(args.steps)
            flip = r.notes["flip"]
            detail = {
                "flip": "-" if flip is None else f"{format_rational(flip[0])}..{format_rational(flip[1])}",
                "oracle_at_1/3": str(r.notes["oracle_at_one_third"]).lower(),
            }
        elif t == 2:
            r = sweep.theorem2_sweep(args.grid, args.diagonal)
            detail = {"grid": args.grid, "diagonal": str(args.diagonal).lower()}
        else:
            r = sweep.theorem3_sweep(args.denominator)
            detail = {"max_denominator": args.denominator}
        ok &= r.ok
        fields = {"theorem": t, "checked": r.checked, "mismatches": len(r.mismatches), **detail}
        if args.format == "machine":
            lines += [f"{k}={v}" for k, v in fields.items()]
            lines += [f"mismatch={' '.join(format_rational(x) for x in _flat(m))}" for m in r.mismatches]
        else:
            status = "agrees with the oracle" if r.ok else "DISAGREES with the oracle"
            lines.append(f"Theorem {t}: {status} ({', '.join(f'{k}={v}' for k, v in fields.items() if k != 'theorem')})")
            lines += [f"  mismatch: {' '.join(format_rational(x) for x in _flat(m))}" for m in r.mismatches[:10]]
    _emit("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_DISAGREE


def _flat(m):
    return m.masses if isinstance(m, Measure) else m


def cmd_systems(args) -> int:
    try:
        table = oracle.classify_systems()
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    lines = []
    for p in range(128):
        fam = table[p]
        signs = "".join("+" if e > 0 else "-" for e in oracle.pattern_from_index(p))
        if args.format == "machine":
            lines.append(f"pattern={p} signs={signs} family={fam.tag} j={fam.shift_index}")
        else:
            lines.append(f"{p:3d}  {signs}  {fam.tag:<2} j={fam.shift_index}")
    counts = oracle.family_counts(table)
    lines.append("counts " + " ".join(f"{k}:{v}" for k, v in counts.items()))
    _emit("\n".join(lines) + "\n")
    expected = {"A": 8, "B": 8, "C": 56, "D": 56}
    return EXIT_OK if counts == expected else EXIT_INTERNAL


def cmd_generate(args) -> int:
    params = args.params
    try:
        if args.family == "example":
            if len(params) != 2:
                raise InputError("usage: generate example N EPS")
            n = int(params[0])
            rng = special.example_range(n)
            eps = parse_rational(params[1])
            if eps not in rng:
                raise InputError(f"eps={format_rational(eps)} outside the valid range {rng} of example {n}")
            mu = special.example_measure(n, eps)
        elif args.family == "poisson-haar":
            if len(params) != 1:
                raise InputError("usage: generate poisson-haar Q   (Q = exp(-lambda) in (0, 1])")
            q = parse_rational(params[0])
            if not 0 < q <= 1:
                raise InputError(f"q={format_rational(q)} outside the valid range (0, 1]")
            mu = special.poisson_haar(q)
        else:
            if len(params) != 7:
                raise InputError("usage: generate poisson U1 .. U7   (each in (0, 1])")
            u = [parse_rational(p) for p in params]
            if any(not 0 < x <= 1 for x in u):
                raise InputError("each parameter must lie in the valid range (0, 1]")
            mu = special.poisson_measure(u)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(f"{mu}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2tec",
        description="Decide whether a measure on Z_2^l is determined by |characteristic function| up to shift.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("human", "machine"), default="human")

    p = sub.add_parser("classify", help="closed-form classifier and oracle on one measure")
    p.add_argument("masses", nargs="*", help="2^l rationals (p/q, integer or decimal); stdin if omitted")
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--with-class", action="store_true", help="also list the equivalence class")
    fmt(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("class", help="list equivalence-class representatives")
    p.add_argument("masses", nargs="*")
    p.add_argument("--l", type=int, default=3)
    fmt(p)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("fuzz", help="random cross-validation of classifier against oracle")
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--denominator", type=int, default=24, help="largest denominator drawn")
    p.add_argument("--workers", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("grid", help="exhaustive cross-validation on masses d_i/D")
    p.add_argument("--denominator", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_GRID_CAP)
    p.add_argument("--workers", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("theorems", help="check the published criteria against the oracle")
    p.add_argument("which", choices=("1", "2", "3", "all"), nargs="?", default="all")
    p.add_argument("--steps", type=int, default=100, help="theorem 1: q = k/STEPS")
    p.add_argument("--grid", type=int, default=10, help="theorem 2: p, q, r = k/GRID")
    p.add_argument("--diagonal", action="store_true", help="theorem 2: only p = q = r")
    p.add_argument("--denominator", type=int, default=24, help="theorem 3: largest denominator")
    fmt(p)
    p.set_defaults(func=cmd_theorems)

    p = sub.add_parser("systems", help="family of each of the 128 sign-pattern systems")
    fmt(p)
    p.set_defaults(func=cmd_systems)

    p = sub.add_parser("generate", help="print a named family member as input masses")
    p.add_argument("family", choices=("example", "poisson-haar", "poisson"))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors, --help
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    if getattr(args, "l", 3) not in (1, 2, 3, 4):
        print("error: --l must be in 1..4", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
