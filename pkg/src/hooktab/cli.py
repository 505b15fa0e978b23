"""Command-line front end.

Tableaux are read from standard input in the text format of textform;
results go to standard output.  Exit codes: 0 success / all checks passed,
1 verification or validation failure, 2 usage error, 3 internal assertion
failure.
"""

from __future__ import annotations

import argparse
import sys

from . import enumeration, genfun
from .enumeration import CHECK_IDS, EnumBounds
from .switching import (
    InternalError,
    PreconditionViolation,
    available_switches,
    fully_switch,
    gg_jdt,
    shuffle,
)
from .tableaux import classify_mixed, hvt_violations, weight_hvt
from .textform import (
    TableauSyntaxError,
    parse_hvt,
    parse_mixed,
    serialize_hvt,
    serialize_mixed,
)
from .uncrowding import uncrowd, uncrowd_canonical


def _partition_arg(text: str):
    if text.strip() == "":
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hooktab",
        description="hook-valued tableaux, uncrowding, switching and "
        "generating-function identity checks",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check a tableau read from stdin")
    p.add_argument("--family", choices=("hvt", "mixed"), default="hvt")

    p = sub.add_parser("uncrowd", help="run the uncrowding map on an HVT")
    p.add_argument(
        "--word",
        required=True,
        help="word over A/L in subscript order (rightmost letter applied "
        "first), or LAinf / ALinf for the canonical orders",
    )
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("shuffle", help="jeu-de-taquin shuffle of a mixed tableau")

    p = sub.add_parser("switch", help="apply switches to a mixed tableau")
    p.add_argument("--all", action="store_true", help="switch to the normal form")
    p.add_argument("--seed", type=int, default=None, help="use a seeded random strategy")

    p = sub.add_parser("ggjdt", help="Goulden-Greene jeu de taquin")
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("enum", help="enumerate a tableau family")
    p.add_argument("--family", choices=("hvt", "ssyt", "exq", "bft"), required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, default=None)
    p.add_argument("--outer", type=_partition_arg, default=None)
    p.add_argument("--inner", type=_partition_arg, default=())
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--excess", type=int, default=2)

    p = sub.add_parser("verify", help="run an exhaustive theorem check")
    p.add_argument("--check", choices=CHECK_IDS, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, default=None)
    p.add_argument("--outer", type=_partition_arg, default=None)
    p.add_argument("--inner", type=_partition_arg, default=None)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--excess", type=int, default=2)
    p.add_argument("--max-outer", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("identity", help="generating-function identity checks")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, default=())
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--excess", type=int, default=2)
    p.add_argument(
        "--det",
        action="store_true",
        help="check the determinant formula instead of the three-way expansion",
    )
    return parser


def _read_stdin(stdin) -> str:
    data = stdin.read()
    if isinstance(data, bytes):
        data = data.decode()
    return data


def _diff_polys(out, names, polys) -> bool:
    for name, poly in zip(names, polys):
        print(f"{name} terms: {len(poly.terms)}", file=out)
    monomials = sorted(
        {m for p in polys for m in p.terms}, key=lambda m: m.sort_key()
    )
    clean = True
    for m in monomials:
        coeffs = [p.coefficient(m) for p in polys]
        if len(set(coeffs)) != 1:
            clean = False
            detail = " ".join(f"{n}={c}" for n, c in zip(names, coeffs))
            print(f"mismatch: {m}: {detail}", file=out)
    if clean:
        print("identical", file=out)
    return clean


def _cmd_validate(args, stdin, out) -> int:
    text = _read_stdin(stdin)
    if args.family == "hvt":
        T = parse_hvt(text)
        bad = hvt_violations(T)
        if bad:
            for v in bad:
                print(" ".join(str(x) for x in v), file=out)
            return 1
        print(f"valid (weight {weight_hvt(T)})", file=out)
        return 0
    T = parse_mixed(text)
    flags = classify_mixed(T)
    print("valid", file=out)
    for name, value in flags._asdict().items():
        print(f"{name}: {value}", file=out)
    return 0


def _cmd_uncrowd(args, stdin, out) -> int:
    T = parse_hvt(_read_stdin(stdin))
    bad = hvt_violations(T)
    if bad:
        for v in bad:
            print(" ".join(str(x) for x in v), file=out)
        return 1
    if args.word in ("LAinf", "ALinf"):
        order = "LA" if args.word == "LAinf" else "AL"
        a, l = T.arm_excess, T.leg_excess
        word = ("L" * l + "A" * a) if order == "LA" else ("A" * a + "L" * l)
    else:
        word = args.word
    result = uncrowd(T, word)
    if args.trace:
        from .uncrowding import arm_uncrowd, leg_uncrowd

        print(serialize_hvt(T), file=out)
        cur = T
        for letter in reversed(word):
            op = arm_uncrowd if letter == "A" else leg_uncrowd
            nxt, rec = op(cur)
            if rec is None:
                continue
            cur = nxt
            print(f"--{letter}-->", file=out)
            print(serialize_hvt(cur), file=out)
    print(f"P: {serialize_hvt(result.insertion)}", file=out)
    print(f"Q: {serialize_mixed(result.recording)}", file=out)
    return 0


def _cmd_switchlike(args, stdin, out) -> int:
    T = parse_mixed(_read_stdin(stdin))
    if args.verb == "shuffle":
        print(serialize_mixed(shuffle(T)), file=out)
    elif args.verb == "switch":
        if args.all:
            strategy = "deterministic" if args.seed is None else "random"
            print(serialize_mixed(fully_switch(T, strategy, args.seed)), file=out)
        else:
            moves = available_switches(T)
            print(serialize_mixed(moves[0][1] if moves else T), file=out)
    else:  # ggjdt
        if args.trace:
            result, steps = gg_jdt(T, trace=True)
            print(serialize_mixed(T), file=out)
            for step in steps:
                print("--slide-->", file=out)
                print(serialize_mixed(step), file=out)
        else:
            result = gg_jdt(T)
        print(f"E: {serialize_mixed(result)}", file=out)
    return 0


def _cmd_enum(args, out) -> int:
    if args.family in ("hvt", "ssyt"):
        if args.lam is None:
            raise SystemExit(2)
        if args.family == "hvt":
            items = enumeration.enum_hvt(args.lam, EnumBounds(args.n, args.excess))
        else:
            items = enumeration.enum_ssyt(args.lam, args.n)
        for T in items:
            print(serialize_hvt(T), file=out)
    else:
        if args.outer is None:
            raise SystemExit(2)
        enum = (
            enumeration.enum_exquisite
            if args.family == "exq"
            else enumeration.enum_biflagged
        )
        for T in enum(args.outer, args.inner):
            print(serialize_mixed(T), file=out)
    return 0


def _cmd_verify(args, out, err) -> int:
    report = enumeration.verify(
        args.check,
        args.lam,
        EnumBounds(args.n, args.excess),
        outer=args.outer,
        inner=args.inner,
        max_outer=args.max_outer,
        seed=args.seed,
        jobs=args.jobs,
    )
    # elapsed goes to stderr so stdout stays byte-identical across runs
    print(report.to_json(), file=out)
    print(f"elapsed: {report.elapsed:.3f}s", file=err)
    return 0 if report.passed else 1


def _cmd_identity(args, out) -> int:
    lam = args.lam
    if args.det:
        cap = sum(lam) + args.excess
        lhs, rhs = genfun.det_formula_check(lam, args.n, cap)
        ok = _diff_polys(out, ("determinant", "vandermonde*hvt"), (lhs, rhs))
        return 0 if ok else 1
    cap = sum(lam) + args.excess
    bounds = EnumBounds(args.n, args.excess)
    polys = (
        genfun.hvt_genfun(lam, bounds, cap),
        genfun.schur_expansion_genfun(lam, bounds, cap, "EXQ"),
        genfun.schur_expansion_genfun(lam, bounds, cap, "BFT"),
    )
    ok = _diff_polys(out, ("hvt", "exq", "bft"), polys)
    return 0 if ok else 1


def run(argv, stdin=None, stdout=None, stderr=None) -> int:
    """Dispatch one command; returns the exit code."""
    stdin = stdin if stdin is not None else sys.stdin
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.verb == "validate":
            return _cmd_validate(args, stdin, out)
        if args.verb == "uncrowd":
            return _cmd_uncrowd(args, stdin, out)
        if args.verb in ("shuffle", "switch", "ggjdt"):
            return _cmd_switchlike(args, stdin, out)
        if args.verb == "enum":
            return _cmd_enum(args, out)
        if args.verb == "verify":
            return _cmd_verify(args, out, err)
        if args.verb == "identity":
            return _cmd_identity(args, out)
        return 2
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (TableauSyntaxError, PreconditionViolation, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1
    except (AssertionError, InternalError) as exc:
        print(f"internal error: {exc}", file=err)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
