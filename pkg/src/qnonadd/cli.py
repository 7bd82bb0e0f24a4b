"""Command-line entry point: construct, verify, bounds, run.

Exit status: 0 pass (or expected verdict), 1 failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bounds
from .css import ConstructionError, build_css, build_twisted_css
from .formats import (
    FAMILIES,
    ParseError,
    Recipe,
    RunManifest,
    format_basis,
    format_stabilizer,
    parse_basis,
    parse_codebook,
    parse_linear_code,
    parse_recipe,
    parse_sign_table,
    parse_stabilizer,
)
from .nonadditive import (
    GreedyConfig,
    build_cssnonadd,
    build_greedy_family,
    build_tau_coset_code,
    extend_code,
    greedy_vectors,
    hadamard11,
)
from .stabilizer import StabilizerError, rebuild_stabilizer, verify_sign_identities
from .states import QuantumCodeBasis
from .verify import (
    CriterionInapplicableError,
    KLMode,
    Verdict,
    default_workers,
    dual_distance_witness,
    find_stabilizer,
    kl_check,
    nonadd_verdict,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_from_recipe(r: Recipe) -> QuantumCodeBasis:
    if r.family == "hadamard11":
        return hadamard11()
    if r.code_file is None:
        raise UsageError(f"family {r.family} needs a code file")
    code = parse_linear_code(_read(r.code_file))
    if r.family == "css":
        return build_css(code)
    if r.family == "twisted-css":
        return build_twisted_css(code)
    if r.d is None:
        raise UsageError(f"family {r.family} needs d")
    if r.family == "cssnonadd":
        return build_cssnonadd(code, r.d)
    # tau-coset
    if r.K is None:
        return build_greedy_family(code, r.d).basis
    cfg = GreedyConfig(code, r.d)
    base = build_tau_coset_code(cfg, greedy_vectors(cfg, code.n))
    if r.K <= base.K:
        return QuantumCodeBasis(code.n, base.vectors[: r.K], r.d)
    return extend_code(base, cfg, r.K)


def cmd_construct(args) -> int:
    if args.recipe:
        recipes = parse_recipe(_read(args.recipe))
        if len(recipes) != 1:
            raise UsageError("recipe file must hold exactly one CONSTRUCT line")
        recipe = recipes[0]
    else:
        if args.family is None:
            raise UsageError("family or --recipe required")
        recipe = Recipe(args.family, args.code, args.d, args.K)
    try:
        basis = build_from_recipe(recipe)
    except (ConstructionError, StabilizerError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    header = [str(recipe), "scan order: lexicographic (deterministic)"]
    _emit(format_basis(basis, header), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    what = args.what
    text = _read(args.input)
    lines: list[str]
    if what == "kl":
        basis = parse_basis(text)
        d = args.d if args.d is not None else basis.d
        workers = args.workers if args.workers is not None else default_workers()
        rep = kl_check(basis, d, args.mode, early_exit=args.early_exit, workers=workers)
        lines, ok = rep.lines(), rep.passed
    elif what == "dual-distance":
        if args.d is None:
            raise UsageError("--d required")
        s = parse_stabilizer(text)
        w = dual_distance_witness(s, args.d)
        ok = w is None
        lines = [f"DUAL d={args.d} n={s.n} m={s.m} result={'pass' if ok else 'fail'}"]
        if w is not None:
            lines.append(f"WITNESS {w}")
    elif what == "stabilizer":
        basis = parse_basis(text)
        s = find_stabilizer(basis)
        lines = [f"STABILIZER n={s.n} generators={s.m} order={s.order}"]
        lines += format_stabilizer(s).splitlines() if s.m else []
        ok = s.m == 0 or not args.expect_trivial
    elif what == "signs":
        table = parse_sign_table(text)
        rep = verify_sign_identities(table)
        lines, ok = [str(rep)], rep.passed
        if ok and args.rebuild:
            lines += format_stabilizer(rebuild_stabilizer(table)).splitlines()
    elif what == "nonadd":
        if args.containing is None or args.ell is None:
            raise UsageError("--containing and --ell required")
        basis = parse_basis(text)
        containing = parse_codebook(_read(args.containing))
        try:
            v = nonadd_verdict(basis, containing, args.ell)
        except CriterionInapplicableError as exc:
            lines, ok = [f"NONADD verdict=inapplicable reason={exc}"], False
        else:
            lines = v.lines()
            ok = v.verdict.value == args.expect if args.expect else v.verdict is not Verdict.INCONCLUSIVE
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(what)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


def bounds_report(n: int, k: int, d: int) -> str:
    shifts = bounds.trivial_stabilizer_bound(n, k, d)
    ell = bounds.greedy_ell(n, k, d)
    out = [f"{shifts}; ell={ell}"]
    out.append(f"ball: V={bounds.ball(n, d)} (weights < {d})")
    out.append(str(bounds.twisted_css_bound(n, k, d)))
    out.append(str(bounds.coset_room_bound(n, k)))
    out.append(f"K=2^ell={2**ell if ell >= 0 else 0} k+ell<n: {'OK' if k + ell < n else 'FAILS'}")
    if d == 2:
        out.append(f"ceil-exponent(d=2)={bounds.ceil_ell_distance2(n)}")
    out.append(f"rate-bound 1-2H2(d/n)={bounds.rate_bound(n, d):.6f}")
    return "\n".join(out) + "\n"


def cmd_bounds(args) -> int:
    if min(args.n, args.k + 1, args.d) < 1:
        raise UsageError("n and d must be positive, k non-negative")
    _emit(bounds_report(args.n, args.k, args.d), args.out)
    return EXIT_OK


def cmd_run(args) -> int:
    m = RunManifest.load(args.manifest)
    return main(m.argv)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qnonadd", description=__doc__)
    p.add_argument("--manifest", help="write a replayable run manifest (JSON) here")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code basis")
    c.add_argument("family", nargs="?", choices=FAMILIES)
    c.add_argument("code", nargs="?", help="binary code file ('n k' header + rows)")
    c.add_argument("--d", type=int)
    c.add_argument("--K", type=int)
    c.add_argument("--recipe", help="file with one CONSTRUCT line")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a basis, stabilizer or sign table")
    v.add_argument("what", choices=("kl", "dual-distance", "stabilizer", "nonadd", "signs"))
    v.add_argument("input")
    v.add_argument("--d", type=int)
    v.add_argument("--mode", choices=[m.value for m in KLMode], default=KLMode.GENERAL.value)
    v.add_argument("--workers", type=int, help="default: $QECC_WORKERS or CPU count")
    v.add_argument("--early-exit", action="store_true")
    v.add_argument("--containing")
    v.add_argument("--ell", type=int)
    v.add_argument("--expect", choices=[x.value for x in Verdict])
    v.add_argument("--expect-trivial", action="store_true")
    v.add_argument("--rebuild", action="store_true", help="print the rebuilt stabilizer (signs)")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="print the counting inequalities")
    b.add_argument("n", type=int)
    b.add_argument("k", type=int)
    b.add_argument("d", type=int)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bounds)

    r = sub.add_parser("run", help="replay a manifest")
    r.add_argument("manifest")
    r.set_defaults(func=cmd_run)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # a code file given after options lands in extra
        if extra and args.command == "construct" and args.code is None and len(extra) == 1 \
                and not extra[0].startswith("-"):
            args.code = extra.pop()
        if extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        status = args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.manifest and args.command != "run":
        replay = [a for a in argv if a != "--manifest" and a != args.manifest]
        inputs = [x for x in (getattr(args, "code", None), getattr(args, "input", None),
                              getattr(args, "containing", None), getattr(args, "recipe", None)) if x]
        params = {k: getattr(args, k, None) for k in ("family", "what", "n", "k", "d", "K", "ell", "mode")}
        RunManifest(args.command, replay, inputs, {k: v for k, v in params.items() if v is not None},
                    getattr(args, "out", None)).dump(args.manifest)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
