"""Command line: play, sweep, arith, oracle, replay.

Exit codes: 0 success, 2 invalid input, 3 oracle cap exceeded,
4 strategy forfeit (play only).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import arith
from .graph import TargetFamily
from .rules import GameConfig, IllegalMoveError, RuleSet

EXIT_OK, EXIT_INVALID, EXIT_CAP, EXIT_FORFEIT = 0, 2, 3, 4


class UsageError(ValueError):
    pass


def parse_int_list(text: str) -> list[int]:
    """'1..6', '3,5,9' or a mix such as '1..3,10'."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"invalid integer list {text!r}") from None
    return out


def _family(args) -> TargetFamily:
    try:
        return TargetFamily(args.family, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _common(p, need_b=True):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    if need_b:
        p.add_argument("--b", type=int, required=True)
    p.add_argument("--rules", choices=[r.value for r in RuleSet], default="strict")
    p.add_argument("--family", choices=["star", "double-star", "path-double-star"],
                   default="star")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="aegame", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("play", help="run one match")
    _common(p)
    p.add_argument("--avoider", default="min-dmax")
    p.add_argument("--enforcer", default="strict-star")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", help="write a JSONL trace here")
    p.add_argument("--instrument", default="", help="comma separated check names")
    p.add_argument("--no-cutoff", action="store_true", help="play on to exhaustion")

    p = sub.add_parser("sweep", help="many matches, CSV out")
    p.add_argument("--n", required=True, help="list such as 100,200 or 90..100")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rules", choices=[r.value for r in RuleSet], default="strict")
    p.add_argument("--family", choices=["star", "double-star", "path-double-star"],
                   default="star")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--b", help="explicit list such as 50,100 or 1..10")
    g.add_argument("--b-gen", choices=["eminus", "eplus", "construct-enforcer",
                                       "construct-avoider", "geometric"])
    p.add_argument("--b-step", type=int, default=1)
    p.add_argument("--b-count", type=int, default=10)
    p.add_argument("--b-lo", type=int)
    p.add_argument("--b-hi", type=int)
    p.add_argument("--avoider", default="min-dmax")
    p.add_argument("--enforcer", default="strict-star")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="base seed")
    p.add_argument("--out", help="CSV path (default stdout)")

    p = sub.add_parser("arith", help="bias arithmetic")
    asub = p.add_subparsers(dest="what", required=True)
    q = asub.add_parser("r")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    for name in ("eplus", "eminus", "construct-enforcer", "construct-avoider"):
        q = asub.add_parser(name)
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--k", type=int, required=True)
    q = asub.add_parser("fact-many")
    q.add_argument("--c", type=Fraction, required=True)
    q.add_argument("--exponent", type=Fraction, required=True)
    q.add_argument("--variant", choices=["i", "ii"], required=True)
    q.add_argument("--n", required=True, help="range such as 90..100")
    q = asub.add_parser("fact-all")
    q.add_argument("--delta", type=Fraction, required=True)
    q.add_argument("--N", type=int, required=True)
    q.add_argument("--q", type=int, required=True)

    p = sub.add_parser("oracle", help="exact winner table for tiny boards")
    _common(p, need_b=False)
    p.add_argument("--b", required=True, help="range such as 1..6")

    p = sub.add_parser("replay", help="re-run a trace and compare")
    p.add_argument("trace")
    return ap


# -- subcommands ------------------------------------------------------------

def cmd_play(args, out) -> int:
    from .diagnostics import make_checks, summarize
    from .strategies import AVOIDERS, ENFORCERS, make_strategy
    from .rules import Player, play_match
    from .traces import write_trace

    if args.avoider not in AVOIDERS:
        raise UsageError(f"unknown avoider {args.avoider!r}; choose from {sorted(AVOIDERS)}")
    if args.enforcer not in ENFORCERS:
        raise UsageError(f"unknown enforcer {args.enforcer!r}; choose from {sorted(ENFORCERS)}")
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    try:
        cfg = GameConfig(args.n, args.b, RuleSet(args.rules), _family(args), args.seed,
                         cutoff=not args.no_cutoff)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    names = [c for c in args.instrument.split(",") if c]
    try:
        checks = make_checks(cfg, names)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = play_match(cfg, make_strategy(Player.AVOIDER, args.avoider, cfg, args.seed),
                     make_strategy(Player.ENFORCER, args.enforcer, cfg, args.seed),
                     observers=checks)
    for ob in checks:
        res.diagnostics.extend(ob.records)
    if args.trace:
        write_trace(args.trace, cfg, args.avoider, args.enforcer, res)
    line = res.summary()
    if res.forfeit:
        line += f" forfeit={res.forfeit}"
    print(line, file=out)
    for name, (seen, bad) in summarize(res.diagnostics).items():
        print(f"check {name}: {seen} records, {bad} flagged", file=out)
    return EXIT_FORFEIT if res.forfeit else EXIT_OK


def cmd_sweep(args, out) -> int:
    from .traces import SweepSpec, rows_to_csv, sweep_rows

    try:
        b_values = parse_int_list(args.b) if args.b is not None else None
        if args.b is None and args.b_gen is None:
            b_values = []
        spec = SweepSpec(n_values=parse_int_list(args.n), k=args.k, rules=args.rules,
                         family=args.family, avoider=args.avoider, enforcer=args.enforcer,
                         b_values=b_values, b_gen=args.b_gen,
                         gen_args={"step": args.b_step, "count": args.b_count,
                                   "lo": args.b_lo, "hi": args.b_hi},
                         repetitions=args.reps, seed_base=args.seed)
        TargetFamily(args.family, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = rows_to_csv(sweep_rows(spec))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_arith(args, out) -> int:
    w = args.what
    try:
        if w == "r":
            print(f"n={args.n} b={args.b} r={arith.remainder_r(args.n, args.b)}", file=out)
        elif w in ("eplus", "eminus"):
            fn = arith.e_plus if w == "eplus" else arith.e_minus
            val = fn(args.n, args.k)
            print(f"n={args.n} k={args.k} {w}={'none' if val is None else val}", file=out)
        elif w == "construct-enforcer":
            got = arith.enforcer_favorable_strict_bias(args.n, args.k)
            tail = "none" if got is None else f"q={got[1]} b={got[0]}"
            print(f"n={args.n} k={args.k} {tail}", file=out)
        elif w == "construct-avoider":
            got = arith.avoider_favorable_strict_bias(args.n, args.k)
            tail = "none" if got is None else f"b={got} r={arith.remainder_r(args.n, got)}"
            print(f"n={args.n} k={args.k} {tail}", file=out)
        elif w == "fact-many":
            rows = arith.fact_many_search(args.c, args.exponent, args.variant,
                                          parse_int_list(args.n), all_witnesses=True)
            print(f"c={args.c} exponent={args.exponent} variant={args.variant}", file=out)
            for n, qs in rows:
                print(f"n={n} q={','.join(map(str, qs))}", file=out)
        elif w == "fact-all":
            val = arith.fact_all_search(args.delta, args.N, args.q)
            print(f"delta={args.delta} N={args.N} q={args.q} "
                  f"k={'none' if val is None else val}", file=out)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    from .oracle import OracleCapError, winner_table

    _family(args)
    bs = parse_int_list(args.b)
    if not bs or min(bs) < 1:
        raise UsageError("--b must list biases >= 1")
    try:
        table = winner_table(args.n, args.k, args.rules, args.family, bs)
    except OracleCapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    print("b,winner", file=out)
    for b in bs:
        print(f"{b},{table.winners[b].value}", file=out)
    for key, val in table.thresholds.items():
        print(f"# {key}={val}", file=out)
    return EXIT_OK


def cmd_replay(args, out) -> int:
    from .traces import _dump, read_trace, replay_trace

    try:
        tf = read_trace(args.trace)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read trace: {exc}") from None
    block, same = replay_trace(tf)
    print(_dump(block), file=out)
    print("replay matches trace" if same else "replay DIFFERS from trace", file=out)
    return EXIT_OK if same else 1


COMMANDS = {"play": cmd_play, "sweep": cmd_sweep, "arith": cmd_arith,
            "oracle": cmd_oracle, "replay": cmd_replay}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.cmd](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except IllegalMoveError as exc:
        print(f"engine error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
