"""Command-line interface: batch access to every module.

Numeric output is always the exact rational followed by a 12-digit
decimal rendering (round-half-even), which is cosmetic only.
"""

from __future__ import annotations

import argparse
import decimal
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import classical as classical_mod
from . import density, measures, qnumbers, trials
from .errors import PlogicError
from .formulas import Valuation, evaluate, is_tautology
from .parsing import format_sentence, parse_formula
from .proofs import check_deduction, format_proof, parse_proof
from .synthesis import synthesize_proof


def fmt_decimal(q: Fraction, digits: int = 12) -> str:
    """Fixed-point rendering with round-half-even ties."""
    with decimal.localcontext() as ctx:
        ctx.prec = max(60, digits + 30)
        d = decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator)
        quantum = decimal.Decimal(1).scaleb(-digits)
        return f"{d.quantize(quantum, rounding=decimal.ROUND_HALF_EVEN):f}"


def fmt_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def fmt_number(q: Fraction) -> str:
    return f"{fmt_rational(q)} {fmt_decimal(q)}"


@dataclass
class CommandReport:
    """Machine-parseable command outcome; exit status 0 iff ok."""

    status: str  # "ok" | "error"
    lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plogic",
        description="Probability-valued propositional logic toolbox")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a formula in one world")
    p.add_argument("formula")
    p.add_argument("--world", required=True,
                   help="bitstring, one bit per atom in first-occurrence order")

    p = sub.add_parser("taut", help="decide tautology by exhaustive valuation")
    p.add_argument("formula")

    p = sub.add_parser("prove", help="synthesize a checked deduction")
    p.add_argument("formula")

    p = sub.add_parser("check", help="verify a proof text file")
    p.add_argument("prooffile")

    p = sub.add_parser("prob", help="sentence probability under a distribution")
    p.add_argument("formula")
    p.add_argument("--dist", required=True)

    p = sub.add_parser("cond", help="conditional probability of B given C")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("--dist", required=True)

    p = sub.add_parser("bernoulli", help="exact run-count probabilities")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--p", type=_parse_fraction, required=True)

    p = sub.add_parser("lln", help="tail bound, exact probability, coverage")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=_parse_fraction, required=True)
    p.add_argument("--eps", type=_parse_fraction, required=True)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("classical", help="favorable-count probability")
    p.add_argument("--set", dest="set_file", required=True,
                   help="file with one member formula per line")
    p.add_argument("--event", required=True)

    q = sub.add_parser("qnum", help="sequence-number verdicts")
    qsub = q.add_subparsers(dest="qcommand", required=True)

    c = qsub.add_parser("filter", help="density-one filter membership")
    c.add_argument("set", nargs="+",
                   help="periodic <bits> | finite <i,j,...> | cofinite <i,j,...> "
                        "| all | none")
    c.add_argument("--horizon", type=int, default=density.DEFAULT_HORIZON)

    c = qsub.add_parser("freq", help="part-set frequency at n")
    c.add_argument("set", nargs="+")
    c.add_argument("--n", type=int, required=True)

    c = qsub.add_parser("classify", help="size class of a sequence")
    c.add_argument("seq", nargs="+", help="const <p/q> | recip-n | lin")
    c.add_argument("--horizon", type=int, default=density.DEFAULT_HORIZON)

    c = qsub.add_parser("eq", help="filter equality of two sequences")
    c.add_argument("--horizon", type=int, default=density.DEFAULT_HORIZON)
    c.add_argument("specs", nargs="+",
                   help="two sequence descriptors, comma separated")

    c = qsub.add_parser("lt", help="filter strict order of two sequences")
    c.add_argument("--horizon", type=int, default=density.DEFAULT_HORIZON)
    c.add_argument("specs", nargs="+")

    return parser


def _load_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_index_set(words: list[str]) -> density.IndexSet:
    kind = words[0]
    if kind == "all":
        return density.naturals()
    if kind == "none":
        return density.empty_set()
    if kind == "periodic":
        if len(words) != 2 or any(c not in "01" for c in words[1]):
            raise PlogicError("periodic needs a bit pattern, e.g. periodic 01")
        return density.EventuallyPeriodicSet(
            (), tuple(c == "1" for c in words[1]))
    if kind in ("finite", "cofinite"):
        if len(words) != 2:
            raise PlogicError(f"{kind} needs a comma-separated index list")
        try:
            items = tuple(int(x) for x in words[1].split(",") if x)
        except ValueError:
            raise PlogicError(f"bad index list {words[1]!r}") from None
        return (density.FiniteSet(items) if kind == "finite"
                else density.CofiniteSet(items))
    raise PlogicError(f"unknown index-set descriptor {kind!r}")


def _parse_seq(words: list[str]) -> qnumbers.QNumber:
    kind = words[0]
    if kind == "const":
        if len(words) != 2:
            raise PlogicError("const needs a rational, e.g. const 2/3")
        try:
            return qnumbers.standard(Fraction(words[1]))
        except (ValueError, ZeroDivisionError):
            raise PlogicError(f"bad rational {words[1]!r}") from None
    if kind == "recip-n":
        return qnumbers.harmonic()
    if kind == "lin":
        return qnumbers.ramp()
    raise PlogicError(f"unknown sequence descriptor {kind!r}")


def _split_specs(words: list[str]) -> tuple[list[str], list[str]]:
    if "," not in words:
        raise PlogicError("separate the two descriptors with a ','")
    i = words.index(",")
    return words[:i], words[i + 1:]


def run(argv: list[str]) -> CommandReport:
    """Execute one command line; never raises for user errors."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:  # --help
            return CommandReport("ok")
        return CommandReport("error", ["bad arguments"])
    try:
        return _dispatch(args)
    except PlogicError as exc:
        return CommandReport("error", [f"error: {exc}"])
    except OSError as exc:
        return CommandReport("error", [f"error: {exc}"])


def _dispatch(args) -> CommandReport:
    cmd = args.command

    if cmd == "eval":
        parsed = parse_formula(args.formula)
        world = Valuation.from_string(args.world)
        if world.n != len(parsed.atom_table):
            return CommandReport("error", [
                f"error: world has {world.n} bits for "
                f"{len(parsed.atom_table)} atoms"])
        value = evaluate(parsed.ast, world)
        return CommandReport("ok", [f"value: {value}"])

    if cmd == "taut":
        parsed = parse_formula(args.formula)
        answer = "yes" if is_tautology(parsed.ast) else "no"
        return CommandReport("ok", [f"tautology: {answer}"])

    if cmd == "prove":
        parsed = parse_formula(args.formula)
        deduction = synthesize_proof(parsed.ast)
        report = check_deduction(deduction)
        assert report.ok
        return CommandReport("ok", format_proof(deduction).splitlines())

    if cmd == "check":
        deduction = parse_proof(_load_text(args.prooffile))
        report = check_deduction(deduction)
        if report.ok:
            return CommandReport("ok", [
                "accepted",
                f"goal: {format_sentence(deduction.goal)}",
                f"lines: {len(deduction.lines)}",
                f"hypotheses: {len(deduction.hypotheses)}"])
        where = f"line {report.line}: " if report.line is not None else ""
        return CommandReport("error", [
            f"rejected: {where}{report.code}: {report.message}"])

    if cmd == "prob":
        bf = measures.load_distribution(_load_text(args.dist))
        parsed = parse_formula(args.formula)
        value = measures.b_eval(bf, parsed.ast)
        return CommandReport("ok", [fmt_number(value)])

    if cmd == "cond":
        bf = measures.load_distribution(_load_text(args.dist))
        table: dict = {}
        b = parse_formula(args.b, table).ast
        c = parse_formula(args.c, table).ast
        value = measures.conditional_prob(bf, b, c)
        return CommandReport("ok", [fmt_number(value)])

    if cmd == "bernoulli":
        r = args.r
        ks = range(r + 1) if args.k is None else [args.k]
        if args.k is not None and not 0 <= args.k <= r:
            return CommandReport("error", [f"error: k outside 0..{r}"])
        lines = []
        for k in ks:
            value = trials.point_prob(r, k, args.p)
            lines.append(f"{k:<4d} {fmt_rational(value):<24} {fmt_decimal(value)}")
        return CommandReport("ok", lines)

    if cmd == "lln":
        bound = trials.lln_bound(args.r, args.p, args.eps)
        exact = trials.range_prob(
            args.r, args.r * (args.p - args.eps), args.r * (args.p + args.eps),
            args.p)
        if args.trials:
            ts = trials.TestSequence.of(args.r, args.p)
            freqs = trials.simulate_frequencies(ts, args.trials, args.seed)
            hits = sum(1 for f in freqs if abs(f - args.p) <= args.eps)
            coverage = fmt_rational(Fraction(hits, args.trials))
            trial_text = str(args.trials)
        else:
            coverage = "-"
            trial_text = "-"
        return CommandReport("ok", [
            f"{args.r} {fmt_rational(bound)} {fmt_rational(exact)} "
            f"{coverage} {trial_text} {args.seed}"])

    if cmd == "classical":
        table: dict = {}
        members = []
        for raw in _load_text(args.set_file).splitlines():
            if raw.strip():
                members.append(parse_formula(raw.strip(), table).ast)
        event = parse_formula(args.event, table).ast
        value = classical_mod.classical_probability(event, members)
        favorable = int(value * len(members))
        return CommandReport("ok", [
            f"{favorable} {len(members)} {fmt_rational(value)}"])

    # qnum subcommands
    qcmd = args.qcommand
    if qcmd == "filter":
        verdict = density.filter_membership(
            _parse_index_set(args.set), args.horizon)
        return CommandReport("ok", [str(verdict)])
    if qcmd == "freq":
        value = density.part_frequency(_parse_index_set(args.set), args.n)
        return CommandReport("ok", [fmt_number(value)])
    if qcmd == "classify":
        result = qnumbers.q_classify(_parse_seq(args.seq), args.horizon)
        return CommandReport("ok", [str(result)])
    if qcmd in ("eq", "lt"):
        left, right = _split_specs(args.specs)
        x = _parse_seq(left)
        y = _parse_seq(right)
        fn = qnumbers.q_equal if qcmd == "eq" else qnumbers.q_less
        return CommandReport("ok", [str(fn(x, y, args.horizon))])

    raise AssertionError(f"unhandled command {cmd}")


def main(argv: list[str] | None = None) -> int:
    report = run(sys.argv[1:] if argv is None else argv)
    for line in report.lines:
        print(line)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
