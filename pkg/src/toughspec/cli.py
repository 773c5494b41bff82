"""Command-line frontend.

Exit status: 0 on success, 1 when a verification run found violations,
2 on usage, parameter or input-format errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .errors import CapacityError, ToughspecError
from .families import Family, FamilySpec, construct, parse_expression
from .graph6 import iter_records, parse_graph6, write_graph6
from .hamilton import hamiltonian_cycle_through, hamiltonian_path, is_hamiltonian_connected
from .partitions import Partition, coarsest_equitable, quotient
from .spectral import eig_max_small, eigen_report
from .toughness import DEFAULT_CAP, is_t_tough, toughness
from . import verify

CAP_ENV = "TOUGHSPEC_ENUM_CAP"
DEFAULT_PRECISION = 5

CLAIMS = {
    "one-tough": "one-tough",
    "thm1.1": "one-tough",
    "hamiltonian": "hamiltonian",
    "thm1.2": "hamiltonian",
    "t-tough": "t-tough",
    "thm1.3": "t-tough",
    "join-comparison": "join-comparison",
    "lemma2.2": "join-comparison",
    "spectral-bounds": "spectral-bounds",
    "bounds": "spectral-bounds",
    "regular-toughness": "regular-toughness",
    "brouwer-gu": "regular-toughness",
    "forced-cycles": "forced-cycles",
    "cycle-lemmas": "forced-cycles",
}

FAMILY_HELP = """\
graph input (exactly one source):
  --family NAME      a named family with --n/--delta/--t/--c/--s/--parts:
                     complete, matching3, mgraph, extremal1, extremalt,
                     nottough, split, doubleedge, isolatedpair
  --family EXPR      an inline expression: K<n> is a clique, <k>K<n> is k
                     disjoint copies, join:A,B,... and union:A,B,... combine
                     every following term, join(A, union(B, C)) nests.
                     Example: join:K17,3K1
  --file PATH        graph6 file, one graph per line
  (neither)          graph6 lines on standard input
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def env_cap(default):
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw == "":
        return default
    if raw.lower() in ("none", "off", "unlimited"):
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV} must be an integer or 'none', got {raw!r}")


def _add_input(p):
    p.add_argument("--family", help="named family or inline expression")
    p.add_argument("--file", help="graph6 input file")
    for name in ("n", "delta", "t", "c", "s"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--parts", help="comma-separated part sizes for the split family")


def _add_precision(p):
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                   help=f"decimals in numeric output (default {DEFAULT_PRECISION})")


def _graphs(args, stdin):
    """Resolve the single input source into (label, Graph) pairs."""
    if args.family and args.file:
        raise UsageError("give either --family or --file, not both")
    if args.family:
        names = {f.value for f in Family}
        if args.family in names:
            parts = tuple(int(x) for x in args.parts.split(",")) if args.parts else ()
            spec = FamilySpec(args.family, n=args.n, delta=args.delta, t=args.t, c=args.c,
                              s=args.s, parts=parts)
            yield args.family, construct(spec)
        else:
            yield args.family, parse_expression(args.family)
        return
    if args.file:
        with open(args.file, "rb") as fh:
            for lineno, rec in iter_records(fh):
                yield rec.decode("ascii", "replace"), parse_graph6(rec, line=lineno)
        return
    for lineno, rec in iter_records(stdin):
        yield rec.decode("ascii", "replace"), parse_graph6(rec, line=lineno)


def _fmt(x, prec):
    if isinstance(x, Fraction):
        return str(x)
    return f"{x:.{prec}f}"


# -- subcommands ----------------------------------------------------------------

def cmd_construct(args, out, stdin):
    for _, g in _graphs(args, stdin):
        if args.out == "graph6":
            out.write(write_graph6(g).decode("ascii") + "\n")
        elif args.out == "edges":
            out.write(f"{g.n} {g.m}\n")
            for u, v in g.edges():
                out.write(f"{u} {v}\n")
        else:
            for row in g.adj.astype(int):
                out.write("".join(map(str, row)) + "\n")
    return 0


def cmd_spectral(args, out, stdin):
    p = args.precision
    for label, g in _graphs(args, stdin):
        rep = eigen_report(g)
        fields = [f"graph={label}", f"n={g.n}", f"m={g.m}", f"rho={_fmt(rep.rho, p)}"]
        if g.n > 1:
            fields += [f"lambda2={_fmt(rep.lambda2, p)}", f"lambda_n={_fmt(rep.lambda_n, p)}",
                       f"lambda={_fmt(rep.lambda_abs, p)}"]
        out.write(" ".join(fields) + "\n")
        if args.all:
            out.write("eigenvalues=" + ",".join(_fmt(x, p) for x in rep.eigenvalues) + "\n")
    return 0


def cmd_toughness(args, out, stdin):
    cap = env_cap(DEFAULT_CAP) if args.cap is None else (None if args.cap <= 0 else args.cap)
    for label, g in _graphs(args, stdin):
        if args.threshold is not None:
            t = Fraction(args.threshold)
            ok, cut = is_t_tough(g, t, cap=cap)
            line = f"graph={label} t={t} tough={'yes' if ok else 'no'}"
            if not ok:
                line += " cut=" + ",".join(map(str, cut))
        else:
            cert = toughness(g, cap=cap)
            value = "inf" if cert.is_infinite else str(cert.value)
            line = (f"graph={label} toughness={value} witness=" + ",".join(map(str, cert.witness))
                    + f" components={cert.components}")
        out.write(line + "\n")
    return 0


def _edge_list(text):
    edges = []
    for item in text.split(","):
        try:
            u, v = item.split("-")
            edges.append((int(u), int(v)))
        except ValueError:
            raise UsageError(f"bad edge {item!r}; expected u-v")
    return edges


def cmd_hamilton(args, out, stdin):
    for label, g in _graphs(args, stdin):
        if args.connected:
            ok = is_hamiltonian_connected(g)
            out.write(f"graph={label} hamiltonian_connected={'yes' if ok else 'no'}\n")
            continue
        if args.path:
            res = hamiltonian_path(g, *args.path)
            kind = "path"
        else:
            res = hamiltonian_cycle_through(g, _edge_list(args.through) if args.through else [])
            kind = "cycle"
        line = f"graph={label} {kind}=" + (",".join(map(str, res.vertices)) if res else "none")
        out.write(line + "\n")
    return 0


def _parse_partition(text):
    try:
        return Partition(tuple(tuple(int(v) for v in cell.split(",")) for cell in text.split("|")))
    except ValueError:
        raise UsageError(f"bad partition {text!r}; expected cells like 0,1|2,3,4")


def cmd_quotient(args, out, stdin):
    p = args.precision
    for label, g in _graphs(args, stdin):
        pi = _parse_partition(args.partition) if args.partition else coarsest_equitable(g)
        q = quotient(g, pi)
        out.write(f"graph={label} cells={len(pi)} equitable={'yes' if q.equitable else 'no'}"
                  f" eig_max={_fmt(eig_max_small(q.entries), p)}\n")
        out.write("partition=" + "|".join(",".join(map(str, c)) for c in pi.cells) + "\n")
        for row in q.entries:
            out.write(" ".join(str(x) for x in row) + "\n")
    return 0


def _stream_source(args, stdin):
    if args.stream:
        return args.stream
    return stdin


def cmd_verify(args, out, stdin, err):
    claim = CLAIMS[args.claim]
    jobs = args.jobs
    if claim == "one-tough":
        if args.delta is None:
            raise UsageError("one-tough needs --delta")
        rep = verify.verify_one_tough(_stream_source(args, stdin), args.delta, jobs=jobs)
    elif claim == "hamiltonian":
        if args.samples:
            rep = verify.sample_hamiltonian(args.samples, args.seed, n=args.n or 18, jobs=jobs)
        else:
            rep = verify.verify_hamiltonian(_stream_source(args, stdin), jobs=jobs)
    elif claim == "t-tough":
        if args.t is None:
            raise UsageError("t-tough needs --t")
        if args.samples:
            rep = verify.sample_t_tough(args.t, args.samples, args.seed, n=args.n, jobs=jobs)
        else:
            rep = verify.verify_t_tough(_stream_source(args, stdin), args.t, jobs=jobs)
    elif claim == "join-comparison":
        rep = verify.verify_join_comparison(args.trials, args.seed)
    elif claim == "spectral-bounds":
        rep = verify.verify_spectral_bounds(_stream_source(args, stdin), jobs=jobs)
    elif claim == "regular-toughness":
        rep = verify.verify_regular_toughness(_stream_source(args, stdin),
                                              cap=env_cap(DEFAULT_CAP), jobs=jobs)
    else:
        rep = verify.verify_forced_cycles(args.trials, args.seed)

    if args.format == "tsv":
        out.write(rep.to_tsv(args.precision))
        err.write(rep.summary() + "\n")
    elif args.format == "json-lines":
        out.write(rep.to_jsonl())
        err.write(rep.summary() + "\n")
    else:
        out.write(rep.summary() + "\n")
        out.write(f"# runtime {rep.runtime:.2f}s\n")
        recs = rep.records()
        if recs:
            out.write(rep.to_tsv(args.precision))
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(rep.to_jsonl() if args.report.endswith(".jsonl") else rep.to_tsv(args.precision))
    return 1 if rep.violations else 0


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="toughspec", description="Spectral toughness and Hamiltonicity toolkit.",
                  formatter_class=argparse.RawDescriptionHelpFormatter, epilog=FAMILY_HELP)
    top.add_argument("--version", action="version", version=f"toughspec {__version__}")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help_text, epilog=FAMILY_HELP):
        return sub.add_parser(name, help=help_text, description=help_text, epilog=epilog,
                              formatter_class=argparse.RawDescriptionHelpFormatter)

    p = command("construct", "build a graph and print it")
    _add_input(p)
    p.add_argument("--out", choices=("graph6", "edges", "adjacency"), default="graph6")

    p = command("spectral", "spectral radius and extreme eigenvalues")
    _add_input(p)
    _add_precision(p)
    p.add_argument("--all", action="store_true", help="also print every eigenvalue")

    p = command("toughness", "exact toughness with a witness cut set")
    _add_input(p)
    p.add_argument("--threshold", help="decide t-toughness for this rational t instead")
    p.add_argument("--cap", type=int, help=f"enumeration cap (0 = none; env {CAP_ENV})")

    p = command("hamilton", "Hamiltonian cycles, paths and Hamiltonian-connectivity")
    _add_input(p)
    p.add_argument("--through", help="required edges, e.g. 0-1,2-3")
    p.add_argument("--path", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("--connected", action="store_true", help="test Hamiltonian-connectivity")

    p = command("quotient", "quotient matrix of a partition (default: coarsest equitable)")
    _add_input(p)
    _add_precision(p)
    p.add_argument("--partition", help="cells separated by '|', e.g. 0,1|2,3,4")

    p = command("verify", "run a claim harness", epilog=None)
    p.add_argument("claim", choices=sorted(CLAIMS), metavar="CLAIM",
                   help="one of: " + ", ".join(sorted(CLAIMS)))
    p.add_argument("--stream", help="graph6 file (default: standard input)")
    p.add_argument("--delta", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int, help="order for random sampling")
    p.add_argument("--samples", type=int, help="random dense samples instead of a stream")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "tsv", "json-lines"), default="text")
    p.add_argument("--report", help="also write the machine report here (.jsonl for JSON lines)")
    _add_precision(p)
    return top


def run(argv=None, *, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin.buffer
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return cmd_verify(args, out, stdin, err)
        handler = {"construct": cmd_construct, "spectral": cmd_spectral,
                   "toughness": cmd_toughness, "hamilton": cmd_hamilton,
                   "quotient": cmd_quotient}[args.command]
        return handler(args, out, stdin)
    except CapacityError as exc:
        err.write(f"toughspec: {exc} (raise it with --cap or {CAP_ENV})\n")
        return 2
    except (UsageError, ToughspecError, ValueError, OSError) as exc:
        err.write(f"toughspec: {exc}\n")
        return 2


def main():
    sys.exit(run())
