"""``pcgk``: batch command-line front end.

Exit status is 0 on success (including ``false`` answers), 1 on domain
errors and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import lattice, oracle, subgroups as sg, words
from .errors import DomainError
from .graph import load_graph


def _subgroup(graph, arg: str):
    text = arg.strip()
    if not text.startswith("{"):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    return sg.from_json(graph, text)


def _chain(graph, arg: str) -> lattice.CentraliserChain:
    text = arg.strip()
    if not text.startswith("["):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid chain JSON: {exc}") from None
    return lattice.CentraliserChain.from_json(graph, data)


class Out:
    """Collects text lines or a JSON value for one invocation."""

    def __init__(self, graph, as_json: bool):
        self.graph = graph
        self.as_json = as_json

    def emit(self, text, data):
        if self.as_json:
            print(json.dumps(data, ensure_ascii=False))
        else:
            print(text)

    def word(self, w):
        self.emit(str(w), str(w))

    def boolean(self, b: bool):
        self.emit("true" if b else "false", bool(b))

    def vset(self, S):
        self.emit(self.graph.format_set(S), self.graph.sorted(S))

    def subgroup(self, H):
        self.emit(str(H), sg.to_json(H))

    def chain(self, entries):
        entries = list(entries)
        self.emit("\n".join(str(H) for H in entries), [sg.to_json(H) for H in entries])

    def words(self, ws):
        ws = sorted(ws)
        self.emit("\n".join(map(str, ws)), [str(w) for w in ws])


def _cmd(args, graph, out: Out):
    el = graph.element
    cmd = args.command
    if cmd == "nf":
        out.word(el(args.word))
    elif cmd == "eq":
        out.boolean(words.equal(el(args.u), el(args.w)))
    elif cmd == "len":
        n = words.length(el(args.word))
        out.emit(str(n), n)
    elif cmd == "alpha":
        out.vset(words.alpha(el(args.word)))
    elif cmd == "gd":
        Y = [y for y in args.set.split(",") if y]
        d, rest = words.greatest_divisor(el(args.word), Y, args.side)
        out.emit(f"d={d}; rest={rest}", {"d": str(d), "rest": str(rest)})
    elif cmd == "divides":
        out.boolean(words.divides(el(args.u), el(args.w), args.side))
    elif cmd == "cyclred":
        u, v = words.cyclic_reduce(el(args.word))
        out.emit(f"u={u}; v={v}", {"u": str(u), "v": str(v)})
    elif cmd == "shifts":
        out.words(words.cyclic_shifts(el(args.word)))
    elif cmd == "blocks":
        u, blocks = words.block_decomposition(el(args.word))
        text = f"u={u}; blocks=[{', '.join(map(str, blocks))}]"
        out.emit(text, {"u": str(u), "blocks": [str(b) for b in blocks]})
    elif cmd == "root":
        r, n = words.root(el(args.word))
        out.emit(f"r={r}; n={n}", {"r": str(r), "n": n})
    elif cmd == "conjdec":
        dec = words.conjugate_decompose(el(args.word), el(args.conjugator))
        parts = dec.as_dict()
        out.emit("; ".join(f"{k}={v}" for k, v in parts.items()), {k: str(v) for k, v in parts.items()})
    elif cmd == "cent":
        out.subgroup(sg.centraliser_of_element(el(args.word)))
    elif cmd == "centset":
        out.subgroup(sg.centraliser_of_set([el(w) for w in args.words], graph))
    elif cmd == "meet":
        out.subgroup(sg.meet(_subgroup(graph, args.h1), _subgroup(graph, args.h2)))
    elif cmd == "join":
        out.subgroup(sg.parabolic_join(_subgroup(graph, args.h1), _subgroup(graph, args.h2)))
    elif cmd == "member":
        out.boolean(sg.contains(_subgroup(graph, args.h), el(args.word)))
    elif cmd == "subeq":
        out.boolean(sg.subgroup_equal(_subgroup(graph, args.h), _subgroup(graph, args.k)))
    elif cmd == "rank":
        r = sg.rank(_subgroup(graph, args.h))
        out.emit(f"({r.zsize}, {r.kblocks})", list(r))
    elif cmd == "is-centraliser":
        out.boolean(sg.is_centraliser(_subgroup(graph, args.h)))
    elif cmd == "present":
        S = sg.present_as_centraliser(_subgroup(graph, args.h))
        out.emit("\n".join(map(str, S)), [str(s) for s in S])
    elif cmd == "closed-sets":
        L = graph.closed_sets
        out.emit("\n".join(graph.format_set(S) for S in L), [graph.sorted(S) for S in L])
    elif cmd == "height":
        h = graph.closed_sets.height
        out.emit(str(h), h)
    elif cmd == "cheight":
        h = lattice.centraliser_lattice_height(graph)
        witness = lattice.witness_chain(graph)
        lines = [str(h), "witness: " + " > ".join(str(H) for H in witness)]
        data = {"height": h, "witness": witness.to_json()}
        if args.max_chains > 0:
            res = lattice.search_longer_chain(graph, args.max_chains, args.seed, args.radius or 3)
            lines.append(f"search: {res.sampled} chains sampled, longest {res.length}")
            data["search"] = {"sampled": res.sampled, "longest": res.length}
        out.emit("\n".join(lines), data)
    elif cmd == "witness-chain":
        out.chain(lattice.witness_chain(graph))
    elif cmd == "parabolicize":
        out.chain(lattice.parabolicize_chain(_chain(graph, args.chain)))
    elif cmd == "verify-chain":
        out.boolean(lattice.verify_chain(_chain(graph, args.chain)))
    elif cmd == "oracle":
        _oracle(args, graph, out)
    else:  # pragma: no cover - argparse rejects unknown commands
        raise AssertionError(cmd)


def _oracle(args, graph, out: Out):
    sub = args.oracle_command
    radius = 2 if args.radius is None else args.radius
    if sub == "ball":
        out.words(oracle.ball(graph, radius).elements)
    elif sub == "nf":
        out.word(words.GroupElement(graph, oracle.brute_nf(graph, args.word)))
    elif sub == "eq":
        out.boolean(oracle.brute_equal(graph, args.u, args.w))
    elif sub == "cent":
        out.words(oracle.brute_centraliser(graph, args.words, radius))
    elif sub == "closed-sets":
        sets = sorted(oracle.brute_closed_sets(graph), key=lambda S: (-len(S), graph.sort_key(S)))
        out.emit("\n".join(graph.format_set(S) for S in sets), [graph.sorted(S) for S in sets])
    elif sub == "root":
        r, n = oracle.brute_root(graph, args.word)
        out.emit(f"r={r}; n={n}", {"r": str(r), "n": n})
    elif sub == "divisors":
        out.words(oracle.brute_divisors(graph, args.word, args.side))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pcgk", description="Computations in partially commutative groups.")
    p.add_argument("-g", "--graph", required=True, help="graph file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    p.add_argument("--radius", type=int, default=None, help="ball radius for oracle and chain search")
    p.add_argument("--max-chains", type=int, default=10_000, help="chains sampled by cheight (0 disables)")
    # the same options are accepted after the subcommand
    late = argparse.ArgumentParser(add_help=False)
    late.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    late.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    late.add_argument("--radius", type=int, default=argparse.SUPPRESS)
    late.add_argument("--max-chains", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def cmd(name, *params, help=None):
        sp = sub.add_parser(name, help=help, parents=[late])
        for prm in params:
            sp.add_argument(prm)
        return sp

    cmd("nf", "word", help="canonical form")
    cmd("eq", "u", "w", help="word problem")
    cmd("len", "word", help="geodesic length")
    cmd("alpha", "word", help="support")
    sp = cmd("gd", "word", help="greatest divisor in G(Y)")
    sp.add_argument("--side", choices=["l", "r", "left", "right"], default="l")
    sp.add_argument("--set", required=True, help="comma-separated vertices")
    sp = cmd("divides", "u", "w", help="divisibility")
    sp.add_argument("--side", choices=["l", "r", "left", "right"], default="l")
    cmd("cyclred", "word", help="w = u^-1∘v∘u with v cyclically minimal")
    cmd("shifts", "word", help="cyclic shifts of a cyclically minimal word")
    cmd("blocks", "word", help="block decomposition")
    cmd("root", "word", help="root and exponent")
    cmd("conjdec", "word", "conjugator", help="decomposition of w^g")
    cmd("cent", "word", help="centraliser of an element")
    sp = sub.add_parser("centset", help="centraliser of a finite set", parents=[late])
    sp.add_argument("words", nargs="*")
    cmd("meet", "h1", "h2", help="intersection of subgroups")
    cmd("join", "h1", "h2", help="join of canonical parabolic centralisers")
    cmd("member", "h", "word", help="membership")
    cmd("subeq", "h", "k", help="subgroup equality")
    cmd("rank", "h", help="rank (|Z|, k)")
    cmd("is-centraliser", "h", help="centraliser criterion")
    cmd("present", "h", help="a finite set whose centraliser is h")
    cmd("closed-sets", help="lattice of closed sets")
    cmd("height", help="height of the closed-set lattice")
    cmd("cheight", help="height of the centraliser lattice with evidence")
    cmd("witness-chain", help="longest chain of parabolic centralisers")
    cmd("parabolicize", "chain", help="parabolic chain at least as long")
    cmd("verify-chain", "chain", help="check a chain of centralisers")

    op = sub.add_parser("oracle", help="brute-force ground truth", parents=[late])
    osub = op.add_subparsers(dest="oracle_command", required=True, metavar="SUB")
    osub.add_parser("ball", parents=[late])
    osub.add_parser("nf", parents=[late]).add_argument("word")
    o = osub.add_parser("eq", parents=[late])
    o.add_argument("u")
    o.add_argument("w")
    osub.add_parser("cent", parents=[late]).add_argument("words", nargs="*")
    osub.add_parser("closed-sets", parents=[late])
    osub.add_parser("root", parents=[late]).add_argument("word")
    o = osub.add_parser("divisors", parents=[late])
    o.add_argument("word")
    o.add_argument("--side", choices=["l", "r", "left", "right"], default="l")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        graph = load_graph(args.graph)
        _cmd(args, graph, Out(graph, args.json))
    except (DomainError, OSError) as exc:
        print(f"pcgk: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
