"""Command-line front end.

Exit codes: 0 reduced or solved, 1 verdict NO, 2 input error,
3 resource limit, 4 ``verify`` found a disagreement.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ParseError, ResourceLimitError
from .generate import generate_instance
from .graph import Graph, relabel_dense
from .io import FORMATS, emit_trace, guess_format, parse_instance, serialize_graph
from .obstructions import find_any_hole, find_small_obstruction
from .recognition import proper_interval_ordering
from .rules import Instance, kernelize
from .solver import brute_force_solve, solve

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_LIMIT, EXIT_MISMATCH = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _read(args) -> tuple[Graph, int | None, str]:
    fmt = args.format or (guess_format(args.input) if args.input != "-" else "edgelist")
    if args.input == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            data = Path(args.input).read_bytes()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    g, k = parse_instance(data, fmt)
    if getattr(args, "k", None) is not None:
        k = args.k
    return g, k, fmt


def _need_k(k: int | None) -> int:
    if k is None:
        raise InputError("no budget: pass -k or put a k header in the file")
    if k < 0:
        raise InputError("budget must be non-negative")
    return k


def _write(args, payload: bytes) -> None:
    if args.output:
        Path(args.output).write_bytes(payload)
    else:
        sys.stdout.buffer.write(payload)


def _solver(name: str):
    return brute_force_solve if name == "brute" else solve


def _fmt_set(s) -> str:
    return " ".join(map(str, sorted(s)))


def cmd_kernelize(args) -> int:
    g, k, fmt = _read(args)
    out = kernelize(Instance(g, _need_k(k)))
    kernel = out.instance
    _, mapping = relabel_dense(kernel.graph)
    out_fmt = args.out_format or fmt
    _write(args, serialize_graph(kernel.graph, out_fmt, k=kernel.k))
    if args.trace:
        Path(args.trace).write_bytes(emit_trace(out.trace, mapping))
    print(
        f"status={out.status} vertices={len(g)}->{len(kernel.graph)} k={k}->{kernel.k} "
        f"steps={len(out.trace)}",
        file=sys.stderr,
    )
    return EXIT_NO if out.status == "no" else EXIT_OK


def cmd_solve(args) -> int:
    g, k, _ = _read(args)
    budget = args.budget_cap if k is None else _need_k(k)
    sol = _solver(args.oracle)(g, budget)
    if not sol.feasible:
        print(f"infeasible with budget {budget}")
        return EXIT_NO
    print(f"deletion set ({len(sol.deletion_set)}): {_fmt_set(sol.deletion_set)}")
    return EXIT_OK


def cmd_recognize(args) -> int:
    g, _, _ = _read(args)
    sigma = proper_interval_ordering(g)
    if sigma is not None:
        print("proper interval: yes")
        print(f"ordering: {' '.join(map(str, sigma.order))}")
        return EXIT_OK
    obs = find_small_obstruction(g) or find_any_hole(g)
    print("proper interval: no")
    print(f"obstruction: {obs.kind} {' '.join(map(str, obs.vertices))}")
    return EXIT_NO


def cmd_gen(args) -> int:
    if args.n < 1:
        raise InputError("-n must be at least 1")
    inst = generate_instance(args.n, args.k_noise, args.seed)
    _write(args, serialize_graph(inst.graph, args.format or "edgelist", k=inst.k))
    return EXIT_OK


def cmd_verify(args) -> int:
    g, k, _ = _read(args)
    k = _need_k(k)
    run = _solver(args.oracle)
    out = kernelize(Instance(g, k))
    before = run(g, k).feasible
    if out.status == "yes":
        after = True
    elif out.status == "no":
        after = False
    else:
        after = run(out.instance.graph, out.instance.k).feasible
    print(
        f"original={'YES' if before else 'NO'} kernel={'YES' if after else 'NO'} "
        f"status={out.status} vertices={len(g)}->{len(out.instance.graph)}"
    )
    if before != after:
        print("MISMATCH", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK if before else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pivd", description="Proper interval vertex deletion toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def io_args(sp, with_k=True):
        sp.add_argument("--input", default="-", help="input file, '-' for stdin")
        sp.add_argument("--format", choices=FORMATS, help="input format (default: from extension)")
        if with_k:
            sp.add_argument("-k", type=int, help="deletion budget (overrides the file header)")

    sp = sub.add_parser("kernelize", help="reduce an instance to a kernel")
    io_args(sp)
    sp.add_argument("--output", help="kernel output file (default: stdout)")
    sp.add_argument("--out-format", choices=FORMATS, help="output format (default: input format)")
    sp.add_argument("--trace", help="write the reduction trace (JSON lines) here")
    sp.set_defaults(func=cmd_kernelize)

    sp = sub.add_parser("solve", help="find a minimum deletion set")
    io_args(sp)
    sp.add_argument("--budget-cap", type=int, default=10, help="budget used when no k is given")
    sp.add_argument("--oracle", choices=("branch", "brute"), default="branch")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("recognize", help="test for a proper interval graph")
    io_args(sp, with_k=False)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("gen", help="generate a random instance")
    sp.add_argument("-n", type=int, required=True, help="proper interval part size")
    sp.add_argument("--k-noise", type=int, default=0, help="noise vertices, also the budget")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=FORMATS)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="compare solver answers on an instance and its kernel")
    io_args(sp)
    sp.add_argument("--oracle", choices=("branch", "brute"), default="branch")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
