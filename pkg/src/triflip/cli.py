"""Command-line interface: ``triflip <command> ...``.

Every machine-readable output line starts with a fixed keyword.  Exit
codes: 0 success, 1 invalid input, 2 usage error, 3 a bound or audit
violation.  ``-`` stands for stdin/stdout wherever a file is accepted.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from . import oracle
from .canonicalize import (canonical_budget, distance_budget,
                           flip_distance_via_canonical, is_canonical,
                           to_canonical)
from .embedding import FlipSequence, canonical_code, deserialize, serialize
from .errors import AuditFailure, BoundViolation, TriangulationError
from .four_connect import flip_bound, make_4_connected
from .generators import (RNG_NAME, gen_canonical, gen_random, gen_sierpinski,
                         gen_stacked)
from .hamiltonian import hamiltonian_cycle_through, validate_decomposition
from .septri import scan

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class _Violation(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load(path):
    return deserialize(_read(path))


def _emit(lines):
    sys.stdout.write("".join(line + "\n" for line in lines))


def _dot(args, tri):
    if getattr(args, "dot", None):
        _write(args.dot, tri.to_dot())


# -- commands ----------------------------------------------------------

def cmd_gen(args):
    kind = args.kind
    p = args.params
    need = {"canonical": 1, "sierpinski": 1, "random": 2, "stacked": 1}[kind]
    if len(p) != need:
        raise _Usage(f"gen {kind} takes {need} integer parameter(s)")
    if kind == "canonical":
        tri = gen_canonical(p[0])
        meta = f"# gen canonical n {p[0]}"
    elif kind == "sierpinski":
        tri = gen_sierpinski(p[0], args.partial)
        meta = f"# gen sierpinski k {p[0]} partial {args.partial}"
    elif kind == "random":
        tri = gen_random(p[0], p[1], args.seed)
        meta = f"# gen random n {p[0]} steps {p[1]} seed {args.seed} rng {RNG_NAME}"
    else:
        tri = gen_stacked(p[0], args.seed)
        meta = f"# gen stacked n {p[0]} seed {args.seed} rng {RNG_NAME}"
    _write(args.output, meta + "\n" + serialize(tri))
    _dot(args, tri)
    return EXIT_OK


def cmd_analyze(args):
    tri = _load(args.file)
    index = scan(tri)
    hist = Counter(index.depth)
    lines = [f"n {tri.n}", f"m {tri.m}", f"delta {tri.max_degree()}",
             f"septri {len(index)}"]
    lines.extend(f"depth {d} {hist[d]}" for d in sorted(hist))
    ts = index.triangles
    lines.extend("triangle {} {} {} depth {} interior {}".format(
        *t.vertices, index.depth[i], t.size) for i, t in enumerate(ts))
    pairs = index.pairs()
    lines.append(f"contains {len(pairs)}")
    lines.extend("contain {} {} {} > {} {} {}".format(*ts[i].vertices, *ts[j].vertices)
                 for i, j in pairs)
    lines.append(f"fourconnected {'yes' if not index else 'no'}")
    _emit(lines)
    _dot(args, tri)
    return EXIT_OK


def cmd_make4c(args):
    tri = _load(args.file)
    seq, ledger = make_4_connected(tri, audit=args.audit)
    text = seq.to_text()
    if ledger is not None:
        text += "".join(f"# {line}\n" for line in ledger.log_lines())
    _write(args.output, text)
    bound = flip_bound(tri.n)
    _emit([f"flips {len(seq)} bound {bound}"])
    if args.tri_out:
        _write(args.tri_out, serialize(tri))
    _dot(args, tri)
    if len(seq) > bound:
        raise _Violation(f"{len(seq)} flips exceed {bound}")
    return EXIT_OK


def cmd_canon(args):
    tri = _load(args.file)
    delta0 = tri.max_degree()
    seq = to_canonical(tri)
    _write(args.output, seq.to_text())
    bound = canonical_budget(tri.n, delta0)
    _emit([f"flips {len(seq)} bound {bound} delta0 {delta0}"])
    if args.tri_out:
        _write(args.tri_out, serialize(tri))
    _dot(args, tri)
    if tri.n >= 19 and len(seq) > bound:
        raise _Violation(f"{len(seq)} flips exceed {bound}")
    return EXIT_OK


def cmd_distance(args):
    t1, t2 = _load(args.file1), _load(args.file2)
    if args.exact:
        _emit([f"distance {oracle.exact_flip_distance(t1, t2)}"])
        return EXIT_OK
    seq = flip_distance_via_canonical(t1, t2)
    _write(args.output, seq.to_text())
    end = seq.replay(t1.copy())
    if canonical_code(end) != canonical_code(t2):
        raise TriangulationError("composed sequence does not reach the target")
    bound = distance_budget(t1.n)
    _emit([f"flips {len(seq)} bound {bound}"])
    if t1.n >= 19 and len(seq) > bound:
        raise _Violation(f"{len(seq)} flips exceed {bound}")
    return EXIT_OK


def cmd_exactdist(args):
    t1, t2 = _load(args.file1), _load(args.file2)
    _emit([f"distance {oracle.exact_flip_distance(t1, t2)}"])
    return EXIT_OK


def _edge_tokens(edges):
    return " ".join(f"{a}-{b}" for a, b in sorted(edges))


def cmd_hamcycle(args):
    tri = _load(args.file)
    u, v = args.edge
    dec = hamiltonian_cycle_through(tri, u, v)
    if not validate_decomposition(tri, dec):
        raise _Violation("cycle decomposition failed validation")
    _emit(["cycle " + " ".join(map(str, dec.cycle)),
           "inside " + _edge_tokens(dec.inside_edges),
           "outside " + _edge_tokens(dec.outside_edges)])
    return EXIT_OK


def _verify_lemmas(n):
    report = oracle.lemma_suite(n)
    _emit(report.lines() + [f"result {'pass' if report.ok else 'fail'}"])
    if not report.ok:
        raise _Violation(f"{len(report.violations)} lemma violations")


def _verify_bounds(path):
    tri = _load(path)
    n = tri.n
    ok = True
    lines = []
    seq, _ = make_4_connected(tri, audit=True)
    b = flip_bound(n)
    good = len(seq) <= b and not scan(tri)
    ok &= good
    lines.append(f"make4c flips {len(seq)} bound {b} {'pass' if good else 'fail'}")
    if n >= 19:
        delta0 = tri.max_degree()
        seq = to_canonical(tri)
        b = canonical_budget(n, delta0)
        good = len(seq) <= b and is_canonical(tri)
        ok &= good
        lines.append(f"canon flips {len(seq)} bound {b} delta0 {delta0} "
                     f"{'pass' if good else 'fail'}")
    lines.append(f"result {'pass' if ok else 'fail'}")
    _emit(lines)
    if not ok:
        raise _Violation("bound check failed")


def _verify_roundtrip(path):
    text = _read(path)
    tri = deserialize(text)
    again = deserialize(serialize(tri))
    lines = []
    ok = serialize(again) == serialize(tri)
    lines.append(f"serialize {'pass' if ok else 'fail'}")
    work = tri.copy()
    seq, _ = make_4_connected(work)
    parsed = FlipSequence.from_text(seq.to_text())
    back = FlipSequence(b"", [r.reversed() for r in reversed(parsed.records)])
    back.replay(work)
    good = set(work.edges()) == set(tri.edges())
    lines.append(f"fliplog {'pass' if good else 'fail'}")
    ok &= good
    lines.append(f"result {'pass' if ok else 'fail'}")
    _emit(lines)
    if not ok:
        raise _Violation("round trip failed")


def cmd_verify(args):
    if args.what == "lemmas":
        try:
            n = int(args.arg)
        except ValueError:
            raise _Usage("verify lemmas takes an integer") from None
        _verify_lemmas(n)
    elif args.what == "bounds":
        _verify_bounds(args.arg)
    else:
        _verify_roundtrip(args.arg)
    return EXIT_OK


def cmd_lemmas(args):
    _verify_lemmas(args.n)
    return EXIT_OK


def cmd_enumerate(args):
    codes = oracle.enumerate_all(args.n)
    _emit([f"classes {len(codes)}"] + [f"code {c.hex()}" for c in codes])
    return EXIT_OK


# -- wiring ------------------------------------------------------------

class _Usage(Exception):
    pass


def _parser():
    p = argparse.ArgumentParser(prog="triflip",
                                description="Edge flips in planar triangulations.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a triangulation")
    g.add_argument("kind", choices=["canonical", "sierpinski", "random", "stacked"])
    g.add_argument("params", nargs="+", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--partial", type=int, default=0)
    g.add_argument("-o", "--output", default="-")
    g.add_argument("--dot")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="separating triangles and degrees")
    a.add_argument("file", nargs="?", default="-")
    a.add_argument("--dot")
    a.set_defaults(func=cmd_analyze)

    m = sub.add_parser("make4c", help="remove all separating triangles")
    m.add_argument("file", nargs="?", default="-")
    m.add_argument("--audit", action="store_true")
    m.add_argument("-o", "--output", default="-")
    m.add_argument("--tri-out")
    m.add_argument("--dot")
    m.set_defaults(func=cmd_make4c)

    c = sub.add_parser("canon", help="flip a 4-connected triangulation to canonical form")
    c.add_argument("file", nargs="?", default="-")
    c.add_argument("-o", "--output", default="-")
    c.add_argument("--tri-out")
    c.add_argument("--dot")
    c.set_defaults(func=cmd_canon)

    d = sub.add_parser("distance", help="flip sequence between two triangulations")
    d.add_argument("file1")
    d.add_argument("file2")
    d.add_argument("--exact", action="store_true")
    d.add_argument("-o", "--output", default="-")
    d.set_defaults(func=cmd_distance)

    x = sub.add_parser("exactdist", help="exact flip distance (n <= 9)")
    x.add_argument("file1")
    x.add_argument("file2")
    x.set_defaults(func=cmd_exactdist)

    h = sub.add_parser("hamcycle", help="side-separating Hamiltonian cycle")
    h.add_argument("file", nargs="?", default="-")
    h.add_argument("--edge", nargs=2, type=int, required=True, metavar=("A", "B"))
    h.set_defaults(func=cmd_hamcycle)

    v = sub.add_parser("verify", help="lemma, bound and round-trip checks")
    v.add_argument("what", choices=["lemmas", "bounds", "roundtrip"])
    v.add_argument("arg")
    v.set_defaults(func=cmd_verify)

    le = sub.add_parser("lemmas", help="same as verify lemmas N")
    le.add_argument("n", type=int)
    le.set_defaults(func=cmd_lemmas)

    e = sub.add_parser("enumerate", help="all classes on N vertices")
    e.add_argument("n", type=int)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"triflip: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (_Violation, BoundViolation) as exc:
        print(f"violation {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except AuditFailure as exc:
        print(f"violation AuditFailure: {exc}", file=sys.stderr)
        print(exc.dump, file=sys.stderr)
        return EXIT_BOUND
    except (TriangulationError, OSError) as exc:
        print(f"error {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
