"""Command-line front end: file ingestion, constructions, DOT export, and
the corpus verification harness.

Exit codes: 0 all pass / success, 1 any FAIL, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import itertools
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import theorems
from .language import format_automaton, minimal_dfa
from .loops import cayley_dot, cayley_graph, loop_automaton, loop_automaton_dot
from .semigroup import (
    FiniteSemigroup,
    GeneratorMap,
    NAMED_SEMIGROUPS,
    ParseError,
    SandwichMatrix,
    SemigroupError,
    ZERO,
    adjoin_identity,
    adjoin_zero,
    all_ideals,
    enumerate_semigroups,
    format_semigroup,
    full_generator_map,
    generator_map,
    idempotents,
    is_completely_zero_simple,
    is_ideal,
    is_pseudo_right_unitary,
    is_right_unitary,
    is_subsemigroup,
    is_weakly_pru,
    lift_to_monoid,
    maximal_subgroup,
    parse_semigroup_text,
    rees_matrix,
    rees_quotient,
    sandwich,
)

VERIFY_TAGS = ("rees-quotient", "subsemigroup", "remove-zero", "adjoin-zero",
               "semitorees", "semitoreeszero", "unit-sandwich", "czeros",
               "decompose-roundtrip")


@dataclass(frozen=True)
class ReesSpec:
    """Parsed Rees construction spec file."""

    base: FiniteSemigroup
    i_count: int
    j_count: int
    with_zero: bool
    matrix: SandwichMatrix


def parse_rees_spec(text: str, directory: Path) -> ReesSpec:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    base = None
    i_count = j_count = None
    with_zero = False
    matrix_rows: list[list[str]] = []
    in_matrix = False
    for no, ln in lines:
        toks = ln.split()
        if in_matrix:
            matrix_rows.append(toks)
            continue
        if toks[0] == "base":
            path = directory / " ".join(toks[1:])
            try:
                base = parse_semigroup_text(path.read_text())
            except OSError as e:
                raise ParseError(f"cannot read base table: {e}", no) from None
        elif toks[0] == "i":
            i_count = int(toks[1])
        elif toks[0] == "j":
            j_count = int(toks[1])
        elif toks[0] == "zero":
            with_zero = toks[1].lower() in ("true", "yes", "1")
        elif toks[0] == "matrix":
            in_matrix = True
        else:
            raise ParseError(f"unexpected line {ln!r}", no)
    if base is None or i_count is None or j_count is None:
        raise ParseError("spec needs base, i, j and matrix lines", 1)
    if len(matrix_rows) != j_count or any(len(r) != i_count for r in matrix_rows):
        raise ParseError(f"matrix must have {j_count} rows of {i_count} entries",
                         lines[-1][0])
    entries = []
    for row in matrix_rows:
        out = []
        for tok in row:
            if tok == "0" and (with_zero or "0" not in base.labels):
                out.append(ZERO)
            else:
                out.append(base.index(tok))
        entries.append(out)
    return ReesSpec(base, i_count, j_count, with_zero, sandwich(entries))


def format_rees_spec(spec: ReesSpec, base_path: str) -> str:
    lines = [f"base {base_path}", f"i {spec.i_count}", f"j {spec.j_count}",
             f"zero {'true' if spec.with_zero else 'false'}", "matrix"]
    for row in spec.matrix.entries:
        lines.append(" ".join("0" if v is None else spec.base.labels[v] for v in row))
    return "\n".join(lines) + "\n"


def _load_table(path: str) -> FiniteSemigroup:
    return parse_semigroup_text(Path(path).read_text())


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- corpus instances ----------------------------------------------------------

def _sandwiches(base: FiniteSemigroup, i_count: int, j_count: int,
                allow_zero: bool):
    opts = list(range(base.order)) + ([ZERO] if allow_zero else [])
    for ents in itertools.product(opts, repeat=i_count * j_count):
        rows = [ents[r * i_count:(r + 1) * i_count] for r in range(j_count)]
        yield sandwich(rows)


def _sandwich_id(base: FiniteSemigroup, p: SandwichMatrix) -> str:
    return ";".join(",".join("0" if v is None else base.labels[v] for v in row)
                    for row in p.entries)


def _sizes(imax: int, jmax: int):
    return [(i, j) for i in range(1, imax + 1) for j in range(1, jmax + 1)]


def iter_instances(tag: str, max_order: int = 3, bases=("trivial", "c2", "c3"),
                   imax: int = 2, jmax: int = 2, seed: int = 0):
    """Yield (instance_id, callable) pairs for one theorem tag.  The
    callables close over constructed values only; they are executed by the
    harness, possibly in worker processes."""
    if tag == "rees-quotient":
        for n in range(1, max_order + 1):
            for k, s in enumerate(enumerate_semigroups(n)):
                gmap = full_generator_map(s)
                for t in all_ideals(s):
                    iid = f"n{n}i{k}:T=" + ".".join(s.labels[v] for v in sorted(t))
                    yield iid, _Job("rees-quotient", (s, gmap, t))
    elif tag == "subsemigroup":
        for n in range(1, max_order + 1):
            for k, s in enumerate(enumerate_semigroups(n)):
                tau = full_generator_map(s)
                for r in range(1, n + 1):
                    for sub in itertools.combinations(range(n), r):
                        tset = frozenset(sub)
                        if not is_subsemigroup(s, tset):
                            continue
                        if not is_weakly_pru(s, tset):
                            continue
                        labels = tuple(s.labels[v] for v in sorted(tset))
                        iid = f"n{n}i{k}:T=" + ".".join(labels)
                        yield iid, _Job("subsemigroup", (s, tau, tset, labels))
    elif tag == "remove-zero":
        for n in range(1, max_order + 1):
            for k, s in enumerate(enumerate_semigroups(n)):
                tau = theorems.extend_to_zero(full_generator_map(s))
                tset = frozenset(range(s.order))
                labels = tau.alphabet[:-1]
                yield f"n{n}i{k}", _Job("subsemigroup", (tau.target, tau, tset, labels),
                                        tag_override="remove-zero")
    elif tag == "adjoin-zero":
        for n in range(1, max_order + 1):
            for k, s in enumerate(enumerate_semigroups(n)):
                yield f"n{n}i{k}", _Job("adjoin-zero", (s, full_generator_map(s)))
    elif tag == "semitorees":
        rng = random.Random(seed)
        for name in bases:
            s = NAMED_SEMIGROUPS[name]()
            gmap = full_generator_map(s)
            rerun_done = False
            for (ic, jc) in _sizes(imax, jmax):
                for p in _sandwiches(s, ic, jc, allow_zero=False):
                    iid = f"{name}:I{ic}J{jc}:P={_sandwich_id(s, p)}"
                    yield iid, _Job("semitorees", (s, gmap, ic, jc, p, None))
                    if not rerun_done and (ic, jc) == (imax, jmax):
                        # one randomized-representative rerun per base semigroup
                        yield iid + ":randomrep", _Job(
                            "semitorees", (s, gmap, ic, jc, p, rng.randrange(2 ** 30)))
                        rerun_done = True
    elif tag == "semitoreeszero":
        for name in bases:
            s = NAMED_SEMIGROUPS[name]()
            gmap = full_generator_map(s)
            for (ic, jc) in _sizes(imax, jmax):
                for p in _sandwiches(s, ic, jc, allow_zero=True):
                    iid = f"{name}:I{ic}J{jc}:P={_sandwich_id(s, p)}"
                    yield iid, _Job("semitoreeszero", (s, gmap, ic, jc, p))
    elif tag == "unit-sandwich":
        for name in bases:
            s = NAMED_SEMIGROUPS[name]()
            gmap = full_generator_map(s)
            for (ic, jc) in _sizes(imax, jmax):
                for p in _sandwiches(s, ic, jc, allow_zero=True):
                    if not any(v is not None for row in p.entries for v in row):
                        continue
                    iid = f"{name}:I{ic}J{jc}:P={_sandwich_id(s, p)}"
                    yield iid, _Job("unit-sandwich", (s, gmap, ic, jc, p))
    elif tag == "czeros":
        for name in ("b2",):
            s = NAMED_SEMIGROUPS[name]()
            yield name, _Job("czeros", (s, full_generator_map(s)))
        for name in ("c2", "c3"):
            s = adjoin_zero(NAMED_SEMIGROUPS[name]())
            yield f"{name}0", _Job("czeros", (s, full_generator_map(s)))
        c2 = NAMED_SEMIGROUPS["c2"]()
        for p in _sandwiches(c2, imax, jmax, allow_zero=True):
            if not p.regular:
                continue
            m0, _ = rees_matrix(c2, imax, jmax, p, with_zero=True)
            iid = f"c2:I{imax}J{jmax}:P={_sandwich_id(c2, p)}"
            yield iid, _Job("czeros", (m0, full_generator_map(m0)))
    elif tag == "decompose-roundtrip":
        c2 = NAMED_SEMIGROUPS["c2"]()
        for p in _sandwiches(c2, imax, jmax, allow_zero=True):
            if not p.regular:
                continue
            m0, _ = rees_matrix(c2, imax, jmax, p, with_zero=True)
            iid = f"c2:I{imax}J{jmax}:P={_sandwich_id(c2, p)}"
            yield iid, _Job("decompose-roundtrip", (m0, c2))
    else:
        raise ValueError(f"unknown theorem tag {tag!r}")


@dataclass(frozen=True)
class _Job:
    kind: str
    payload: tuple
    tag_override: str | None = None


def run_job(item: tuple[str, _Job]):
    """Execute one corpus instance; top-level so worker processes can run it."""
    iid, job = item
    kind = job.kind
    if kind == "rees-quotient":
        s, gmap, t = job.payload
        rep = theorems.verify_rees_quotient(s, gmap, t)
    elif kind == "subsemigroup":
        s, tau, tset, labels = job.payload
        rep = theorems.verify_subsemigroup_intersection(s, tau, tset, labels)
    elif kind == "adjoin-zero":
        s, gmap = job.payload
        rep = theorems.verify_adjoin_zero(s, gmap)
    elif kind == "semitorees":
        s, gmap, ic, jc, p, rng_seed = job.payload
        rng = random.Random(rng_seed) if rng_seed is not None else None
        rep = theorems.verify_semitorees(s, gmap, ic, jc, p, rng=rng)
    elif kind == "semitoreeszero":
        s, gmap, ic, jc, p = job.payload
        rep = theorems.verify_semitoreeszero(s, gmap, ic, jc, p)
    elif kind == "unit-sandwich":
        s, gmap, ic, jc, p = job.payload
        rep = theorems.verify_unit_sandwich(s, gmap, ic, jc, p)
    elif kind == "czeros":
        s, gmap = job.payload
        rep = theorems.verify_czeros(s, gmap)
    elif kind == "decompose-roundtrip":
        m0, group = job.payload
        holds = True
        try:
            dec = theorems.rees_decompose(m0)
            from .semigroup import are_isomorphic
            holds = are_isomorphic(dec.group, group)
        except (SemigroupError, theorems.InternalError):
            holds = False
        line = f"RESULT decompose-roundtrip {iid} {'PASS' if holds else 'FAIL'}"
        return iid, holds, line
    else:  # pragma: no cover
        raise ValueError(kind)
    tag = job.tag_override or rep.tag
    line = theorems.result_line(rep, iid)
    if job.tag_override:
        line = line.replace(f"RESULT {rep.tag} ", f"RESULT {tag} ", 1)
    return iid, rep.holds, line


def worker_count() -> int:
    raw = os.environ.get("REES_LOOP_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_corpus(instances, stream=None) -> int:
    """Run instances (any iterable of (id, job)), print RESULT lines sorted
    by instance id, return the count of failures."""
    stream = stream or sys.stdout
    items = sorted(instances, key=lambda kv: kv[0])
    workers = worker_count()
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_job, items, chunksize=4))
    else:
        results = [run_job(item) for item in items]
    results.sort(key=lambda r: r[0])
    failures = 0
    for _iid, holds, line in results:
        stream.write(line + "\n")
        failures += not holds
    return failures


# -- subcommands ---------------------------------------------------------------

def cmd_info(args) -> int:
    s = _load_table(args.table)
    ids = sorted(idempotents(s))
    lines = [f"order {s.order}",
             f"idempotents {len(ids)}: " + " ".join(s.labels[e] for e in ids),
             f"zero {s.labels[s.zero] if s.zero is not None else '-'}",
             f"identity {s.labels[s.identity] if s.identity is not None else '-'}",
             f"ideals {len(all_ideals(s))}"]
    if s.zero is None:
        lines.append("completely zero-simple: no designated zero")
    elif is_completely_zero_simple(s):
        ids_nz = [e for e in ids if e != s.zero]
        grp, _ = maximal_subgroup(s, ids_nz[0])
        lines.append(f"completely zero-simple: yes, max subgroup order {grp.order}")
    else:
        lines.append("completely zero-simple: no")
    print("\n".join(lines))
    return 0


def _gen_map(s: FiniteSemigroup, labels) -> GeneratorMap:
    if not labels:
        return full_generator_map(s)
    return generator_map(s, labels)


def cmd_loop(args) -> int:
    s = _load_table(args.table)
    gmap = _gen_map(s, args.generators)
    la = loop_automaton(gmap)
    if args.dot:
        Path(args.dot).write_text(loop_automaton_dot(la))
    _emit(format_automaton(minimal_dfa(la.nfa)), args.output)
    return 0


def cmd_cayley(args) -> int:
    s = _load_table(args.table)
    gmap = _gen_map(s, args.generators)
    if args.monoid:
        if s.identity is None:
            raise SemigroupError("--monoid needs a designated identity")
        gmap = GeneratorMap(gmap.alphabet, s, gmap.image, monoid=True)
    else:
        gmap = lift_to_monoid(gmap)
    dot = cayley_dot(cayley_graph(gmap))
    if args.dot:
        Path(args.dot).write_text(dot)
        return 0
    _emit(dot, args.output)
    return 0


def cmd_rees(args) -> int:
    spec = parse_rees_spec(Path(args.spec).read_text(), Path(args.spec).parent)
    m, _rs = rees_matrix(spec.base, spec.i_count, spec.j_count, spec.matrix,
                         spec.with_zero)
    _emit(format_semigroup(m), args.output)
    return 0


def cmd_quotient(args) -> int:
    s = _load_table(args.table)
    t = frozenset(s.index(lab) for lab in args.ideal)
    q, _proj = rees_quotient(s, t)
    _emit(format_semigroup(q), args.output)
    return 0


def cmd_adjoin_zero(args) -> int:
    _emit(format_semigroup(adjoin_zero(_load_table(args.table))), args.output)
    return 0


def cmd_adjoin_identity(args) -> int:
    _emit(format_semigroup(adjoin_identity(_load_table(args.table))), args.output)
    return 0


def cmd_check_ideal(args) -> int:
    s = _load_table(args.table)
    t = frozenset(s.index(lab) for lab in args.subset)
    ok = is_ideal(s, t)
    print("ideal" if ok else "not an ideal")
    return 0 if ok else 1


def cmd_check_pru(args) -> int:
    s = _load_table(args.table)
    t = frozenset(s.index(lab) for lab in args.subset)
    ru = is_right_unitary(s, t)
    pru = is_pseudo_right_unitary(s, t)
    wpru = is_weakly_pru(s, t)
    print(f"right-unitary {ru}")
    print(f"pseudo-right-unitary {pru}")
    print(f"weakly-pseudo-right-unitary {wpru}")
    return 0 if wpru else 1


def cmd_decompose(args) -> int:
    s = _load_table(args.table)
    dec = theorems.rees_decompose(s)
    print(f"group order {dec.group.order}")
    print(f"i {dec.i_count}")
    print(f"j {dec.j_count}")
    print("matrix")
    for row in dec.sandwich.entries:
        print(" ".join("0" if v is None else dec.group.labels[v] for v in row))
    print("group table:")
    sys.stdout.write(format_semigroup(dec.group))
    return 0


DEFAULT_BASES = {
    "semitoreeszero": ("trivial", "c2"),
    "unit-sandwich": ("c2", "c3"),
}


def cmd_verify(args) -> int:
    bases = tuple(args.base) if args.base else \
        DEFAULT_BASES.get(args.tag, ("trivial", "c2", "c3"))
    instances = iter_instances(args.tag, max_order=args.max_order, bases=bases,
                               imax=args.imax, jmax=args.jmax, seed=args.seed)
    failures = run_corpus(instances)
    print(f"{'PASS' if failures == 0 else 'FAIL'} ({args.tag})")
    return 0 if failures == 0 else 1


def cmd_corpus(args) -> int:
    total_failures = 0
    for tag in VERIFY_TAGS:
        bases = DEFAULT_BASES.get(tag, ("trivial", "c2", "c3"))
        instances = iter_instances(tag, max_order=args.max_order, bases=bases,
                                   imax=args.imax, jmax=args.jmax, seed=args.seed)
        total_failures += run_corpus(instances)
    print("PASS" if total_failures == 0 else f"FAIL ({total_failures} instances)")
    return 0 if total_failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="reesloop",
        description="Loop problems of finite semigroups and Rees matrix constructions")
    sub = ap.add_subparsers(dest="command", required=True)

    def table_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("table", help="semigroup table file")
        p.add_argument("-o", "--output", help="output file (default stdout)")
        p.set_defaults(fn=fn)
        return p

    p = sub.add_parser("info", help="summarize a semigroup table file")
    p.add_argument("table")
    p.set_defaults(fn=cmd_info)

    p = table_cmd("loop", cmd_loop, "minimal DFA of the loop problem")
    p.add_argument("generators", nargs="*", metavar="LABEL",
                   help="generator element labels (default: all elements)")
    p.add_argument("--dot", help="also write the loop automaton as DOT")

    p = table_cmd("cayley", cmd_cayley, "Cayley graph DOT export")
    p.add_argument("generators", nargs="*", metavar="LABEL")
    p.add_argument("--monoid", action="store_true",
                   help="use the designated identity instead of adjoining one")
    p.add_argument("--dot", help="write the DOT graph to a file")

    p = sub.add_parser("rees", help="build a Rees matrix semigroup from a spec file")
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_rees)

    p = table_cmd("quotient", cmd_quotient, "Rees quotient by an ideal")
    p.add_argument("ideal", nargs="+", metavar="LABEL")

    table_cmd("adjoin-zero", cmd_adjoin_zero, "adjoin a fresh zero")
    table_cmd("adjoin-identity", cmd_adjoin_identity, "adjoin a fresh identity")

    p = sub.add_parser("check-ideal", help="test whether labels form an ideal")
    p.add_argument("table")
    p.add_argument("subset", nargs="+", metavar="LABEL")
    p.set_defaults(fn=cmd_check_ideal)

    p = sub.add_parser("check-pru", help="right-unitary / pseudo / weakly verdicts")
    p.add_argument("table")
    p.add_argument("subset", nargs="+", metavar="LABEL")
    p.set_defaults(fn=cmd_check_pru)

    p = sub.add_parser("decompose", help="Rees coordinates of a completely zero-simple semigroup")
    p.add_argument("table")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("verify", help="run one theorem verifier over its corpus")
    p.add_argument("tag", choices=VERIFY_TAGS)
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--base", action="append",
                   choices=sorted(NAMED_SEMIGROUPS), help="base semigroups for Rees tags")
    p.add_argument("--imax", type=int, default=2)
    p.add_argument("--jmax", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("corpus", help="run every theorem verifier")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--imax", type=int, default=2)
    p.add_argument("--jmax", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_corpus)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (SemigroupError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
