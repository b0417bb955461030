import io
from contextlib import redirect_stdout

import pytest

from reesloop.cli import (
    iter_instances,
    main,
    parse_rees_spec,
    format_rees_spec,
    run_corpus,
)
from reesloop.language import equivalent, member, parse_automaton_text
from reesloop.loops import loop_problem
from reesloop.semigroup import (
    brandt_b2,
    cyclic_group,
    format_semigroup,
    generator_map,
    parse_semigroup_text,
    trivial_semigroup,
)


@pytest.fixture
def tables(tmp_path):
    paths = {}
    for name, s in (("c2", cyclic_group(2)), ("b2", brandt_b2()),
                    ("triv", trivial_semigroup())):
        p = tmp_path / f"{name}.tbl"
        p.write_text(format_semigroup(s))
        paths[name] = str(p)
    spec = tmp_path / "b2.rees"
    spec.write_text("base triv.tbl\ni 2\nj 2\nzero true\nmatrix\ne 0\n0 e\n")
    paths["spec"] = str(spec)
    return paths


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


class TestInfo:
    def test_b2_summary(self, tables):
        code, out = run_cli("info", tables["b2"])
        assert code == 0
        assert "order 5" in out
        assert "completely zero-simple: yes, max subgroup order 1" in out

    def test_trivial(self, tables):
        code, out = run_cli("info", tables["triv"])
        assert code == 0 and "order 1" in out and "idempotents 1" in out

    def test_parse_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.tbl"
        bad.write_text("2\na b\na c\nb a\n")
        code = main(["info", str(bad)])
        err = capsys.readouterr().err
        assert code == 2
        assert "line 3" in err


class TestLoop:
    def test_minimal_dfa_output_reparses_and_matches(self, tables):
        code, out = run_cli("loop", tables["c2"], "g")
        assert code == 0
        a = parse_automaton_text(out)
        want = loop_problem(generator_map(cyclic_group(2), ["g"]))
        assert equivalent(a, want)
        x = a.alphabet.letter("g")
        assert member(a, (x, a.alphabet.bar(x)))

    def test_missing_generator_label(self, tables, capsys):
        code = main(["loop", tables["c2"], "nope"])
        assert code == 2

    def test_non_generating_set(self, tables, capsys):
        code = main(["loop", tables["c2"], "e"])
        assert code == 2
        assert "do not reach" in capsys.readouterr().err

    def test_dot_output(self, tables, tmp_path):
        dot = tmp_path / "la.dot"
        code, out = run_cli("loop", tables["c2"], "g", "--dot", str(dot))
        assert code == 0
        assert "digraph" in dot.read_text()

    def test_trivial_loop_against_path_enumeration(self, tables):
        code, out = run_cli("loop", tables["triv"])
        assert code == 0
        a = parse_automaton_text(out)
        x = a.alphabet.letter("e")
        xb = a.alphabet.bar(x)
        # oracle: BFS over the hand-built two-vertex loop automaton
        edges = {(0, x, 1), (1, x, 1), (1, xb, 0), (1, xb, 1)}
        step = {}
        for p, l, q in edges:
            step.setdefault((p, l), set()).add(q)
        want = set()
        level = {(): {0}}
        for _ in range(5):
            nxt = {}
            for w, states in level.items():
                if 0 in states:
                    want.add(w)
                if len(w) < 4:
                    for l in (x, xb):
                        t = {q for p in states for q in step.get((p, l), ())}
                        if t:
                            nxt[w + (l,)] = t
            level = nxt
        from reesloop.language import enumerate_words
        assert set(enumerate_words(a, 4)) == want


class TestConstructions:
    def test_rees_roundtrip(self, tables):
        code, out = run_cli("rees", tables["spec"])
        assert code == 0
        m = parse_semigroup_text(out)
        assert m.order == 5
        from reesloop.semigroup import are_isomorphic
        assert are_isomorphic(m, brandt_b2())

    def test_rees_spec_roundtrip(self, tables, tmp_path):
        spec = parse_rees_spec((tmp_path / "b2.rees").read_text()
                               if False else open(tables["spec"]).read(),
                               __import__("pathlib").Path(tables["spec"]).parent)
        text = format_rees_spec(spec, "triv.tbl")
        again = parse_rees_spec(text, __import__("pathlib").Path(tables["spec"]).parent)
        assert again.matrix == spec.matrix and again.with_zero == spec.with_zero

    def test_quotient(self, tables):
        code, out = run_cli("quotient", tables["b2"], "0")
        assert code == 0
        q = parse_semigroup_text(out)
        assert q.order == 5  # collapsing {0} keeps the order

    def test_rees_one_by_one_trivial(self, tables, tmp_path):
        spec = tmp_path / "t.rees"
        spec.write_text(f"base {tables['triv']}\ni 1\nj 1\nzero false\nmatrix\ne\n")
        code, out = run_cli("rees", str(spec))
        assert code == 0 and parse_semigroup_text(out).order == 1

    def test_rees_all_zero_matrix(self, tables, tmp_path):
        spec = tmp_path / "z.rees"
        spec.write_text(f"base {tables['triv']}\ni 2\nj 2\nzero true\nmatrix\n0 0\n0 0\n")
        code, out = run_cli("rees", str(spec))
        assert code == 0
        m = parse_semigroup_text(out)
        # every product of nonzero elements is the zero
        assert all(m.mul(a, b) == m.zero
                   for a in range(m.order) for b in range(m.order)
                   if a != m.zero and b != m.zero)

    def test_adjoin_commands(self, tables):
        code, out = run_cli("adjoin-zero", tables["c2"])
        assert code == 0 and parse_semigroup_text(out).order == 3
        code, out = run_cli("adjoin-identity", tables["c2"])
        assert code == 0
        m = parse_semigroup_text(out)
        assert m.order == 3 and m.identity == 2

    def test_emitted_tables_reparse_equal(self, tables):
        for s in (cyclic_group(3), brandt_b2()):
            assert parse_semigroup_text(format_semigroup(s)) == s

    def test_cayley_dot(self, tables):
        code, out = run_cli("cayley", tables["c2"], "g")
        assert code == 0 and "digraph" in out


class TestChecks:
    def test_check_ideal(self, tables):
        code, out = run_cli("check-ideal", tables["b2"], "0")
        assert code == 0 and "ideal" in out
        code, out = run_cli("check-ideal", tables["c2"], "e")
        assert code == 1

    def test_check_pru(self, tables):
        code, out = run_cli("check-pru", tables["c2"], "e", "g")
        assert code == 0
        assert "right-unitary True" in out

    def test_decompose(self, tables):
        code, out = run_cli("decompose", tables["b2"])
        assert code == 0
        assert "group order 1" in out and "matrix" in out

    def test_decompose_rejects(self, tables, capsys):
        code = main(["decompose", tables["c2"]])
        assert code == 2


class TestVerify:
    def test_adjoin_zero_small(self):
        code, out = run_cli("verify", "adjoin-zero", "--max-order", "2")
        assert code == 0
        lines = [l for l in out.splitlines() if l.startswith("RESULT")]
        assert len(lines) == 9  # 1 + 8 semigroups
        assert all(l.split()[3] == "PASS" for l in lines)

    def test_semitorees_c2_sixteen_matrices(self):
        code, out = run_cli("verify", "semitorees", "--base", "c2",
                            "--imax", "2", "--jmax", "2")
        assert code == 0
        lines = [l for l in out.splitlines() if l.startswith("RESULT")]
        # 2 + 4 + 4 + 16 matrices plus one randomized rerun
        assert len(lines) == 27

    def test_unknown_tag_usage_error(self):
        assert main(["verify", "not-a-tag"]) == 2

    def test_stream_is_sorted_and_deterministic(self):
        _c1, out1 = run_cli("verify", "rees-quotient", "--max-order", "2")
        _c2, out2 = run_cli("verify", "rees-quotient", "--max-order", "2")
        assert out1 == out2
        ids = [l.split()[2] for l in out1.splitlines() if l.startswith("RESULT")]
        assert ids == sorted(ids)


class TestWorkers:
    def test_worker_env_gives_identical_stream(self, monkeypatch):
        instances = list(iter_instances("adjoin-zero", max_order=2))
        buf1 = io.StringIO()
        run_corpus(list(instances), stream=buf1)
        monkeypatch.setenv("REES_LOOP_WORKERS", "2")
        buf2 = io.StringIO()
        run_corpus(list(instances), stream=buf2)
        assert buf1.getvalue() == buf2.getvalue()


class TestCorpus:
    def test_small_corpus_reproducible(self):
        args = ["corpus", "--max-order", "1", "--imax", "1", "--jmax", "1",
                "--seed", "3"]
        code1, out1 = run_cli(*args)
        code2, out2 = run_cli(*args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert out1.strip().endswith("PASS")
        tags = {l.split()[1] for l in out1.splitlines() if l.startswith("RESULT")}
        assert "czeros" in tags and "semitorees" in tags
