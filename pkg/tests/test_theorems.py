import random

import pytest

from reesloop.language import member
from reesloop.semigroup import (
    NotAnIdeal,
    ZERO,
    adjoin_zero,
    are_isomorphic,
    brandt_b2,
    cyclic_group,
    full_generator_map,
    is_completely_zero_simple,
    is_weakly_pru,
    make_semigroup,
    null_semigroup,
    rees_matrix,
    sandwich,
    trivial_semigroup,
)
from reesloop.theorems import (
    HypothesisFailed,
    NoUnitInP,
    NotCompletelyZeroSimple,
    extend_to_zero,
    find_admissible_column,
    format_report,
    negative_control_search,
    rees_decompose,
    result_line,
    verify_adjoin_zero,
    verify_czeros,
    verify_rees_quotient,
    verify_semitorees,
    verify_semitoreeszero,
    verify_subsemigroup_intersection,
    verify_unit_sandwich,
)


class TestReesQuotient:
    def test_c2_zero_by_zero_ideal(self):
        s = adjoin_zero(cyclic_group(2))
        rep = verify_rees_quotient(s, full_generator_map(s), {s.zero})
        assert rep.holds and rep.separator is None

    def test_degenerate_whole_ideal(self):
        s = cyclic_group(2)
        rep = verify_rees_quotient(s, full_generator_map(s), {0, 1})
        assert rep.holds

    def test_requires_ideal(self):
        s = adjoin_zero(cyclic_group(2))
        with pytest.raises(NotAnIdeal):
            verify_rees_quotient(s, full_generator_map(s), {0})

    def test_cross_oracles_present(self):
        s = adjoin_zero(cyclic_group(2))
        rep = verify_rees_quotient(s, full_generator_map(s), {s.zero})
        names = [n for n, _ok in rep.stats["checks"]]
        assert "L1T=path(1,T)" in names and "LTT=path(T,T)" in names


class TestSubsemigroup:
    def test_whole_is_trivial(self):
        s = cyclic_group(2)
        tau = full_generator_map(s)
        rep = verify_subsemigroup_intersection(s, tau, {0, 1}, tau.alphabet)
        assert rep.holds

    def test_cor_3_3_shape(self):
        s = cyclic_group(3)
        tau = extend_to_zero(full_generator_map(s))
        rep = verify_subsemigroup_intersection(
            tau.target, tau, set(range(s.order)), tau.alphabet[:-1])
        assert rep.holds

    def test_hypothesis_gate(self):
        s = make_semigroup(None, ((0, 0, 0), (0, 0, 1), (0, 0, 2)))
        tau = full_generator_map(s)
        assert not is_weakly_pru(s, {0, 2})
        with pytest.raises(HypothesisFailed):
            verify_subsemigroup_intersection(s, tau, {0, 2}, ("s0", "s2"))
        rep = verify_subsemigroup_intersection(s, tau, {0, 2}, ("s0", "s2"),
                                               require_hypothesis=False)
        assert rep.stats["weakly_pru"] is False

    def test_rees_column_instance(self):
        # Prop 5.1 column inside a small Rees semigroup
        c2 = cyclic_group(2)
        m, rs = rees_matrix(c2, 2, 2, sandwich([[0, 1], [1, 0]]), False)
        col = find_admissible_column(c2, rs.sandwich)
        assert col is not None
        i0, j0 = col
        tset = frozenset(rs.encode(i0, g, j0) for g in range(2))
        tau = full_generator_map(m)
        labels = tuple(m.labels[v] for v in sorted(tset))
        rep = verify_subsemigroup_intersection(m, tau, tset, labels)
        assert rep.holds


class TestAdjoinZero:
    def test_trivial_and_small(self):
        triv = trivial_semigroup()
        from reesloop.loops import loop_automaton
        la = loop_automaton(extend_to_zero(full_generator_map(triv)))
        assert la.nfa.n_states == 3  # S^0 plus the adjoined identity
        rep = verify_adjoin_zero(triv, full_generator_map(triv))
        assert rep.holds

    def test_c2(self):
        rep = verify_adjoin_zero(cyclic_group(2), full_generator_map(cyclic_group(2)))
        assert rep.holds

    def test_bracketed_middle_alone_is_not_enough(self):
        # inner loops at the sink may be bare letters, not only factors
        # bracketed by the fresh letter pair; z z z-bar reaches the sink,
        # loops once, and returns
        triv = trivial_semigroup()
        tau = extend_to_zero(full_generator_map(triv))
        from reesloop.loops import loop_problem
        lp = loop_problem(tau)
        a = lp.alphabet
        z = a.letter(tau.alphabet[-1])
        assert member(lp, (z, z, a.bar(z)))
        assert member(lp, (z, a.letter("e"), a.bar(z)))


class TestSemitorees:
    def test_c2_one_by_one(self):
        rep = verify_semitorees(cyclic_group(2), full_generator_map(cyclic_group(2)),
                                1, 1, sandwich([[0]]))
        assert rep.holds
        assert dict(rep.stats["checks"])["K=image"]

    def test_trivial(self):
        rep = verify_semitorees(trivial_semigroup(),
                                full_generator_map(trivial_semigroup()),
                                1, 1, sandwich([[0]]))
        assert rep.holds

    def test_randomized_representatives(self):
        rep = verify_semitorees(cyclic_group(2), full_generator_map(cyclic_group(2)),
                                2, 2, sandwich([[0, 1], [1, 0]]),
                                rng=random.Random(11))
        assert rep.holds and rep.stats["randomized"]


class TestSemitoreesZero:
    def test_brandt(self):
        rep = verify_semitoreeszero(trivial_semigroup(),
                                    full_generator_map(trivial_semigroup()),
                                    2, 2, sandwich([[0, ZERO], [ZERO, 0]]))
        assert rep.holds
        names = dict(rep.stats["checks"])
        assert names["T-is-ideal"] and names["quotient-iso-M0"]

    def test_all_zero_matrix(self):
        rep = verify_semitoreeszero(trivial_semigroup(),
                                    full_generator_map(trivial_semigroup()),
                                    2, 2, sandwich([[ZERO, ZERO], [ZERO, ZERO]]))
        assert rep.holds


class TestUnitSandwich:
    def test_c2_with_zero_entries(self):
        rep = verify_unit_sandwich(cyclic_group(2), full_generator_map(cyclic_group(2)),
                                   2, 2, sandwich([[0, ZERO], [1, 0]]))
        assert rep.holds

    def test_monoid_with_zero_adjoined(self):
        s = adjoin_zero(cyclic_group(2))  # monoid with identity and zero
        rep = verify_unit_sandwich(s, full_generator_map(s),
                                   1, 2, sandwich([[0], [s.zero]]))
        assert rep.holds

    def test_trivial_base(self):
        rep = verify_unit_sandwich(trivial_semigroup(),
                                   full_generator_map(trivial_semigroup()),
                                   1, 1, sandwich([[0]]))
        assert rep.holds

    def test_no_unit(self):
        s = adjoin_zero(cyclic_group(2))
        with pytest.raises(NoUnitInP):
            verify_unit_sandwich(s, full_generator_map(s), 1, 1,
                                 sandwich([[s.zero]]))


class TestAdmissibleColumn:
    def test_unit_entry_qualifies(self):
        c2 = cyclic_group(2)
        p = sandwich([[1, ZERO], [ZERO, ZERO]])
        assert find_admissible_column(c2, p) == (0, 0)

    def test_all_zero_matrix(self):
        assert find_admissible_column(cyclic_group(2),
                                      sandwich([[ZERO, ZERO]])) is None

    def test_one_by_one(self):
        assert find_admissible_column(cyclic_group(2), sandwich([[1]])) == (0, 0)


class TestDecompose:
    def test_group_with_zero(self):
        for n in (2, 3):
            g0 = adjoin_zero(cyclic_group(n))
            dec = rees_decompose(g0)
            assert dec.i_count == dec.j_count == 1
            assert are_isomorphic(dec.group, cyclic_group(n))
            assert dec.sandwich.entry(0, 0) is not None

    def test_brandt(self):
        dec = rees_decompose(brandt_b2())
        assert dec.group.order == 1
        assert dec.i_count == dec.j_count == 2
        entries = dec.sandwich.entries
        nonzero = sum(v is not None for row in entries for v in row)
        assert nonzero == 2  # identity pattern up to reindexing
        assert dec.sandwich.regular

    def test_roundtrip_through_rees_matrix(self):
        c2 = cyclic_group(2)
        p = sandwich([[0, ZERO], [1, 0]])
        m0, _ = rees_matrix(c2, 2, 2, p, True)
        assert is_completely_zero_simple(m0)
        dec = rees_decompose(m0)
        assert are_isomorphic(dec.group, c2)
        assert are_isomorphic(dec.rees_semigroup, m0)

    def test_rejects_non_czs(self):
        with pytest.raises(NotCompletelyZeroSimple):
            rees_decompose(null_semigroup(2))


class TestCZeroS:
    def test_brandt(self):
        b2 = brandt_b2()
        rep = verify_czeros(b2, full_generator_map(b2))
        assert rep.holds

    def test_c3_zero(self):
        s = adjoin_zero(cyclic_group(3))
        rep = verify_czeros(s, full_generator_map(s))
        assert rep.holds


class TestNegativeControl:
    def test_no_failures_at_order_three(self):
        checked, failures = negative_control_search(max_order=3)
        # record: every small non-hypothesis pair still satisfies the
        # identity; the hypothesis becomes necessary only at order 4
        assert checked == 51
        assert failures == []

    def test_failure_exists_at_order_four(self):
        s = make_semigroup(None, ((0, 0, 0, 0), (0, 0, 0, 0),
                                  (0, 0, 0, 0), (0, 0, 1, 0)))
        tset = frozenset({0, 1, 2})
        assert not is_weakly_pru(s, tset)
        rep = verify_subsemigroup_intersection(
            s, full_generator_map(s), tset,
            tuple(s.labels[v] for v in sorted(tset)), require_hypothesis=False)
        assert not rep.holds
        assert rep.separator is not None
        # the separator must be accepted by exactly one side
        assert member(rep.lhs, rep.separator) != member(rep.rhs, rep.separator)


class TestReporting:
    def test_result_line_and_format(self):
        s = cyclic_group(2)
        rep = verify_adjoin_zero(s, full_generator_map(s))
        line = result_line(rep, "c2")
        assert line == "RESULT adjoin-zero c2 PASS"
        text = format_report(rep, "c2")
        assert "holds:     True" in text and "RESULT" in text

    def test_side_check_witness_rendering(self):
        # a composite report with a failing side check must surface its
        # witness text without touching the main alphabet
        from reesloop.theorems import _finish
        from reesloop.language import HatAlphabet, word_nfa
        import time
        alpha = HatAlphabet(("x",))
        a = word_nfa(alpha, (0,))
        rep = _finish("demo", a, a, [("side", False, "u.~v")], {},
                      time.perf_counter())
        assert not rep.holds and rep.separator is None
        assert rep.stats["witnesses"] == {"side": "u.~v"}
        assert result_line(rep, "i") == "RESULT demo i FAIL u.~v"
        assert "witness u.~v" in format_report(rep, "i")

    def test_fail_line_carries_separator(self):
        s = make_semigroup(None, ((0, 0, 0, 0), (0, 0, 0, 0),
                                  (0, 0, 0, 0), (0, 0, 1, 0)))
        tset = frozenset({0, 1, 2})
        rep = verify_subsemigroup_intersection(
            s, full_generator_map(s), tset,
            tuple(s.labels[v] for v in sorted(tset)), require_hypothesis=False)
        line = result_line(rep, "bad")
        assert line.startswith("RESULT subsemigroup bad FAIL ")
        assert len(line.split()) == 5
