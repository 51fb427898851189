"""Preference model: validation findings and value comparison semantics."""

import math

import pytest
from hypothesis import given, strategies as st

from qualrank.errors import DomainMismatchError
from qualrank.model import (
    Alternative,
    Attribute,
    Direction,
    Interval,
    Level,
    Number,
    Numeric,
    Ordinal,
    OrderingOutcome,
    Problem,
    Range,
    as_value,
    build_problem,
    validate_problem,
    value_compare,
)

B, W, E, I = (
    OrderingOutcome.BETTER,
    OrderingOutcome.WORSE,
    OrderingOutcome.EQUAL,
    OrderingOutcome.INCOMPARABLE,
)


def three_attr_problem():
    return build_problem(
        [
            ("Cost", Numeric(Direction.MINIMIZE)),
            ("Perf", Ordinal(["low", "med", "high"])),
            ("Mass", Interval(Direction.MINIMIZE)),
        ],
        [
            ("A", [10, "low", [2.0, 3.5]]),
            ("B", [20, "high", [1.0, 1.5]]),
        ],
        importance=[("Cost", "Perf")],
    )


class TestValidateProblem:
    def test_well_formed_problem_has_no_errors(self):
        report = validate_problem(three_attr_problem())
        assert report.ok
        assert report.errors == ()

    def test_self_loop_reported(self):
        p = three_attr_problem()
        bad = Problem(p.attributes, p.alternatives, {(0, 0)})
        report = validate_problem(bad)
        assert not report.ok
        assert any("self-loop on Cost" in f.message for f in report.errors)

    def test_two_cycle_reported(self):
        p = three_attr_problem()
        bad = Problem(p.attributes, p.alternatives, {(0, 1), (1, 0)})
        report = validate_problem(bad)
        messages = [f.message for f in report.errors]
        assert any("importance cycle" in m and "Cost" in m and "Perf" in m for m in messages)

    def test_cycle_never_silently_repaired(self):
        p = three_attr_problem()
        bad = Problem(p.attributes, p.alternatives, {(0, 1), (1, 2), (2, 0)})
        assert bad.importance_edges == frozenset({(0, 1), (1, 2), (2, 0)})
        assert not validate_problem(bad).ok

    def test_duplicate_attribute_name(self):
        attrs = [Attribute(0, "X", Numeric()), Attribute(1, "X", Numeric())]
        alts = [Alternative("A", [Number(1), Number(2)])]
        report = validate_problem(Problem(attrs, alts))
        assert any(f.code == "duplicate-name" for f in report.errors)

    def test_duplicate_alternative_id(self):
        p = build_problem(
            [("X", Numeric())], [("A", [1]), ("A", [2])]
        )
        report = validate_problem(p)
        assert any(f.code == "duplicate-id" for f in report.errors)

    def test_value_domain_mismatch(self):
        attrs = [Attribute(0, "X", Numeric())]
        alts = [Alternative("A", [Level("low")])]
        report = validate_problem(Problem(attrs, alts))
        assert any(f.code == "value-kind" for f in report.errors)

    def test_undeclared_level(self):
        attrs = [Attribute(0, "X", Ordinal(["low", "high"]))]
        alts = [Alternative("A", [Level("medium")])]
        report = validate_problem(Problem(attrs, alts))
        assert any(f.code == "unknown-level" for f in report.errors)

    def test_inverted_range(self):
        attrs = [Attribute(0, "X", Interval())]
        alts = [Alternative("A", [Range(3.0, 1.0)])]
        report = validate_problem(Problem(attrs, alts))
        assert any(f.code == "range-inverted" for f in report.errors)

    def test_non_finite_number(self):
        attrs = [Attribute(0, "X", Numeric())]
        alts = [Alternative("A", [Number(math.inf)])]
        report = validate_problem(Problem(attrs, alts))
        assert any(f.code == "non-finite" for f in report.errors)

    def test_missing_value_count(self):
        attrs = [Attribute(0, "X", Numeric()), Attribute(1, "Y", Numeric())]
        alts = [Alternative("A", [Number(1)])]
        report = validate_problem(Problem(attrs, alts))
        assert any(f.code == "value-count" for f in report.errors)

    def test_unreferenced_attribute_warning(self):
        p = three_attr_problem()
        report = validate_problem(p)
        warned = {f.message for f in report.warnings}
        assert any("Mass" in m for m in warned)
        assert not any("Cost" in m for m in warned)

    def test_degenerate_interval_warning(self):
        p = build_problem(
            [("X", Interval())],
            [("A", [[1.0, 1.0]]), ("B", [[2.0, 2.0]])],
        )
        report = validate_problem(p)
        assert any(f.code == "degenerate-intervals" for f in report.warnings)

    def test_edge_out_of_range(self):
        p = three_attr_problem()
        bad = Problem(p.attributes, p.alternatives, {(0, 99)})
        report = validate_problem(bad)
        assert any(f.code == "edge-range" for f in report.errors)


class TestValueCompare:
    def test_numeric_minimize_smaller_is_better(self):
        assert value_compare(Numeric(Direction.MINIMIZE), Number(10), Number(20)) is B

    def test_interval_identity_is_equal(self):
        d = Interval(Direction.MAXIMIZE)
        assert value_compare(d, Range(5, 7), Range(5, 7)) is E

    def test_interval_overlap_incomparable(self):
        # strong rule evaluated directly: neither 4 > 8 nor 5 > 6, not identical
        d = Interval(Direction.MAXIMIZE)
        assert value_compare(d, Range(4, 6), Range(5, 8)) is I

    def test_ordinal_higher_level_better(self):
        d = Ordinal(["low", "med", "high"])
        assert value_compare(d, Level("high"), Level("med")) is B

    def test_interval_disjoint_and_beyond(self):
        d = Interval(Direction.MAXIMIZE)
        assert value_compare(d, Range(8, 9), Range(4, 6)) is B
        assert value_compare(d, Range(4, 6), Range(8, 9)) is W

    def test_interval_minimize_flips(self):
        d = Interval(Direction.MINIMIZE)
        assert value_compare(d, Range(1, 2), Range(3, 4)) is B
        assert value_compare(d, Range(3, 4), Range(1, 2)) is W

    def test_touching_intervals_incomparable(self):
        # shared endpoint is not strictly beyond
        d = Interval(Direction.MAXIMIZE)
        assert value_compare(d, Range(6, 8), Range(4, 6)) is I

    def test_numeric_equality_is_exact(self):
        d = Numeric()
        assert value_compare(d, Number(1.0), Number(1.0 + 1e-12)) is W

    def test_domain_mismatch_rejected(self):
        with pytest.raises(DomainMismatchError):
            value_compare(Numeric(), Level("low"), Number(1))
        with pytest.raises(DomainMismatchError):
            value_compare(Ordinal(["a"]), Level("zzz"), Level("a"))
        with pytest.raises(DomainMismatchError):
            value_compare(Interval(), Number(1), Range(0, 1))


small = st.integers(-4, 4)


def interval_values():
    return st.tuples(small, st.integers(0, 4)).map(lambda t: Range(t[0], t[0] + t[1]))


def domain_and_values(k: int):
    ordinal = Ordinal(["v0", "v1", "v2", "v3"])
    return st.one_of(
        st.tuples(
            st.just(ordinal),
            st.lists(st.sampled_from([Level(l) for l in ordinal.levels]), min_size=k, max_size=k),
        ),
        st.tuples(
            st.builds(Numeric, st.sampled_from(list(Direction))),
            st.lists(small.map(Number), min_size=k, max_size=k),
        ),
        st.tuples(
            st.builds(Interval, st.sampled_from(list(Direction))),
            st.lists(interval_values(), min_size=k, max_size=k),
        ),
    )


class TestCompareProperties:
    @given(domain_and_values(2))
    def test_mirror(self, dv):
        domain, (v1, v2) = dv
        mirror = {B: W, W: B, E: E, I: I}
        assert value_compare(domain, v2, v1) is mirror[value_compare(domain, v1, v2)]

    @given(domain_and_values(1))
    def test_irreflexive(self, dv):
        domain, (v,) = dv
        assert value_compare(domain, v, v) is E

    @given(domain_and_values(3))
    def test_better_transitive(self, dv):
        domain, (v1, v2, v3) = dv
        if value_compare(domain, v1, v2) is B and value_compare(domain, v2, v3) is B:
            assert value_compare(domain, v1, v3) is B

    @given(domain_and_values(4))
    def test_interval_order_pattern(self, dv):
        # no 2+2: v1>v2 and v3>v4 force v1>v4 or v3>v2
        domain, (v1, v2, v3, v4) = dv
        if value_compare(domain, v1, v2) is B and value_compare(domain, v3, v4) is B:
            assert (
                value_compare(domain, v1, v4) is B
                or value_compare(domain, v3, v2) is B
            )

    def test_ordinal_better_is_spo_exhaustively(self):
        d = Ordinal(["a", "b", "c", "d"])
        values = [Level(l) for l in d.levels]
        rel = {
            (i, j)
            for i, v1 in enumerate(values)
            for j, v2 in enumerate(values)
            if value_compare(d, v1, v2) is B
        }
        assert all((i, i) not in rel for i in range(4))
        assert all(
            (i, k) in rel
            for i, j in rel
            for j2, k in rel
            if j == j2
        )
        assert all((j, i) not in rel for i, j in rel)


class TestAsValue:
    def test_coercions(self):
        assert as_value(Numeric(), 3) == Number(3.0)
        assert as_value(Ordinal(["x"]), "x") == Level("x")
        assert as_value(Interval(), [1, 2]) == Range(1.0, 2.0)

    def test_rejections(self):
        with pytest.raises(DomainMismatchError):
            as_value(Numeric(), "nope")
        with pytest.raises(DomainMismatchError):
            as_value(Interval(), [1, 2, 3])
        with pytest.raises(DomainMismatchError):
            as_value(Ordinal(["x"]), 5)
