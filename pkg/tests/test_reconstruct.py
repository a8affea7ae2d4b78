import pytest

from oracle import close
from pathseq import (
    AmbiguousRootError,
    BudgetExceededError,
    BudgetMismatchError,
    FamilyMismatchError,
    GenStarlikeSpec,
    InvariantFunction,
    NoCandidateRootError,
    NonIntegerBranchCountError,
    ProfileMismatchError,
    ReconstructionError,
    SizeMismatchError,
    StarlikeSpec,
    builtin,
    check_generalized_conditions,
    check_starlike_conditions,
    distinguish,
    generalized_profile,
    generalized_specs,
    invariant_profile,
    longest_path_length,
    realize_starlike,
    reconstruct_generalized,
    reconstruct_starlike,
    starlike_profile,
    starlike_specs,
    survey_distinguishability,
)

CONN = builtin("connectivity")
DEGREE_SUM = InvariantFunction("degree-sum", lambda d: float(sum(d)))


@pytest.mark.parametrize("name", ["connectivity", "sum-connectivity", "hyper-zagreb"])
def test_standard_indices_satisfy_both_condition_sets(name):
    f = builtin(name)
    for report in (check_starlike_conditions(f), check_generalized_conditions(f)):
        assert report.passed
        assert report.condition_a and report.condition_b
        assert report.counterexample_a is None and report.counterexample_b is None
        assert report.min_margin_a > 1e-9
        assert report.min_margin_b > 1e-9


def test_hyper_zagreb_margin_is_exact_at_the_smallest_pair():
    # slope between x=3 and x=4 is 7, against the edge value 3
    report = check_starlike_conditions(builtin("hyper-zagreb"), x_max=4, t_max=2)
    assert report.min_margin_a == 4.0


def test_constant_index_fails_both_conditions():
    report = check_starlike_conditions(builtin("path-count"))
    assert not report.passed
    assert report.counterexample_a == (3, 4)
    assert report.counterexample_b == (0, 3)


def test_degree_sum_fails_starlike_slope_condition():
    report = check_starlike_conditions(DEGREE_SUM)
    assert not report.condition_a
    assert report.counterexample_a == (3, 4)


def test_degree_sum_fails_generalized_via_leaf_swap():
    report = check_generalized_conditions(DEGREE_SUM)
    assert report.condition_a
    assert not report.condition_b
    assert report.counterexample_b == (0, 3)


def test_condition_report_serialization():
    doc = check_starlike_conditions(CONN, x_max=8, t_max=4).to_dict()
    assert doc["family"] == "starlike"
    assert doc["condition_a"] == "pass" and doc["condition_b"] == "pass"
    assert doc["counterexamples"] == []
    assert doc["domain"] == {"x_max": 8, "t_max": 4}


@pytest.mark.parametrize(
    "counts",
    [
        {1: 3},
        {1: 1, 2: 2},
        {2: 3},
        {1: 2, 3: 1, 4: 2},
        {5: 3},
        {1: 1, 2: 1, 3: 1, 4: 1},
    ],
)
@pytest.mark.parametrize("name", ["connectivity", "sum-connectivity", "hyper-zagreb"])
def test_starlike_round_trip_from_closed_profile(counts, name):
    f = builtin(name)
    spec = StarlikeSpec.from_counts(counts)
    profile = starlike_profile(spec, f, spec.longest_path_length)
    result = reconstruct_starlike(spec.vertex_count, profile, f)
    assert result.spec == spec
    assert result.max_residual <= 1e-6


def test_starlike_round_trip_from_enumerated_profile():
    spec = StarlikeSpec.from_counts({1: 2, 3: 1, 4: 1})
    g = realize_starlike(spec)
    profile = invariant_profile(g, CONN, longest_path_length(g))
    result = reconstruct_starlike(g.vertex_count, profile, CONN)
    assert result.spec == spec


def test_reconstruction_result_serialization(spider):
    profile = starlike_profile(spider, CONN, spider.longest_path_length)
    doc = reconstruct_starlike(spider.vertex_count, profile, CONN).to_dict()
    assert doc["family"] == "starlike"
    assert doc["n"] == 6
    assert doc["branches"] == [
        {"length": 1, "count": 1},
        {"length": 2, "count": 2},
    ]


def test_reconstruct_rejects_tiny_graphs():
    with pytest.raises(NoCandidateRootError):
        reconstruct_starlike(3, [3.0, 2.0], CONN)


def test_reconstruct_rejects_profile_of_a_path_graph():
    # no starlike root degree explains the order-0 value of a plain path
    g = __import__("pathseq").build_graph(6, [(i, i + 1) for i in range(5)])
    profile = invariant_profile(g, CONN, 5)
    with pytest.raises(NoCandidateRootError):
        reconstruct_starlike(6, profile, CONN)


def test_reconstruct_flags_flat_index_as_ambiguous():
    blind = InvariantFunction("blind", lambda d: 1.0 if len(d) == 1 else 0.0)
    with pytest.raises(AmbiguousRootError):
        reconstruct_starlike(8, [8.0] + [0.0] * 7, blind)


def test_corrupted_entry_breaks_the_ladder(spider):
    profile = starlike_profile(spider, CONN, spider.longest_path_length)
    profile[2] += 0.5
    with pytest.raises(NonIntegerBranchCountError):
        reconstruct_starlike(spider.vertex_count, profile, CONN)


def test_corrupted_tail_fails_the_replay(spider):
    # the ladder stops once the branch budget is filled; later entries are
    # still replayed against the reconstructed spec
    profile = starlike_profile(spider, CONN, spider.longest_path_length)
    profile[-1] += 1e-3
    with pytest.raises(ProfileMismatchError):
        reconstruct_starlike(spider.vertex_count, profile, CONN)


def test_truncated_profile_cannot_fill_the_budget(spider):
    profile = starlike_profile(spider, CONN, 1)
    with pytest.raises(BudgetMismatchError):
        reconstruct_starlike(spider.vertex_count, profile, CONN)


def test_reconstruction_errors_share_a_base(spider):
    profile = starlike_profile(spider, CONN, 1)
    with pytest.raises(ReconstructionError):
        reconstruct_starlike(spider.vertex_count, profile, CONN)


@pytest.mark.parametrize("n1", [3, 4, 5])
def test_generalized_round_trip(n1):
    spec = GenStarlikeSpec(clique_size=n1, star=StarlikeSpec.from_counts({1: 1, 2: 2}))
    profile = generalized_profile(spec, CONN, spec.longest_path_length)
    result = reconstruct_generalized(spec.vertex_count, spec.max_degree, profile, CONN)
    assert result.spec == spec
    assert result.max_residual <= 1e-6


def test_generalized_reconstruct_rejects_impossible_hub():
    spec = GenStarlikeSpec(clique_size=4, star=StarlikeSpec.from_counts({1: 1, 2: 2}))
    profile = generalized_profile(spec, CONN, spec.longest_path_length)
    with pytest.raises(NoCandidateRootError):
        reconstruct_generalized(spec.vertex_count, spec.max_degree + 1, profile, CONN)


def test_distinguish_requires_matching_family(spider):
    glued = GenStarlikeSpec(clique_size=3, star=spider)
    with pytest.raises(FamilyMismatchError):
        distinguish(spider, glued, CONN)


def test_distinguish_requires_matching_size():
    a = StarlikeSpec.from_counts({1: 3})
    b = StarlikeSpec.from_counts({1: 4})
    with pytest.raises(SizeMismatchError):
        distinguish(a, b, CONN)


def test_distinguish_requires_matching_hub_degree():
    a = GenStarlikeSpec(clique_size=3, star=StarlikeSpec.from_counts({1: 1, 2: 2}))
    b = GenStarlikeSpec(clique_size=4, star=StarlikeSpec.from_counts({1: 4}))
    assert a.vertex_count == b.vertex_count
    assert a.max_degree != b.max_degree
    with pytest.raises(SizeMismatchError):
        distinguish(a, b, CONN)


def test_distinguish_same_spec_is_none(spider):
    assert distinguish(spider, spider, CONN) is None


def test_distinguish_reports_first_separating_order():
    a = StarlikeSpec.from_counts({1: 2, 2: 2})
    b = StarlikeSpec.from_counts({1: 3, 3: 1})
    # same n and m, different length-1 count: order 1 separates
    assert a.vertex_count == b.vertex_count
    assert a.root_degree == b.root_degree
    assert distinguish(a, b, CONN) == 1


def test_distinguish_same_counts_up_to_depth():
    # identical n, m, length-1 and length-2 counts; first divergence at L_3
    a = StarlikeSpec.from_counts({1: 2, 2: 1, 4: 2})
    b = StarlikeSpec.from_counts({1: 2, 2: 1, 3: 1, 5: 1})
    assert a.vertex_count == b.vertex_count and a.root_degree == b.root_degree
    assert distinguish(a, b, CONN) == 3


def test_starlike_specs_frozen_for_five_vertices():
    specs = starlike_specs(5)
    assert [s.branches for s in specs] == [((1, 2), (2, 1)), ((1, 4),)]


def test_starlike_specs_count_and_validity():
    specs = starlike_specs(8)
    assert len(specs) == 11
    assert len(set(specs)) == 11
    assert all(s.vertex_count == 8 for s in specs)


def test_generalized_specs_enumeration():
    specs = generalized_specs(10, 6)
    assert len(specs) == 6
    assert all(s.vertex_count == 10 and s.max_degree == 6 for s in specs)
    cliques = {s.clique_size for s in specs}
    assert cliques == {3, 4}


def test_survey_connectivity_has_no_collisions():
    report = survey_distinguishability(11, CONN)
    assert report.spec_count == 36
    assert report.pairs_checked == 630
    assert report.collisions == []
    doc = report.to_dict()
    assert doc["specs"] == 36 and doc["collisions"] == []


def test_survey_generalized_family():
    report = survey_distinguishability(10, CONN, family="generalized", max_degree=6)
    assert report.spec_count == 6
    assert report.pairs_checked == 15
    assert report.collisions == []


def test_survey_respects_pair_cap():
    with pytest.raises(BudgetExceededError):
        survey_distinguishability(12, CONN, max_pairs=10)
