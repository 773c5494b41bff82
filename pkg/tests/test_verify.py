import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toughspec.errors import Graph6Error, ParameterError
from toughspec.families import m_graph, one_tough_extremal, split_graph, t_tough_extremal
from toughspec.graph import complete, complete_bipartite, cycle, petersen, star
from toughspec.graph6 import parse_graph6, write_graph6
from toughspec.verify import (TOL, OneToughClaim, Record, TToughClaim,
                              VerificationReport, compare_tuples, sample_hamiltonian,
                              sample_t_tough, verify_forced_cycles, verify_hamiltonian,
                              verify_join_comparison, verify_one_tough, verify_regular_toughness,
                              verify_spectral_bounds, verify_t_tough)
from toughspec.verify import sampling
from toughspec.verify.streams import batch_connected, graph6_chunks, run_stream

from strategies import graphs


def lines(*gs):
    return [write_graph6(g) + b"\n" for g in gs]


# -- threshold claims --------------------------------------------------------

def test_one_tough_extremal_is_the_unless_branch():
    rep = verify_one_tough(lines(one_tough_extremal(10, 2)), 2)
    assert rep.hypothesis == 1 and rep.confirmed == 1 and not rep.violations
    (case,) = rep.equality_cases
    assert case.verdict == "equality-isomorphic"
    assert "one-tough=no" in case.detail
    assert abs(case.measured - case.threshold) <= TOL


def test_cycle_is_filtered_by_the_spectral_premise():
    rep = verify_one_tough(lines(cycle(10)), 2)
    assert rep.filters == {"order": 1, "connected": 1, "min_degree": 1, "spectral": 0}
    assert rep.hypothesis == 0 and rep.vacuous and rep.status == "VACUOUS"
    assert "# VACUOUS" in rep.summary()


def test_one_tough_order_and_degree_filters():
    claim = OneToughClaim(3)
    assert claim.min_order() == 15
    assert OneToughClaim(10).min_order() == 50
    rep = verify_one_tough(lines(complete(9), complete(12)), 2)
    # K_9 is below the order bound; K_12 has min degree 11, not 2
    assert rep.filters["order"] == 1 and rep.filters["min_degree"] == 0
    with pytest.raises(ParameterError):
        OneToughClaim(1)


def test_hamiltonian_claim_examples():
    rep = verify_hamiltonian(lines(m_graph(18), complete(18)))
    assert rep.hypothesis == 2 and rep.confirmed == 2 and not rep.violations
    (case,) = rep.equality_cases
    assert case.index == 0 and case.verdict == "equality-isomorphic"
    assert "hamiltonian=no" in case.detail


def test_t_tough_claim_examples():
    rep = verify_t_tough(lines(split_graph(1, [10, 1]), complete(12)), 1)
    assert rep.hypothesis == 2 and rep.confirmed == 2
    (case,) = rep.equality_cases
    assert case.verdict == "equality-isomorphic" and "cut=0" in case.detail
    with pytest.raises(ParameterError):
        TToughClaim(0)


def test_threshold_matches_extremal_radius():
    claim = TToughClaim(2)
    n = claim.min_order()
    assert n == 30
    from toughspec.spectral import eigen_report
    assert claim.threshold(n) == eigen_report(t_tough_extremal(n, 2)).rho


def test_decode_errors_carry_line_numbers():
    bad = lines(complete(12), complete(12)) + [b"K~~~~~ ~~~~~\n"]
    with pytest.raises(Graph6Error) as err:
        verify_t_tough(bad, 1)
    assert err.value.line == 3


def test_report_is_order_independent_in_content():
    gs = [complete(12), split_graph(1, [10, 1]), cycle(12), complete(12).remove_edges([(0, 1)])]
    a = verify_t_tough(lines(*gs), 1)
    b = verify_t_tough(lines(*reversed(gs)), 1)
    assert (a.examined, a.hypothesis, a.confirmed, a.filters) == \
           (b.examined, b.hypothesis, b.confirmed, b.filters)
    assert sorted(r.graph6 for r in a.records()) == sorted(r.graph6 for r in b.records())


# -- dual-route spectral stage ------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(graphs(12, 12, density=0.9))
def test_spectral_stage_agrees_with_the_eigensolver(g):
    from toughspec.spectral import eigen_report
    claim = TToughClaim(1)
    rep = claim.check_graph(g)
    rho = eigen_report(g).rho
    from toughspec.graph import is_connected
    expected = is_connected(g) and rho >= claim.threshold(12) - TOL
    assert rep.filters["spectral"] == int(expected)


def test_equality_band_graph_goes_to_the_eigensolver():
    # the extremal graph sits exactly on the threshold, so both inertia
    # routes are inconclusive and the eigensolver reports its radius
    claim = TToughClaim(1)
    rep = claim.check_graph(split_graph(1, [10, 1]))
    (case,) = rep.equality_cases
    assert abs(case.measured - claim.threshold(12)) < 1e-12


# -- violations round-trip -----------------------------------------------------

class StricterClaim(TToughClaim):
    """Demands completeness above the 1-tough threshold; every non-complete
    survivor becomes a violation."""

    claim_id = "stricter"

    def conclusion(self, g):
        return g.is_complete(), f"missing={g.n * (g.n - 1) // 2 - g.m}"


def test_violations_round_trip():
    claim = StricterClaim(1)
    chunks = sampling.dense_chunks(12, 400, seed=3)
    rep = run_stream(claim, chunks)
    assert rep.violations and rep.status == "VIOLATIONS"
    for rec in rep.violations[:20]:
        again = claim.check_graph(parse_graph6(rec.graph6))
        (twin,) = again.violations
        assert twin.verdict == rec.verdict == "violation"
        assert twin.measured == rec.measured and twin.detail == rec.detail


# -- determinism ----------------------------------------------------------------

def test_sampling_is_deterministic_across_worker_counts():
    a = sample_t_tough(1, 3000, seed=5, jobs=1)
    b = sample_t_tough(1, 3000, seed=5, jobs=2)
    assert a.to_jsonl() == b.to_jsonl()
    assert a.to_tsv() == b.to_tsv()
    assert a.summary() == b.summary()


def test_stream_is_deterministic_across_worker_counts(graphs_le8):
    src = lines(*graphs_le8)
    from toughspec.verify.claims import SpectralBoundsClaim
    a = run_stream(SpectralBoundsClaim(), graph6_chunks(iter(src), size=1000), jobs=1)
    b = run_stream(SpectralBoundsClaim(), graph6_chunks(iter(src), size=1000), jobs=2)
    assert a.to_jsonl() == b.to_jsonl()


def test_reruns_are_identical():
    a = sample_hamiltonian(300, seed=9)
    b = sample_hamiltonian(300, seed=9)
    assert a.to_jsonl() == b.to_jsonl()
    assert a.notes and "U[0.8, 1.0]" in a.notes[0]


# -- report invariants ------------------------------------------------------------

@pytest.mark.parametrize("seed", [0, 1])
def test_balance_invariant(seed):
    for rep in (sample_t_tough(1, 500, seed), sample_hamiltonian(200, seed),
                run_stream(StricterClaim(1), sampling.dense_chunks(12, 200, seed))):
        assert rep.check_balance()
        assert rep.confirmed + len(rep.violations) + len(rep.ambiguous) == rep.hypothesis


def test_merge_adds_counts():
    a = VerificationReport("x", ("s",), examined=3, hypothesis=2, confirmed=2)
    a.filters["s"] = 2
    b = VerificationReport("x", ("s",), examined=4, hypothesis=1, confirmed=0)
    b.filters["s"] = 1
    b.ambiguous.append(Record("x", "A_", 1.0, 1.0, "ambiguous", index=5))
    a.merge(b)
    assert (a.examined, a.hypothesis, a.confirmed, a.filters["s"]) == (7, 3, 2, 3)
    assert a.check_balance()


def test_machine_formats():
    rep = verify_one_tough(lines(one_tough_extremal(10, 2)), 2)
    tsv = rep.to_tsv(precision=5).splitlines()
    assert tsv[0] == "claim\tgraph6\tmeasured\tthreshold\tverdict"
    fields = tsv[1].split("\t")
    assert fields[0] == "one-tough" and fields[4] == "equality-isomorphic"
    assert parse_graph6(fields[1]) == one_tough_extremal(10, 2)
    rows = [json.loads(x) for x in rep.to_jsonl().splitlines()]
    assert rows[0]["verdict"] == "equality-isomorphic"
    assert rows[-1]["summary"]["violations"] == 0


# -- sweeps and other claims ---------------------------------------------------------

def test_join_comparison():
    rep = verify_join_comparison(1000, 42)
    assert rep.hypothesis == 1000 and rep.confirmed == 1000
    assert not rep.violations and not rep.ambiguous


def test_degenerate_tuple_is_rejected():
    # n_1 = n - s - p(t - 1): the two graphs coincide
    rep = compare_tuples([(2, 2, (6, 2, 2)), (2, 2, (5, 3, 2))])
    assert rep.examined == 2 and rep.hypothesis == 1 and rep.confirmed == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 4), st.integers(1, 3), st.lists(st.integers(1, 8), min_size=1, max_size=4))
def test_admissibility_matches_definition(s, p, parts):
    parts = sorted(parts, reverse=True)
    n = s + sum(parts)
    t = len(parts)
    want = s >= 0 and parts[-1] >= p and parts[0] < n - s - p * (t - 1)
    assert sampling.comparison_admissible(s, p, parts) == want


def test_spectral_bounds_examples():
    rep = verify_spectral_bounds(lines(cycle(5), star(5), petersen(), complete_bipartite(2, 3)))
    assert not rep.violations and not rep.ambiguous
    verdicts = {(r.graph6, r.verdict) for r in rep.equality_cases}
    assert (write_graph6(cycle(5)).decode(), "degree-bound-equality") in verdicts
    assert (write_graph6(star(5)).decode(), "edge-bound-equality") in verdicts
    assert rep.extra["edge-bound-equalities"] == 1


def test_regular_toughness_examples():
    rep = verify_regular_toughness(lines(cycle(6), petersen(), complete(5), star(3)))
    assert rep.filters == {"connected": 4, "regular": 3, "non_complete": 2, "within_cap": 2}
    assert rep.hypothesis == 2 and rep.confirmed == 2


def test_forced_cycles_small_run():
    rep = verify_forced_cycles(30, seed=1)
    assert not rep.violations
    assert rep.extra["matching-cycle"] == rep.extra["two-edge-cycle"] == 30
    assert rep.extra["exceptions"] == 4 and rep.extra["outside-hypotheses"] == 4
    assert {r.verdict for r in rep.equality_cases} == {
        "exception-not-hamiltonian-connected", "outside-hypotheses-not-hamiltonian-connected"}
    assert rep.check_balance()


def test_connectivity_hypotheses():
    from toughspec.families import double_edge_join, isolated_pair_join
    from toughspec.verify.claims import connectivity_hypotheses
    for n in range(13, 17):
        assert connectivity_hypotheses(isolated_pair_join(n))
        assert not connectivity_hypotheses(double_edge_join(n))
    assert not connectivity_hypotheses(isolated_pair_join(12))


def test_matching_instances_meet_the_hypotheses():
    rng = np.random.default_rng(0)
    seen = 0
    while seen < 200:
        inst = sampling.matching_cycle_instance(rng)
        if inst is None:
            continue
        g, forest = inst
        seen += 1
        k = len(forest)
        assert g.n >= k + 3
        assert g.m >= (g.n - 1) * (g.n - 2) // 2 + k + 2
        inside = sorted({v for e in forest for v in e})
        sub = g.induced(inside)
        assert sub.max_degree <= 2
        for u, v in forest:
            assert g.has_edge(u, v)


def test_dense_batch_shape_and_symmetry():
    adj = sampling.dense_batch(np.random.default_rng(0), 9, 50)
    assert adj.shape == (50, 9, 9)
    assert (adj == adj.transpose(0, 2, 1)).all() and not adj[:, range(9), range(9)].any()
    assert batch_connected(adj).dtype == bool
