"""Tests for trivialization search and certificate replay."""

import pytest

from ac_workbench import (
    AK3_MOVES,
    TRIVIAL,
    Certificate,
    DatasetEntry,
    MoveSet,
    MSIndex,
    Presentation,
    SearchAlgorithm,
    SearchConfig,
    ak3_certificate,
    apply_sequence,
    batch_solve,
    bfs_trivialize,
    gen_AK,
    gen_MS,
    gen_MS_dataset,
    greedy_trivialize,
    is_trivial_state,
    replay,
    reverse_certificate,
    verify,
)
from ac_workbench.core.presentation import canonicalize
from ac_workbench.search import summarize, walk


@pytest.fixture
def scrambled() -> Presentation:
    """TRIVIAL after h1, h2, h5."""
    return apply_sequence(TRIVIAL, [1, 2, 5])


# ============================================================================
# Search
# ============================================================================


class TestSearch:
    """Tests for BFS and greedy trivialization."""

    def test_scrambled_fixture(self, scrambled):
        assert scrambled == Presentation("Y", "Xyxx")

    @pytest.mark.parametrize("solver", [bfs_trivialize, greedy_trivialize])
    def test_one_move_solution(self, solver, one_move):
        result = solver(one_move, SearchConfig())
        assert result.solved
        assert result.path == [3]
        assert result.max_length_seen == 3
        assert result.length_increase == 0

    @pytest.mark.parametrize("solver", [bfs_trivialize, greedy_trivialize])
    def test_trivial_input_needs_no_moves(self, solver):
        result = solver(TRIVIAL, SearchConfig())
        assert result.solved
        assert result.path == []
        assert result.nodes_visited == 1

    @pytest.mark.parametrize("solver", [bfs_trivialize, greedy_trivialize])
    def test_scrambled_paths_replay_to_trivial(self, solver, scrambled):
        result = solver(scrambled, SearchConfig(max_nodes=50_000))
        assert result.solved
        terminal, max_seen = replay(scrambled, result.path, bound=result.bound)
        assert is_trivial_state(terminal)
        assert max_seen == result.max_length_seen

    def test_bfs_path_is_shortest(self, scrambled):
        """Three moves built it, so BFS needs at most three."""
        result = bfs_trivialize(scrambled, SearchConfig(max_relator_length="unbounded"))
        assert result.solved
        assert 1 <= len(result.path) <= 3
        assert result.bound is None

    def test_node_cap_stops_search(self, ak3):
        result = greedy_trivialize(ak3, SearchConfig(max_nodes=1))
        assert not result.solved
        assert result.path == []
        assert result.nodes_visited == 1

    def test_bfs_respects_node_cap(self, ak3):
        result = bfs_trivialize(ak3, SearchConfig(max_nodes=500))
        assert not result.solved
        assert result.nodes_visited <= 500

    def test_auto_bound_uses_ms_formula(self):
        p = gen_MS(1, "y")
        result = greedy_trivialize(p, SearchConfig(max_nodes=10), MSIndex(1, "y"))
        assert result.bound == 12
        assert result.n == 1

    def test_auto_bound_without_index(self, ak3):
        result = greedy_trivialize(ak3, SearchConfig(max_nodes=10))
        assert result.bound == 16

    def test_invalid_bound(self):
        with pytest.raises(ValueError):
            SearchConfig(max_relator_length=0)

    def test_walk_profile(self, one_move):
        terminal, profile = walk(one_move, [1, 3, 3])
        assert profile == [3, 4, 3, 2]
        assert terminal == TRIVIAL

    def test_classical_search(self, one_move):
        result = bfs_trivialize(one_move, SearchConfig(move_set=MoveSet.CLASSICAL))
        assert result.solved
        terminal, _ = replay(one_move, result.path, MoveSet.CLASSICAL)
        assert is_trivial_state(terminal)


class TestBatch:
    """Tests for dataset batches and their summaries."""

    def test_batch_solve_keeps_order(self, one_move, ak3):
        dataset = [
            DatasetEntry(one_move),
            DatasetEntry(ak3),
            DatasetEntry(gen_MS(1, "y"), MSIndex(1, "y")),
        ]
        results, summary = batch_solve(dataset, SearchConfig(max_nodes=200), threads=1)
        assert [r.input for r in results] == [one_move, ak3, gen_MS(1, "y")]
        assert results[0].solved
        assert not results[1].solved
        assert summary.total == 3
        assert summary.total_by_n == {1: 1}
        assert summary.total_by_length[3] == 1

    def test_summarize(self, one_move, scrambled):
        cfg = SearchConfig()
        results = [greedy_trivialize(one_move, cfg), greedy_trivialize(TRIVIAL, cfg)]
        summary = summarize(results)
        assert summary.solved == 2
        assert summary.max_path_length == 1
        assert summary.mean_path_length == 0.5
        assert summary.max_length_increase == 0

    def test_summarize_empty(self):
        summary = summarize([])
        assert summary.total == 0
        assert summary.mean_path_length == 0.0


# ============================================================================
# Benchmarks
# ============================================================================


@pytest.mark.slow
class TestBenchmarks:
    """Full-budget runs on AK(2), AK(3) and the MS dataset (N = 10⁶ nodes)."""

    def test_greedy_solves_ak2(self):
        p = gen_AK(2)
        result = greedy_trivialize(p, SearchConfig())
        assert result.solved
        assert result.bound == 14
        terminal, _ = replay(p, result.path, bound=result.bound)
        assert is_trivial_state(terminal)

    def test_greedy_fails_ak3_at_bound_20(self, ak3):
        result = greedy_trivialize(ak3, SearchConfig(max_relator_length=20))
        assert not result.solved
        assert result.path == []

    def test_greedy_solves_every_n1_presentation(self):
        results, summary = batch_solve(gen_MS_dataset(n_max=1), SearchConfig())
        assert len(results) == 170
        assert summary.solved == 170
        assert summary.solved_by_n == {1: 170}
        assert summary.max_length_increase <= 6

    def test_greedy_solves_short_presentations(self):
        """Every dataset entry of total length below 14."""
        short = [e for e in gen_MS_dataset() if e.presentation.length < 14]
        assert {e.index.n for e in short} == {1, 2, 3, 4}
        results, summary = batch_solve(short, SearchConfig())
        assert summary.solved == len(short)
        assert summary.max_length_increase <= 6

    @pytest.mark.parametrize("bound", [7, 10])
    def test_bfs_solves_ak2_under_tight_bounds(self, bound):
        p = gen_AK(2)
        result = bfs_trivialize(p, SearchConfig(algorithm=SearchAlgorithm.BFS, max_relator_length=bound))
        assert result.solved
        assert 17 <= len(result.path) <= 19
        terminal, _ = replay(p, result.path, bound=bound)
        assert is_trivial_state(terminal)

    def test_bfs_exhausts_budget_on_ak2_with_auto_bound(self):
        """The wider auto bound of 14 spreads BFS too thin to reach the trivial state."""
        result = bfs_trivialize(gen_AK(2), SearchConfig(algorithm=SearchAlgorithm.BFS))
        assert result.bound == 14
        assert not result.solved
        assert result.nodes_visited <= 1_000_000


# ============================================================================
# Certificates
# ============================================================================


class TestCertificates:
    """Tests for replaying the built-in certificate and variations of it."""

    def test_builtin_certificate_verifies(self, length25):
        cert = ak3_certificate()
        assert cert.start == length25
        assert len(cert.moves) == 53
        report = verify(cert)
        assert report.ok
        assert report.terminal == gen_AK(3)
        assert report.max_length_seen == 25
        assert len(report.length_profile) == 54
        assert report.first_divergence is None
        assert report.equivalence_path is None

    def test_certificate_move_counts(self):
        assert AK3_MOVES.count(9) == 8

    def test_reverse_certificate_verifies(self, length25):
        report = verify(reverse_certificate(ak3_certificate()))
        assert report.ok
        assert canonicalize(report.terminal) == canonicalize(length25)

    def test_truncated_certificate_reports_missing_move(self):
        cert = ak3_certificate()
        broken = cert.model_copy(update={"moves": cert.moves[:-1]})
        report = verify(broken)
        assert not report.ok
        assert report.first_divergence == 52
        assert report.equivalence_path == [8]

    def test_truncated_without_equivalence_search(self):
        cert = ak3_certificate()
        report = verify(cert.model_copy(update={"moves": cert.moves[:-1]}), equivalence_bound=None)
        assert not report.ok
        assert report.equivalence_path is None

    def test_tight_ceiling_fails_at_start(self):
        cert = ak3_certificate().model_copy(update={"claimed_max_length": 13})
        report = verify(cert)
        assert not report.ok
        assert report.first_divergence == 0
        assert report.terminal == gen_AK(3)

    def test_terminal_comparison_is_canonical(self, one_move):
        cert = Certificate(
            start=one_move, moves=[3], claimed_terminal=Presentation("y", "x"), claimed_max_length=3
        )
        assert verify(cert).ok

    def test_reverse_classical_concatenation_fails(self, one_move):
        cert = Certificate(
            start=one_move,
            moves=[1],
            claimed_terminal=one_move,
            claimed_max_length=5,
            move_set=MoveSet.CLASSICAL,
        )
        with pytest.raises(ValueError):
            reverse_certificate(cert)
