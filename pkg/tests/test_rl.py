"""Tests for the trivialization environment, curriculum, networks, PPO and checkpoints."""

import math
import struct

import numpy as np
import pytest

torch = pytest.importorskip("torch")

from ac_workbench import (  # noqa: E402
    TRIVIAL,
    ActionSpaceAdapter,
    AdaptConfig,
    CheckpointError,
    EnvConfig,
    PPOConfig,
    Presentation,
    TrainingError,
    apply_sequence,
    gen_AK,
    is_trivial_state,
)
from ac_workbench.rl import (  # noqa: E402
    ACEnv,
    ActorCritic,
    CurriculumScheduler,
    PPOTrainer,
    RolloutBatch,
    clipped_policy_loss,
    clipped_value_loss,
    compute_gae,
    decode,
    encode,
    linear_lr,
    load_checkpoint,
    observation,
    ppo_loss,
    ppo_update,
    read_checkpoint,
    save_checkpoint,
    train,
)


def _small_ppo(**overrides) -> PPOConfig:
    settings = dict(actors=1, rollout_length=8, minibatches=2, minibatch_size=4, hidden_size=8, hidden_layers=1)
    settings.update(overrides)
    return PPOConfig(**settings)


def _batch(model: ActorCritic, size: int = 8, uniform_logprobs: bool = False) -> RolloutBatch:
    obs = torch.zeros(size, model.obs_size)
    masks = torch.ones(size, model.num_actions, dtype=torch.bool)
    actions = torch.zeros(size, dtype=torch.int64)
    if uniform_logprobs:
        logprobs = torch.full((size,), -math.log(model.num_actions))
    else:
        with torch.no_grad():
            _, logprobs, _, _ = model.act(obs, masks, actions)
    return RolloutBatch(
        obs=obs,
        masks=masks,
        actions=actions,
        logprobs=logprobs,
        values=torch.zeros(size),
        advantages=torch.linspace(-1.0, 1.0, size),
        returns=torch.ones(size),
    )


def _snapshot(model: ActorCritic) -> dict:
    return {k: v.clone() for k, v in model.state_dict().items()}


# ============================================================================
# Environment
# ============================================================================


class TestEnvironment:
    """Tests for encoding, masking, rewards and episode limits."""

    def test_encode(self, one_move):
        assert encode(one_move, 4).tolist() == [1, 0, 0, 0, 2, 1, 0, 0]
        assert decode(encode(one_move, 4), 4) == one_move
        assert observation(one_move, 4).tolist() == [0.5, 0, 0, 0, 1.0, 0.5, 0, 0]

    def test_encode_rejects_long_relators(self, ak3):
        with pytest.raises(ValueError):
            encode(ak3, 6)

    def test_mask_all_allowed(self, one_move):
        env = ACEnv(EnvConfig(max_relator_length=4))
        env.reset(one_move)
        assert env.action_mask().all()

    def test_mask_tight_bound(self, one_move):
        """Conjugating yx by x or by Y makes it length 4."""
        env = ACEnv(EnvConfig(max_relator_length=3))
        env.reset(one_move)
        mask = env.action_mask()
        assert np.flatnonzero(~mask).tolist() == [4, 10]

    def test_solving_step(self, one_move):
        env = ACEnv(EnvConfig(max_relator_length=4))
        env.reset(one_move)
        result = env.step(2)
        assert result.solved
        assert result.done
        assert result.reward == 1000.0
        assert env.state.path == [3]

    def test_masked_step_is_identity(self, one_move):
        env = ACEnv(EnvConfig(max_relator_length=3))
        env.reset(one_move)
        result = env.step(4)
        assert not result.solved
        assert result.reward == -3.0
        assert env.state.presentation == one_move
        assert env.state.path == []
        assert env.state.t == 1

    def test_length_penalty_is_capped(self, ak3):
        env = ACEnv(EnvConfig(max_relator_length=16))
        env.reset(ak3)
        assert env.step(0).reward == -10.0

    def test_horizon(self, one_move):
        env = ACEnv(EnvConfig(horizon=1, max_relator_length=4))
        env.reset(one_move)
        assert env.step(0).done
        with pytest.raises(TrainingError):
            env.step(0)

    def test_step_before_reset(self):
        with pytest.raises(TrainingError):
            ACEnv().step(0)

    def test_fully_masked_state(self):
        env = ACEnv(EnvConfig(max_relator_length=1), actions=[(1,)])
        env.reset(TRIVIAL)
        with pytest.raises(TrainingError):
            env.action_mask()

    def test_supermove_actions(self, one_move):
        env = ACEnv(EnvConfig(max_relator_length=4), actions=[(1,), (1, 3, 3)])
        env.reset(one_move)
        result = env.step(1)
        assert result.solved
        assert env.state.path == [1, 3, 3]


# ============================================================================
# Curriculum
# ============================================================================


class TestCurriculum:
    """Tests for the initial-state scheduler."""

    def test_first_pass_in_order(self):
        scheduler = CurriculumScheduler([TRIVIAL] * 3, rng=np.random.default_rng(0))
        assert [scheduler.next() for _ in range(3)] == [0, 1, 2]
        assert scheduler.first_pass_done

    def test_record_keeps_shortest(self):
        scheduler = CurriculumScheduler([TRIVIAL] * 3)
        assert scheduler.record(1, [3, 3, 3])
        assert not scheduler.record(1, [3])
        assert not scheduler.record(1, [3, 1])
        assert scheduler.solved == {1: [3]}
        assert scheduler.unsolved == [0, 2]

    def test_draws_follow_probability(self):
        scheduler = CurriculumScheduler([TRIVIAL] * 3, solved_probability=1.0, rng=np.random.default_rng(0))
        for _ in range(3):
            scheduler.next()
        scheduler.record(1, [3])
        assert {scheduler.next() for _ in range(20)} == {1}
        scheduler.solved_probability = 0.0
        assert {scheduler.next() for _ in range(50)} <= {0, 2}

    def test_empty_pool_defers(self):
        scheduler = CurriculumScheduler([TRIVIAL], solved_probability=0.0)
        scheduler.next()
        scheduler.record(0, [])
        assert scheduler.next() == 0

    def test_empty_dataset(self):
        with pytest.raises(ValueError):
            CurriculumScheduler([])


# ============================================================================
# Networks
# ============================================================================


class TestNetworks:
    """Tests for the actor-critic and action remapping."""

    def test_shapes(self):
        model = ActorCritic(8, 12, hidden_size=16, hidden_layers=2)
        obs = torch.zeros(3, 8)
        mask = torch.ones(3, 12, dtype=torch.bool)
        action, logp, entropy, value = model.act(obs, mask)
        assert action.shape == logp.shape == entropy.shape == value.shape == (3,)

    def test_masked_actions_never_sampled(self):
        model = ActorCritic(8, 12, hidden_size=16, hidden_layers=1)
        mask = torch.zeros(64, 12, dtype=torch.bool)
        mask[:, 3] = True
        mask[:, 7] = True
        action, _, _, _ = model.act(torch.randn(64, 8), mask)
        assert set(action.tolist()) <= {3, 7}

    def test_policy_head_starts_near_uniform(self):
        model = ActorCritic(8, 12, hidden_size=16, hidden_layers=1)
        probs = model.distribution(torch.randn(4, 8), torch.ones(4, 12, dtype=torch.bool)).probs
        assert torch.allclose(probs, torch.full_like(probs, 1 / 12), atol=0.02)

    def test_remap_actions(self):
        model = ActorCritic(8, 12, hidden_size=16, hidden_layers=1)
        old = model.actor.net[-1]
        old_weight, old_bias = old.weight.detach().clone(), old.bias.detach().clone()
        model.remap_actions([0, None, 5])
        head = model.actor.net[-1]
        assert model.num_actions == 3
        assert head.out_features == 3
        assert torch.equal(head.weight[0], old_weight[0])
        assert torch.equal(head.weight[2], old_weight[5])
        assert head.bias[2].item() == old_bias[5].item()


# ============================================================================
# PPO
# ============================================================================


class TestAdvantages:
    """Tests for generalized advantage estimation."""

    def test_undiscounted_sum(self):
        adv, ret = compute_gae([1, 1, 1], [0, 0, 0], [0, 0, 0], 0.0, gamma=1.0, gae_lambda=1.0)
        assert adv.tolist() == [3.0, 2.0, 1.0]
        assert ret.tolist() == [3.0, 2.0, 1.0]

    def test_episode_boundary(self):
        adv, _ = compute_gae([1, 1, 1], [0, 0, 0], [0, 1, 0], 0.0, gamma=1.0, gae_lambda=1.0)
        assert adv.tolist() == [2.0, 1.0, 1.0]

    def test_discounting(self):
        adv, _ = compute_gae([0, 0, 1], [0, 0, 0], [0, 0, 0], 0.0, gamma=0.5, gae_lambda=1.0)
        assert adv.tolist() == [0.25, 0.5, 1.0]

    def test_bootstrap(self):
        adv, _ = compute_gae([1], [0], [0], 2.0, gamma=0.4, gae_lambda=0.9)
        assert adv[0] == pytest.approx(1.8)
        adv, _ = compute_gae([1], [0], [1], 2.0, gamma=0.4, gae_lambda=0.9)
        assert adv[0] == pytest.approx(1.0)

    def test_returns_add_values(self):
        adv, ret = compute_gae([1], [0.5], [1], 0.0, gamma=0.9, gae_lambda=0.9)
        assert adv[0] == pytest.approx(0.5)
        assert ret[0] == pytest.approx(1.0)

    def test_per_actor_columns(self):
        adv, _ = compute_gae([[1, 0], [1, 1]], [[0, 0], [0, 0]], [[0, 0], [0, 0]], [0, 0], 1.0, 1.0)
        assert adv.tolist() == [[2.0, 1.0], [1.0, 1.0]]

    def test_matches_truncated_sums_on_random_rollouts(self):
        """Each advantage is the (γλ)-discounted sum of TD errors up to the episode end."""
        rng = np.random.default_rng(7)
        gamma, lam = 0.999, 0.95
        for _ in range(100):
            steps = int(rng.integers(1, 60))
            rewards = rng.normal(size=steps)
            values = rng.normal(size=steps)
            dones = (rng.random(steps) < 0.1).astype(np.float64)
            next_value = float(rng.normal())

            expected = np.zeros(steps)
            for t in range(steps):
                weight = 1.0
                for k in range(t, steps):
                    following = next_value if k == steps - 1 else values[k + 1]
                    delta = rewards[k] + gamma * following * (1.0 - dones[k]) - values[k]
                    expected[t] += weight * delta
                    if dones[k]:
                        break
                    weight *= gamma * lam

            adv, ret = compute_gae(rewards, values, dones, next_value, gamma, lam)
            np.testing.assert_allclose(adv, expected, rtol=0, atol=1e-10)
            np.testing.assert_allclose(ret, expected + values, rtol=0, atol=1e-10)


class TestLosses:
    """Tests for the clipped surrogate and value losses."""

    def test_policy_loss_at_ratio_one(self):
        new = torch.zeros(3, requires_grad=True)
        advantages = torch.tensor([1.0, -1.0, 2.0])
        loss, clip_frac = clipped_policy_loss(new, torch.zeros(3), advantages, 0.2)
        assert loss.item() == pytest.approx(-2 / 3)
        assert clip_frac.item() == 0.0
        loss.backward()
        assert torch.allclose(new.grad, -advantages / 3)

    def test_policy_loss_clips_large_ratio(self):
        new = torch.tensor([math.log(2.0)])
        loss, clip_frac = clipped_policy_loss(new, torch.zeros(1), torch.ones(1), 0.2)
        assert loss.item() == pytest.approx(-1.2)
        assert clip_frac.item() == 1.0

    def test_value_loss(self):
        new, old, ret = torch.tensor([0.8]), torch.tensor([0.0]), torch.tensor([0.0])
        assert clipped_value_loss(new, old, ret, 0.2).item() == pytest.approx(0.32)
        assert clipped_value_loss(new, old, ret, 0.2, clip=False).item() == pytest.approx(0.32)

    def test_value_loss_takes_clipped_when_larger(self):
        new, old, ret = torch.tensor([0.5]), torch.tensor([0.0]), torch.tensor([0.5])
        assert clipped_value_loss(new, old, ret, 0.2).item() == pytest.approx(0.045)
        assert clipped_value_loss(new, old, ret, 0.2, clip=False).item() == 0.0

    def test_linear_lr(self):
        assert linear_lr(1.0, 1, 4) == 1.0
        assert linear_lr(1.0, 4, 4) == 0.25

    @pytest.mark.parametrize("term", ["policy_loss", "value_loss", "loss"])
    def test_gradients_match_central_differences(self, term):
        torch.manual_seed(3)
        model = ActorCritic(6, 12, hidden_size=4, hidden_layers=1).double()
        size = 16
        obs = torch.randn(size, 6, dtype=torch.float64)
        masks = torch.ones(size, 12, dtype=torch.bool)
        masks[::2, 5:9] = False
        actions = torch.arange(size) % 5
        with torch.no_grad():
            _, logp, _, values = model.act(obs, masks, actions)
        batch = RolloutBatch(
            obs=obs,
            masks=masks,
            actions=actions,
            logprobs=logp + 0.05,
            values=values - 0.05,
            advantages=torch.randn(size, dtype=torch.float64),
            returns=torch.randn(size, dtype=torch.float64),
        )
        cfg = _small_ppo()
        params = list(model.parameters())

        model.zero_grad()
        getattr(ppo_loss(model, batch, cfg), term).backward()
        grads = [torch.zeros_like(p) if p.grad is None else p.grad for p in params]
        analytic = torch.nn.utils.parameters_to_vector(grads).numpy()

        base = torch.nn.utils.parameters_to_vector(params).detach().clone()
        step = 1e-5
        numeric = np.zeros_like(analytic)
        with torch.no_grad():
            for i in range(base.numel()):
                values_at = []
                for sign in (1.0, -1.0):
                    shifted = base.clone()
                    shifted[i] += sign * step
                    torch.nn.utils.vector_to_parameters(shifted, params)
                    values_at.append(getattr(ppo_loss(model, batch, cfg), term).item())
                numeric[i] = (values_at[0] - values_at[1]) / (2 * step)
            torch.nn.utils.vector_to_parameters(base, params)

        assert np.abs(analytic).max() > 0
        np.testing.assert_allclose(analytic, numeric, rtol=1e-4, atol=1e-8)


class TestUpdate:
    """Tests for one PPO update."""

    def test_update_runs_every_minibatch(self):
        torch.manual_seed(0)
        cfg = _small_ppo(epochs=2, target_kl=None)
        model = ActorCritic(4, 12, cfg.hidden_size, cfg.hidden_layers)
        before = _snapshot(model)
        optimizer = torch.optim.Adam(model.parameters(), lr=1e-3)
        stats = ppo_update(model, optimizer, _batch(model), cfg, torch.Generator().manual_seed(0))
        assert stats.minibatches_run == 4
        assert not stats.early_stopped
        assert stats.learning_rate == 1e-3
        assert any(not torch.equal(before[k], v) for k, v in model.state_dict().items())

    def test_kl_spike_stops_before_stepping(self):
        torch.manual_seed(0)
        cfg = _small_ppo(target_kl=0.01)
        model = ActorCritic(4, 12, cfg.hidden_size, cfg.hidden_layers)
        head = model.actor.net[-1]
        with torch.no_grad():
            head.weight.zero_()
            head.bias.copy_(torch.linspace(-6.0, 6.0, 12))
        before = _snapshot(model)
        optimizer = torch.optim.Adam(model.parameters(), lr=1e-3)
        stats = ppo_update(model, optimizer, _batch(model, uniform_logprobs=True), cfg)
        assert stats.early_stopped
        assert stats.minibatches_run == 0
        assert stats.approx_kl > 1.0
        assert stats.clip_frac == 1.0
        assert all(torch.equal(before[k], v) for k, v in model.state_dict().items())

    def test_non_finite_loss(self):
        cfg = _small_ppo(target_kl=None)
        model = ActorCritic(4, 12, cfg.hidden_size, cfg.hidden_layers)
        batch = _batch(model)
        batch.advantages[0] = float("nan")
        with pytest.raises(TrainingError):
            ppo_update(model, torch.optim.Adam(model.parameters()), batch, cfg)

    def test_batch_split_must_match(self):
        with pytest.raises(ValueError):
            PPOConfig(actors=2, rollout_length=10, minibatches=3, minibatch_size=7)


# ============================================================================
# Checkpoints
# ============================================================================


class TestCheckpoint:
    """Tests for the checkpoint file format."""

    def test_round_trip(self, tmp_path):
        model = ActorCritic(4, 12, hidden_size=8, hidden_layers=1)
        optimizer = torch.optim.Adam(model.parameters())
        path = tmp_path / "run" / "model.ckpt"
        save_checkpoint(path, model, optimizer, {"updates": 3})
        assert path.read_bytes()[:8] == b"ACWBCKPT"
        assert path.with_suffix(".optim").exists()

        other = ActorCritic(4, 12, hidden_size=8, hidden_layers=1)
        metadata = load_checkpoint(path, other, torch.optim.Adam(other.parameters()))
        assert metadata == {"updates": 3}
        for (name, a), (_, b) in zip(model.named_parameters(), other.named_parameters()):
            assert torch.equal(a, b), name

    def test_header(self, tmp_path):
        model = ActorCritic(4, 12, hidden_size=8, hidden_layers=1)
        save_checkpoint(tmp_path / "m.ckpt", model)
        header, flat = read_checkpoint(tmp_path / "m.ckpt")
        assert header["version"] == 1
        assert header["dtype"] == "float32"
        assert flat.shape[0] == sum(p.numel() for p in model.parameters())

    def test_layout_mismatch(self, tmp_path):
        save_checkpoint(tmp_path / "m.ckpt", ActorCritic(4, 12, hidden_size=8, hidden_layers=1))
        with pytest.raises(CheckpointError):
            load_checkpoint(tmp_path / "m.ckpt", ActorCritic(4, 13, hidden_size=8, hidden_layers=1))

    def test_trailing_values(self, tmp_path):
        model = ActorCritic(4, 12, hidden_size=8, hidden_layers=1)
        path = tmp_path / "m.ckpt"
        save_checkpoint(path, model)
        path.write_bytes(path.read_bytes() + b"\0" * 4)
        with pytest.raises(CheckpointError):
            load_checkpoint(path, model)

    def test_bad_magic_and_version(self, tmp_path):
        path = tmp_path / "bad.ckpt"
        path.write_bytes(b"NOTACKPT" + b"\0" * 8)
        with pytest.raises(CheckpointError):
            read_checkpoint(path)
        path.write_bytes(struct.pack("<8sII", b"ACWBCKPT", 2, 2) + b"{}")
        with pytest.raises(CheckpointError):
            read_checkpoint(path)
        path.write_bytes(b"AC")
        with pytest.raises(CheckpointError):
            read_checkpoint(path)


# ============================================================================
# Training
# ============================================================================


class TestTrainer:
    """Smoke tests for the training loop."""

    @pytest.fixture
    def configs(self):
        env_cfg = EnvConfig(horizon=5, max_relator_length=8)
        ppo_cfg = PPOConfig(
            actors=2, rollout_length=4, minibatches=2, minibatch_size=4, hidden_size=16, hidden_layers=1
        )
        return env_cfg, ppo_cfg

    def test_train_writes_outputs(self, tmp_path, configs, one_move):
        env_cfg, ppo_cfg = configs
        report = train([one_move, gen_AK(2)], env_cfg, ppo_cfg, total_rollouts=2, seed=1, out_dir=tmp_path)
        assert report.updates == 2
        assert report.env_steps == 16
        assert len(report.history) == 2
        assert (tmp_path / "checkpoints" / "final.ckpt").exists()
        registry = (tmp_path / "solved_registry.tsv").read_text().splitlines()
        assert registry[0] == "index\tpresentation\tpath_length\tpath"
        assert len(registry) == len(report.solved) + 1
        for index in report.solved:
            assert (tmp_path / "paths" / f"{index:04d}.txt").exists()

    def test_dataset_must_fit_width(self, configs, ak3):
        env_cfg, ppo_cfg = configs
        with pytest.raises(ValueError):
            PPOTrainer([ak3, Presentation("x", "y" * 9)], env_cfg, ppo_cfg)

    def test_adaptation_grows_the_policy_head(self, configs, one_move):
        env_cfg, ppo_cfg = configs
        adapter = ActionSpaceAdapter(AdaptConfig(window=1, top_k=1, min_support=1, max_len=2))
        trainer = PPOTrainer([one_move, gen_AK(2)], env_cfg, ppo_cfg, adapter=adapter, adapt_every=1)
        trainer.scheduler.record(0, [3, 1, 3])
        trainer._adapt()
        assert trainer.actions[-1] == (1, 3)
        assert trainer.model.num_actions == 13
        assert all(env.num_actions == 13 for env in trainer.envs)
        report = trainer.run(1)
        assert report.updates == 1

    def test_updates_accumulate_across_runs(self, configs, one_move):
        env_cfg, ppo_cfg = configs
        trainer = PPOTrainer([one_move], env_cfg, ppo_cfg)
        trainer.run(2)
        report = trainer.run(1)
        assert report.updates == 3
        assert report.env_steps == 24

    @pytest.mark.slow
    def test_solves_ak2(self):
        """AK(2) alone, relator bound 7, 8 actors x 200 steps, fixed lr 2.5e-4, at most 600 rollouts."""
        env_cfg = EnvConfig(horizon=200, max_relator_length=7)
        ppo_cfg = PPOConfig(
            actors=8,
            rollout_length=200,
            lr=2.5e-4,
            anneal_lr=False,
            minibatches=4,
            minibatch_size=400,
            hidden_size=64,
            hidden_layers=2,
        )
        trainer = PPOTrainer([gen_AK(2)], env_cfg, ppo_cfg, seed=0)
        while 0 not in trainer.scheduler.solved and trainer.updates < 600:
            trainer.run(20, log_every=0)
        assert 0 in trainer.scheduler.solved
        path = trainer.scheduler.solved[0]
        assert is_trivial_state(apply_sequence(gen_AK(2), path))
