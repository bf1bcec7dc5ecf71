"""
PPO training loop over a presentation dataset.

Each update collects ``rollout_length`` steps from ``actors`` environments,
computes GAE, and runs :func:`ppo_update` with a linearly decaying learning
rate. Every trivializing episode is recorded in the curriculum registry
(shortest path per presentation). With an output directory the trainer
writes checkpoints, ``solved_registry.tsv`` and one move-path file per
solved presentation under ``paths/``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from pathlib import Path

import numpy as np
import torch

from ac_workbench.analysis.supermoves import ActionSpaceAdapter
from ac_workbench.core.presentation import Presentation, format_presentation
from ac_workbench.enums import MoveSet
from ac_workbench.exceptions import TrainingError
from ac_workbench.models.config import EnvConfig, PPOConfig
from ac_workbench.models.results import TrainingReport, UpdateStats
from ac_workbench.rl.checkpoint import save_checkpoint
from ac_workbench.rl.env import PLAIN_ACTIONS, ACEnv, Action
from ac_workbench.rl.networks import ActorCritic
from ac_workbench.rl.ppo import RolloutBatch, check_finite, compute_gae, linear_lr, ppo_update, set_learning_rate
from ac_workbench.rl.scheduler import CurriculumScheduler
from ac_workbench.utils.formatters import format_move_path

logger = logging.getLogger(__name__)


class PPOTrainer:
    """Owns the environments, networks, optimizer and curriculum for one run."""

    def __init__(
        self,
        dataset: Sequence[Presentation],
        env_cfg: EnvConfig | None = None,
        ppo_cfg: PPOConfig | None = None,
        seed: int = 0,
        out_dir: Path | None = None,
        actions: Sequence[Action] = PLAIN_ACTIONS,
        adapter: ActionSpaceAdapter | None = None,
        adapt_every: int = 0,
    ) -> None:
        self.env_cfg = env_cfg or EnvConfig()
        self.ppo_cfg = ppo_cfg or PPOConfig()
        width = self.env_cfg.max_relator_length
        too_long = [i for i, p in enumerate(dataset) if p.max_relator_length > width]
        if too_long:
            raise ValueError(f"{len(too_long)} presentations exceed relator width {width} (first: {too_long[0]})")

        torch.manual_seed(seed)
        self.rng = np.random.default_rng(seed)
        self.generator = torch.Generator().manual_seed(seed)
        self.dataset = list(dataset)
        self.out_dir = out_dir
        self.adapter = adapter
        self.adapt_every = adapt_every

        self.scheduler = CurriculumScheduler(self.dataset, self.env_cfg.solved_probability, self.rng)
        self.envs = [ACEnv(self.env_cfg, actions) for _ in range(self.ppo_cfg.actors)]
        self.model = ActorCritic(
            self.envs[0].observation_size,
            self.envs[0].num_actions,
            self.ppo_cfg.hidden_size,
            self.ppo_cfg.hidden_layers,
        )
        self.optimizer = self._make_optimizer()
        self.current = [0] * len(self.envs)
        self.obs = np.stack([self._reset(i) for i in range(len(self.envs))])
        self.updates = 0
        self.env_steps = 0
        self.history: list[UpdateStats] = []

    def _make_optimizer(self) -> torch.optim.Adam:
        return torch.optim.Adam(self.model.parameters(), lr=self.ppo_cfg.lr, eps=self.ppo_cfg.adam_eps)

    def _reset(self, actor: int) -> np.ndarray:
        index = self.scheduler.next()
        self.current[actor] = index
        return self.envs[actor].reset(self.dataset[index])

    @property
    def actions(self) -> list[Action]:
        return self.envs[0].actions

    # ------------------------------------------------------------------------
    # Rollouts
    # ------------------------------------------------------------------------

    def collect(self) -> RolloutBatch:
        """Step every environment ``rollout_length`` times and return the flattened batch."""
        steps, actors = self.ppo_cfg.rollout_length, len(self.envs)
        obs_buf = np.zeros((steps, actors, self.obs.shape[1]), dtype=np.float32)
        mask_buf = np.zeros((steps, actors, len(self.actions)), dtype=np.bool_)
        act_buf = np.zeros((steps, actors), dtype=np.int64)
        logp_buf = np.zeros((steps, actors), dtype=np.float32)
        val_buf = np.zeros((steps, actors), dtype=np.float32)
        rew_buf = np.zeros((steps, actors), dtype=np.float64)
        done_buf = np.zeros((steps, actors), dtype=np.float64)

        for t in range(steps):
            masks = np.stack([env.action_mask() for env in self.envs])
            with torch.no_grad():
                action, logp, _, value = self.model.act(torch.from_numpy(self.obs), torch.from_numpy(masks))
            obs_buf[t], mask_buf[t] = self.obs, masks
            act_buf[t], logp_buf[t], val_buf[t] = action.numpy(), logp.numpy(), value.numpy()
            for i, env in enumerate(self.envs):
                result = env.step(int(act_buf[t, i]))
                rew_buf[t, i] = result.reward
                done_buf[t, i] = float(result.done)
                if result.solved and env.state is not None:
                    self._record_solve(self.current[i], env.state.path)
                self.obs[i] = self._reset(i) if result.done else result.observation
        self.env_steps += steps * actors

        with torch.no_grad():
            next_value = self.model.value(torch.from_numpy(self.obs)).numpy()
        advantages, returns = compute_gae(
            rew_buf, val_buf, done_buf, next_value, self.ppo_cfg.gamma, self.ppo_cfg.gae_lambda
        )
        total = steps * actors
        return RolloutBatch(
            obs=torch.from_numpy(obs_buf.reshape(total, -1)),
            masks=torch.from_numpy(mask_buf.reshape(total, -1)),
            actions=torch.from_numpy(act_buf.reshape(total)),
            logprobs=torch.from_numpy(logp_buf.reshape(total)),
            values=torch.from_numpy(val_buf.reshape(total)),
            advantages=torch.from_numpy(advantages.reshape(total).astype(np.float32)),
            returns=torch.from_numpy(returns.reshape(total).astype(np.float32)),
        )

    def _record_solve(self, index: int, path: list[int]) -> None:
        previous = self.scheduler.solved.get(index)
        self.scheduler.record(index, path)
        if self.out_dir is not None and (previous is None or len(path) < len(previous)):
            target = self.out_dir / "paths" / f"{index:04d}.txt"
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(format_move_path(path, MoveSet.PRIME))

    # ------------------------------------------------------------------------
    # Updates
    # ------------------------------------------------------------------------

    def _adapt(self) -> None:
        assert self.adapter is not None
        old = self.actions
        new = self.adapter.record(self.env_steps, dict(self.scheduler.solved))
        if new == old:
            return
        position = {a: i for i, a in enumerate(old)}
        self.model.remap_actions([position.get(a) for a in new])
        for env in self.envs:
            env.actions = list(new)
        self.optimizer = self._make_optimizer()
        logger.info("Action space now has %d actions (%d supermoves)", len(new), len(new) - len(PLAIN_ACTIONS))

    def run(self, total_rollouts: int, checkpoint_every: int = 0, log_every: int = 10) -> TrainingReport:
        try:
            for update in range(1, total_rollouts + 1):
                lr = linear_lr(self.ppo_cfg.lr, update, total_rollouts) if self.ppo_cfg.anneal_lr else self.ppo_cfg.lr
                set_learning_rate(self.optimizer, lr)
                batch = self.collect()
                stats = ppo_update(self.model, self.optimizer, batch, self.ppo_cfg, self.generator)
                check_finite(self.model)
                self.history.append(stats)
                self.updates += 1
                if log_every and update % log_every == 0:
                    logger.info(
                        "update %d/%d steps=%d solved=%d policy=%.4f value=%.4f entropy=%.4f kl=%.5f",
                        update,
                        total_rollouts,
                        self.env_steps,
                        len(self.scheduler.solved),
                        stats.policy_loss,
                        stats.value_loss,
                        stats.entropy,
                        stats.approx_kl,
                    )
                if self.adapter is not None and self.adapt_every and update % self.adapt_every == 0:
                    self._adapt()
                if self.out_dir is not None and checkpoint_every and update % checkpoint_every == 0:
                    self.save(self.out_dir / "checkpoints" / f"update_{update:06d}.ckpt")
        except TrainingError:
            if self.out_dir is not None:
                self.save(self.out_dir / "checkpoints" / "abort.ckpt")
            raise
        if self.out_dir is not None:
            self.save(self.out_dir / "checkpoints" / "final.ckpt")
            self.write_registry(self.out_dir / "solved_registry.tsv")
        return self.report()

    def save(self, path: Path) -> None:
        save_checkpoint(
            path,
            self.model,
            self.optimizer,
            {"updates": self.updates, "env_steps": self.env_steps, "actions": [list(a) for a in self.actions]},
        )

    def write_registry(self, path: Path) -> None:
        lines = ["index\tpresentation\tpath_length\tpath"]
        for index in sorted(self.scheduler.solved):
            moves = self.scheduler.solved[index]
            lines.append(
                f"{index}\t{format_presentation(self.dataset[index])}\t{len(moves)}\t{' '.join(map(str, moves))}"
            )
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("\n".join(lines) + "\n")

    def report(self) -> TrainingReport:
        return TrainingReport(
            updates=self.updates,
            env_steps=self.env_steps,
            solved={i: list(p) for i, p in sorted(self.scheduler.solved.items())},
            history=list(self.history),
        )


def train(
    dataset: Sequence[Presentation],
    env_cfg: EnvConfig | None = None,
    ppo_cfg: PPOConfig | None = None,
    total_rollouts: int = 100,
    seed: int = 0,
    out_dir: Path | None = None,
    checkpoint_every: int = 0,
) -> TrainingReport:
    """Train from scratch and return the solved registry and per-update statistics."""
    trainer = PPOTrainer(dataset, env_cfg, ppo_cfg, seed=seed, out_dir=out_dir)
    return trainer.run(total_rollouts, checkpoint_every=checkpoint_every)
