"""
PPO with clipped surrogate, clipped value loss and an entropy bonus.

Advantages are computed with GAE in float64 numpy. One update runs
``epochs`` passes of shuffled minibatches over the flattened rollout and
stops early, before stepping, on the first minibatch whose approximate KL
divergence from the rollout policy exceeds ``target_kl``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np
import numpy.typing as npt
import torch
import torch.nn as nn

from ac_workbench.exceptions import TrainingError
from ac_workbench.models.config import PPOConfig
from ac_workbench.models.results import UpdateStats
from ac_workbench.rl.networks import ActorCritic

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]


def compute_gae(
    rewards: npt.ArrayLike,
    values: npt.ArrayLike,
    dones: npt.ArrayLike,
    next_value: npt.ArrayLike,
    gamma: float,
    gae_lambda: float,
) -> tuple[FloatArray, FloatArray]:
    """Generalized advantage estimates and returns over the leading time axis.

    ``dones[t]`` marks that the episode ended with step ``t``; ``next_value``
    is the critic's estimate of the state following the last step.
    """
    r = np.asarray(rewards, dtype=np.float64)
    v = np.asarray(values, dtype=np.float64)
    d = np.asarray(dones, dtype=np.float64)
    boot = np.asarray(next_value, dtype=np.float64)
    advantages = np.zeros_like(r)
    running: FloatArray | float = np.zeros_like(r[0]) if r.ndim > 1 else 0.0
    for t in reversed(range(r.shape[0])):
        following = boot if t == r.shape[0] - 1 else v[t + 1]
        nonterminal = 1.0 - d[t]
        delta = r[t] + gamma * following * nonterminal - v[t]
        running = delta + gamma * gae_lambda * nonterminal * running
        advantages[t] = running
    return advantages, advantages + v


def clipped_policy_loss(
    new_logp: torch.Tensor, old_logp: torch.Tensor, advantages: torch.Tensor, clip_coef: float
) -> tuple[torch.Tensor, torch.Tensor]:
    """Negated clipped surrogate and the fraction of samples where clipping was active."""
    ratio = torch.exp(new_logp - old_logp)
    unclipped = ratio * advantages
    clipped = torch.clamp(ratio, 1.0 - clip_coef, 1.0 + clip_coef) * advantages
    loss = -torch.min(unclipped, clipped).mean()
    clip_frac = ((ratio - 1.0).abs() > clip_coef).float().mean()
    return loss, clip_frac


def clipped_value_loss(
    new_values: torch.Tensor,
    old_values: torch.Tensor,
    returns: torch.Tensor,
    clip_coef: float,
    clip: bool = True,
) -> torch.Tensor:
    unclipped = (new_values - returns) ** 2
    if not clip:
        return 0.5 * unclipped.mean()
    limited = old_values + torch.clamp(new_values - old_values, -clip_coef, clip_coef)
    return 0.5 * torch.max(unclipped, (limited - returns) ** 2).mean()


@dataclass
class RolloutBatch:
    """Flattened rollout ready for minibatching."""

    obs: torch.Tensor
    masks: torch.Tensor
    actions: torch.Tensor
    logprobs: torch.Tensor
    values: torch.Tensor
    advantages: torch.Tensor
    returns: torch.Tensor

    def __len__(self) -> int:
        return int(self.actions.shape[0])

    def take(self, idx: torch.Tensor) -> RolloutBatch:
        return RolloutBatch(
            obs=self.obs[idx],
            masks=self.masks[idx],
            actions=self.actions[idx],
            logprobs=self.logprobs[idx],
            values=self.values[idx],
            advantages=self.advantages[idx],
            returns=self.returns[idx],
        )


@dataclass
class LossTerms:
    loss: torch.Tensor
    policy_loss: torch.Tensor
    value_loss: torch.Tensor
    entropy: torch.Tensor
    approx_kl: torch.Tensor
    clip_frac: torch.Tensor


def ppo_loss(model: ActorCritic, batch: RolloutBatch, cfg: PPOConfig) -> LossTerms:
    """Total loss policy + c1·value − c2·entropy on one minibatch."""
    _, new_logp, entropy, new_values = model.act(batch.obs, batch.masks, batch.actions)
    policy_loss, clip_frac = clipped_policy_loss(new_logp, batch.logprobs, batch.advantages, cfg.clip_coef)
    value_loss = clipped_value_loss(new_values, batch.values, batch.returns, cfg.clip_coef, cfg.clip_value_loss)
    entropy_mean = entropy.mean()
    loss = policy_loss + cfg.value_coef * value_loss - cfg.entropy_coef * entropy_mean
    with torch.no_grad():
        approx_kl = (batch.logprobs - new_logp).mean()
    return LossTerms(loss, policy_loss, value_loss, entropy_mean, approx_kl, clip_frac)


def set_learning_rate(optimizer: torch.optim.Optimizer, lr: float) -> None:
    for group in optimizer.param_groups:
        group["lr"] = lr


def ppo_update(
    model: ActorCritic,
    optimizer: torch.optim.Optimizer,
    batch: RolloutBatch,
    cfg: PPOConfig,
    generator: torch.Generator | None = None,
) -> UpdateStats:
    """One PPO update over ``batch``.

    Raises:
        TrainingError: a minibatch produced a non-finite loss.
    """
    if cfg.norm_advantages:
        adv = batch.advantages
        batch = replace(batch, advantages=(adv - adv.mean()) / (adv.std(unbiased=False) + 1e-8))

    totals = {"policy": 0.0, "value": 0.0, "entropy": 0.0, "kl": 0.0, "clip": 0.0}
    evaluated = 0
    stepped = 0
    stopped = False
    for _ in range(cfg.epochs):
        order = torch.randperm(len(batch), generator=generator)
        for start in range(0, len(batch), cfg.minibatch_size):
            minibatch = batch.take(order[start : start + cfg.minibatch_size])
            terms = ppo_loss(model, minibatch, cfg)
            if not torch.isfinite(terms.loss):
                raise TrainingError(f"Non-finite loss {terms.loss.item()} after {stepped} minibatch steps")
            evaluated += 1
            totals["policy"] += terms.policy_loss.item()
            totals["value"] += terms.value_loss.item()
            totals["entropy"] += terms.entropy.item()
            totals["kl"] += terms.approx_kl.item()
            totals["clip"] += terms.clip_frac.item()
            if cfg.target_kl is not None and terms.approx_kl.item() > cfg.target_kl:
                logger.debug("KL %.4f above target after %d minibatches", terms.approx_kl.item(), stepped)
                stopped = True
                break
            optimizer.zero_grad()
            terms.loss.backward()
            nn.utils.clip_grad_norm_(model.parameters(), cfg.max_grad_norm)
            optimizer.step()
            stepped += 1
        if stopped:
            break

    n = max(evaluated, 1)
    return UpdateStats(
        policy_loss=totals["policy"] / n,
        value_loss=totals["value"] / n,
        entropy=totals["entropy"] / n,
        approx_kl=totals["kl"] / n,
        clip_frac=totals["clip"] / n,
        minibatches_run=stepped,
        early_stopped=stopped,
        learning_rate=float(optimizer.param_groups[0]["lr"]),
    )


def linear_lr(base_lr: float, update: int, total_updates: int) -> float:
    """Learning rate for 1-based ``update`` decaying linearly toward 0."""
    return base_lr * (1.0 - (update - 1) / max(total_updates, 1))


def check_finite(model: nn.Module) -> None:
    for name, param in model.named_parameters():
        if not torch.isfinite(param).all():
            raise TrainingError(f"Parameter {name} is not finite")

