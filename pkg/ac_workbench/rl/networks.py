"""Independent actor and critic MLPs with masked categorical policies."""

from __future__ import annotations

import math

import torch
import torch.nn as nn
from torch.distributions import Categorical

MASK_VALUE = -1e9


def layer_init(layer: nn.Linear, std: float = math.sqrt(2), bias: float = 0.0) -> nn.Linear:
    """Orthogonal weights with gain ``std`` and constant bias."""
    nn.init.orthogonal_(layer.weight, std)
    nn.init.constant_(layer.bias, bias)
    return layer


def mlp(in_features: int, hidden_size: int, hidden_layers: int, out_features: int, out_std: float) -> nn.Sequential:
    layers: list[nn.Module] = []
    width = in_features
    for _ in range(hidden_layers):
        layers += [layer_init(nn.Linear(width, hidden_size)), nn.Tanh()]
        width = hidden_size
    layers.append(layer_init(nn.Linear(width, out_features), std=out_std))
    return nn.Sequential(*layers)


class Actor(nn.Module):
    def __init__(self, obs_size: int, num_actions: int, hidden_size: int = 512, hidden_layers: int = 2) -> None:
        super().__init__()
        self.net = mlp(obs_size, hidden_size, hidden_layers, num_actions, out_std=0.01)

    def forward(self, obs: torch.Tensor) -> torch.Tensor:
        return self.net(obs)


class Critic(nn.Module):
    def __init__(self, obs_size: int, hidden_size: int = 512, hidden_layers: int = 2) -> None:
        super().__init__()
        self.net = mlp(obs_size, hidden_size, hidden_layers, 1, out_std=1.0)

    def forward(self, obs: torch.Tensor) -> torch.Tensor:
        return self.net(obs).squeeze(-1)


class ActorCritic(nn.Module):
    """Actor and critic with separate trunks."""

    def __init__(self, obs_size: int, num_actions: int, hidden_size: int = 512, hidden_layers: int = 2) -> None:
        super().__init__()
        self.obs_size = obs_size
        self.num_actions = num_actions
        self.actor = Actor(obs_size, num_actions, hidden_size, hidden_layers)
        self.critic = Critic(obs_size, hidden_size, hidden_layers)

    def value(self, obs: torch.Tensor) -> torch.Tensor:
        return self.critic(obs)

    def distribution(self, obs: torch.Tensor, mask: torch.Tensor) -> Categorical:
        """Policy over allowed actions; masked logits are replaced before the softmax."""
        logits = self.actor(obs)
        logits = torch.where(mask, logits, torch.full_like(logits, MASK_VALUE))
        return Categorical(logits=logits)

    def act(
        self, obs: torch.Tensor, mask: torch.Tensor, action: torch.Tensor | None = None
    ) -> tuple[torch.Tensor, torch.Tensor, torch.Tensor, torch.Tensor]:
        """Sample (or score) actions: returns action, log-prob, entropy, value."""
        dist = self.distribution(obs, mask)
        if action is None:
            action = dist.sample()
        return action, dist.log_prob(action), dist.entropy(), self.critic(obs)

    def remap_actions(self, sources: list[int | None]) -> None:
        """Rebuild the actor head for a new action list.

        ``sources[j]`` is the old index whose logit row action ``j`` inherits,
        or None for a freshly initialized row.
        """
        old = self.actor.net[-1]
        assert isinstance(old, nn.Linear)
        head = layer_init(nn.Linear(old.in_features, len(sources)), std=0.01).to(old.weight.dtype)
        with torch.no_grad():
            for j, src in enumerate(sources):
                if src is not None:
                    head.weight[j] = old.weight[src]
                    head.bias[j] = old.bias[src]
        self.actor.net[-1] = head
        self.num_actions = len(sources)
