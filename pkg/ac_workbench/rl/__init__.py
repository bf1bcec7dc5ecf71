"""Trivialization environment and PPO trainer."""

from ac_workbench.rl.checkpoint import load_checkpoint, read_checkpoint, save_checkpoint
from ac_workbench.rl.env import PLAIN_ACTIONS, ACEnv, EnvState, StepResult, decode, encode, observation
from ac_workbench.rl.networks import MASK_VALUE, Actor, ActorCritic, Critic, layer_init
from ac_workbench.rl.ppo import (
    RolloutBatch,
    clipped_policy_loss,
    clipped_value_loss,
    compute_gae,
    linear_lr,
    ppo_loss,
    ppo_update,
)
from ac_workbench.rl.scheduler import CurriculumScheduler
from ac_workbench.rl.trainer import PPOTrainer, train

__all__ = [
    # Environment
    "ACEnv",
    "EnvState",
    "PLAIN_ACTIONS",
    "StepResult",
    "decode",
    "encode",
    "observation",
    # Curriculum
    "CurriculumScheduler",
    # Networks
    "MASK_VALUE",
    "Actor",
    "ActorCritic",
    "Critic",
    "layer_init",
    # PPO
    "RolloutBatch",
    "clipped_policy_loss",
    "clipped_value_loss",
    "compute_gae",
    "linear_lr",
    "ppo_loss",
    "ppo_update",
    # Training
    "PPOTrainer",
    "train",
    # Checkpoints
    "load_checkpoint",
    "read_checkpoint",
    "save_checkpoint",
]
