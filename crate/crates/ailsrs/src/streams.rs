//! Stream-id registry.
//!
//! Every source of randomness in a run derives its stream id here, from a
//! purpose tag plus up to two indices (iteration, direction, episode, ...).
//! Layout: tag in the top 16 bits, first index in the middle 24, second index
//! in the low 24. Keeping the derivation in one place is what makes rollout
//! parallelism unable to change sampled noise: nothing ever shares a stream.

use crate::rng::RngStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u16)]
enum Tag {
    DirectionSampling = 1,
    RolloutEnv = 2,
    Eval = 3,
    ExpertEpisode = 4,
    DiscInit = 5,
    DiscExpertBatch = 6,
    DiscPolicyBatch = 7,
    MonteCarlo = 8,
    BcIterative = 9,
    EvalPanel = 10,
}

fn id(tag: Tag, a: u64, b: u64) -> u64 {
    debug_assert!(a < (1 << 24) && b < (1 << 24), "stream index out of range");
    ((tag as u64) << 48) | (a << 24) | b
}

/// Stream for sampling the iteration's perturbation directions.
pub fn directions(seed: u64, iteration: u64) -> RngStream {
    RngStream::new(seed, id(Tag::DirectionSampling, iteration, 0))
}

/// Environment stream for the rollouts of one direction pair. The `+` and
/// `-` rollouts both start from this stream, so an antithetic pair sees the
/// same initial state and the return difference isolates the perturbation.
pub fn rollout_env(seed: u64, iteration: u64, direction: u64) -> RngStream {
    RngStream::new(seed, id(Tag::RolloutEnv, iteration, direction))
}

/// Per-iteration evaluation rollout (metrics only).
pub fn eval(seed: u64, iteration: u64) -> RngStream {
    RngStream::new(seed, id(Tag::Eval, iteration, 0))
}

/// Fixed evaluation panel episode, independent of training iteration.
pub fn eval_panel(seed: u64, episode: u64) -> RngStream {
    RngStream::new(seed, id(Tag::EvalPanel, episode, 0))
}

/// Expert demonstration episode `k` during dataset recording.
pub fn expert_episode(seed: u64, episode: u64) -> RngStream {
    RngStream::new(seed, id(Tag::ExpertEpisode, episode, 0))
}

/// Discriminator weight initialization.
pub fn disc_init(seed: u64) -> RngStream {
    RngStream::new(seed, id(Tag::DiscInit, 0, 0))
}

/// Expert minibatch sampling for discriminator step `step` of iteration `t`.
pub fn disc_expert_batch(seed: u64, iteration: u64, step: u64) -> RngStream {
    RngStream::new(seed, id(Tag::DiscExpertBatch, iteration, step))
}

/// Policy minibatch sampling for discriminator step `step` of iteration `t`.
pub fn disc_policy_batch(seed: u64, iteration: u64, step: u64) -> RngStream {
    RngStream::new(seed, id(Tag::DiscPolicyBatch, iteration, step))
}

/// Monte-Carlo cost estimation episode (e.g. the LQR optimum).
pub fn monte_carlo(seed: u64, episode: u64) -> RngStream {
    RngStream::new(seed, id(Tag::MonteCarlo, episode, 0))
}

/// Iterative behavioral-cloning optimizer initialization.
pub fn bc_iterative(seed: u64) -> RngStream {
    RngStream::new(seed, id(Tag::BcIterative, 0, 0))
}
